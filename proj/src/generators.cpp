#include "starsym/generators.hpp"

#include "starsym/normalform.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace starsym {

namespace {

std::atomic<std::size_t> g_enumeration_limit{10'000'000};

// Positional reverse-lexicographic comparison on same-size subsets: a beats b
// exactly when the largest index where they differ belongs to b.
bool revlex_desc(FormSubset a, FormSubset b) {
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    int top = 63 - std::countl_zero(diff);
    return ((b.bits >> top) & 1u) != 0;
}

std::vector<FormSubset> subsets_of(FormSubset parent, int k) {
    std::vector<int> base = parent.indices();
    std::vector<FormSubset> out;
    if (k < 0 || k > static_cast<int>(base.size())) return out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<int> chosen(k);
        for (int i = 0; i < k; ++i) chosen[i] = base[pick[i]];
        out.push_back(FormSubset::from_indices(chosen));
        int i = k - 1;
        while (i >= 0 && pick[i] == static_cast<int>(base.size()) - (k - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

void partitions_of_length(int m, int c, int len, Partition& prefix,
                          std::vector<Partition>& out) {
    if (len == 0) {
        if (m == 0) out.push_back(prefix);
        return;
    }
    int bound = prefix.empty() ? c : prefix.back();
    int hi = std::min(bound, m - (len - 1));
    int lo = (m + len - 1) / len;  // parts are weakly decreasing, so first >= average
    for (int d = hi; d >= lo; --d) {
        prefix.push_back(d);
        partitions_of_length(m - d, std::min(c, d), len - 1, prefix, out);
        prefix.pop_back();
    }
}

// Number of nested layer chains realizing the partition: choose layer 1 among
// all s forms, then each layer inside its predecessor; equal consecutive
// sizes force equality and contribute a factor 1.
Int chains_for_partition(const Partition& p, const StarParams& params) {
    Int total = 1;
    int prev = params.s;
    for (int d : p) {
        int size = params.s - params.c + d;
        total *= binomial(prev, size);
        prev = size;
    }
    return total;
}

void emit_chains(const Partition& p, std::size_t depth, const StarParams& params,
                 std::vector<FormSubset>& chain, std::vector<FMonomial>& out) {
    if (depth == p.size()) {
        out.push_back(from_layers(chain, params.s));
        return;
    }
    int want = params.s - params.c + p[depth];
    FormSubset parent = depth == 0 ? FormSubset::full(params.s) : chain[depth - 1];
    if (want == parent.size()) {
        chain.push_back(parent);
        emit_chains(p, depth + 1, params, chain, out);
        chain.pop_back();
        return;
    }
    std::vector<FormSubset> next = subsets_of(parent, want);
    std::sort(next.begin(), next.end(), revlex_desc);
    for (FormSubset layer : next) {
        chain.push_back(layer);
        emit_chains(p, depth + 1, params, chain, out);
        chain.pop_back();
    }
}

std::vector<FMonomial> enumerate_impl(const StarParams& params, bool module_only) {
    params.validate();
    std::vector<Partition> parts = enumerate_partitions(params);
    Int total = 0;
    for (const Partition& p : parts)
        if (!module_only || p[0] >= 2) total += chains_for_partition(p, params);
    if (total > Int(enumeration_limit()))
        throw resource_limit("resource-limit: " + total.str() +
                             " generators exceed the cap of " +
                             std::to_string(enumeration_limit()));
    std::vector<FMonomial> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<FormSubset> chain;
    for (const Partition& p : parts) {
        if (module_only && p[0] < 2) continue;
        emit_chains(p, 0, params, chain, out);
    }
    return out;
}

Int dio_count(const std::vector<int>& b, std::size_t idx, int m_left,
              std::optional<int> t_left) {
    if (idx == b.size())
        return (m_left == 0 && (!t_left || *t_left == 0)) ? 1 : 0;
    Int total = 0;
    int step = b[idx];
    for (int x = 1; x * step <= m_left; ++x) {
        if (t_left && x > *t_left) break;
        std::optional<int> rest = t_left ? std::optional<int>(*t_left - x) : std::nullopt;
        total += dio_count(b, idx + 1, m_left - x * step, rest);
    }
    return total;
}

// C(s, c - b_h) choices for the forms never used, then for each step down the
// element list the forms leaving the support.
Int subset_coefficient(const std::vector<int>& B, const StarParams& params) {
    Int coeff = binomial(params.s, params.c - B.back());
    for (std::size_t i = B.size() - 1; i >= 1; --i)
        coeff *= binomial(params.s - params.c + B[i], B[i] - B[i - 1]);
    return coeff;
}

Int sum_over_subsets(const StarParams& params, std::optional<int> t) {
    Int total = 0;
    std::vector<int> B;
    auto walk = [&](auto&& self, int next) -> void {
        for (int b = next; b <= params.c; ++b) {
            int used = 0;
            for (int e : B) used += e;
            if (used + b > params.m) break;
            B.push_back(b);
            Int solutions = dio_count(B, 0, params.m, t);
            if (solutions != 0) total += solutions * subset_coefficient(B, params);
            self(self, b + 1);
            B.pop_back();
        }
    };
    walk(walk, 1);
    return total;
}

}  // namespace

std::vector<Partition> enumerate_partitions(const StarParams& params,
                                            std::optional<int> t) {
    params.validate();
    const int t_min = (params.m + params.c - 1) / params.c;
    std::vector<Partition> out;
    Partition prefix;
    if (t) {
        if (*t < t_min || *t > params.m)
            throw invalid_input("invalid-range: length must lie in [ceil(m/c), m]");
        partitions_of_length(params.m, params.c, *t, prefix, out);
        return out;
    }
    for (int len = t_min; len <= params.m; ++len)
        partitions_of_length(params.m, params.c, len, prefix, out);
    return out;
}

Partition partition_of(const FMonomial& M, const StarParams& params) {
    params.validate();
    if (static_cast<int>(M.size()) != params.s)
        throw invalid_input("invalid-range: monomial has the wrong number of forms");
    if (support(M).empty())
        throw invalid_input("not-a-generator: the unit monomial");
    Partition p;
    int total = 0;
    for (const FormSubset& layer : normal_form(M)) {
        int d = layer.size() - (params.s - params.c);
        if (d < 1)
            throw invalid_input("not-a-generator: a layer has fewer than s-c+1 forms");
        p.push_back(d);
        total += d;
    }
    if (total != params.m)
        throw invalid_input("not-a-generator: symbolic degree " + std::to_string(total) +
                            " differs from m");
    return p;
}

std::vector<FMonomial> enumerate_generators(const StarParams& params) {
    return enumerate_impl(params, false);
}

std::vector<FMonomial> enumerate_module_generators(const StarParams& params) {
    return enumerate_impl(params, true);
}

std::vector<DiophantineSolution> diophantine_solutions(FormSubset B, int m,
                                                       std::optional<int> t) {
    if (B.empty()) throw invalid_input("empty-subset: B must be nonempty");
    std::vector<int> b = B.indices();
    std::vector<DiophantineSolution> out;
    DiophantineSolution x(b.size());
    auto walk = [&](auto&& self, std::size_t idx, int m_left, std::optional<int> t_left) -> void {
        if (idx == b.size()) {
            if (m_left == 0 && (!t_left || *t_left == 0)) out.push_back(x);
            return;
        }
        for (int v = 1; v * b[idx] <= m_left; ++v) {
            if (t_left && v > *t_left) break;
            x[idx] = v;
            self(self, idx + 1, m_left - v * b[idx],
                 t_left ? std::optional<int>(*t_left - v) : std::nullopt);
        }
    };
    walk(walk, 0, m, t);
    return out;
}

Int count_generators_in_degree(const StarParams& params, int t) {
    params.validate();
    const int t_min = (params.m + params.c - 1) / params.c;
    if (t < t_min || t > params.m)
        throw invalid_input("invalid-range: t must lie in [ceil(m/c), m]");
    return sum_over_subsets(params, t);
}

Int count_generators_closed(const StarParams& params, int t) {
    params.validate();
    const int s = params.s, c = params.c, m = params.m;
    if (2 * t < m)
        throw invalid_input("out-of-closed-form-range: need 2t >= m");
    if (2 * t > m) return binomial(s, c - 1) * binomial(m - t + c - 2, m - t);
    return binomial(s, c - 2) +
           binomial(s, c - 1) * (binomial(c - 2 + t, t) - (c - 1));
}

Int mu(const StarParams& params) {
    params.validate();
    return sum_over_subsets(params, std::nullopt);
}

Int sdefect(const StarParams& params) {
    params.validate();
    return mu(params) - binomial(params.s, params.c - 1);
}

MuSdefect closed_c2(const StarParams& params) {
    params.validate();
    if (params.c != 2) throw invalid_input("wrong-codimension: closed form needs c = 2");
    const Int s = params.s;
    const int m = params.m;
    if (m % 2 == 0)
        return {1 + s * m / 2, 1 + s * (m / 2 - 1)};
    return {s + s * (m / 2), s * (m / 2)};
}

MuSdefect closed_c3(const StarParams& params) {
    params.validate();
    if (params.c != 3) throw invalid_input("wrong-codimension: closed form needs c = 3");
    const Int pairs = binomial(params.s, 2);
    const Int s = params.s;
    const long long m = params.m;
    // Every division below is exact for its residue class mod 6.
    Int mu_val;
    switch (m % 6) {
        case 0:
            mu_val = pairs * (m * m / 6 + m / 3) + s * m / 6 + 1;
            break;
        case 1:
            mu_val = pairs * ((m - 1) * (m - 1) / 6 + 2 * (m - 1) / 3 + 1) + s * (m - 1) / 6;
            break;
        case 2:
            mu_val = pairs * ((m - 2) * (m - 2) / 6 + m - 1) + s * (1 + (m - 2) / 6);
            break;
        case 3:
            mu_val = pairs * ((m - 3) * (m - 3) / 6 + 4 * m / 3 - 1) + s * (m - 3) / 6 + 1;
            break;
        case 4:
            mu_val = pairs * ((m - 4) * (m - 4) / 6 + 5 * (m - 1) / 3 - 1) + s * (1 + (m - 4) / 6);
            break;
        default:  // m % 6 == 5
            mu_val = pairs * ((m - 5) * (m - 5) / 6 + 2 * m - 4) + s * (m + 1) / 6;
            break;
    }
    // The generators inside the ordinary power are exactly the pair count.
    return {mu_val, mu_val - pairs};
}

MuSdefect closed_small_m(const StarParams& params) {
    params.validate();
    const int s = params.s, c = params.c, m = params.m;
    if (m < 2 || m > 4)
        throw invalid_input("out-of-range: closed form needs 2 <= m <= 4");
    if (m == 2) return {binomial(s + 1, c - 1), binomial(s, c - 2)};
    if (m == 3) {
        Int tail = binomial(s, c - 2) * (s - c + 2) + binomial(s, c - 3);
        return {binomial(s, c - 1) + tail, tail};
    }
    Int tail = binomial(s, c - 2) * (s - c + 3) +
               binomial(s, c - 3) * binomial(s - c + 3, 2) + binomial(s, c - 4);
    return {binomial(s, c - 1) + tail, tail};
}

std::size_t enumeration_limit() { return g_enumeration_limit.load(); }

void set_enumeration_limit(std::size_t cap) {
    if (cap == 0) throw invalid_input("invalid-range: the cap must be positive");
    g_enumeration_limit.store(cap);
}

}  // namespace starsym
