#include "starsym/betti.hpp"

#include "starsym/generators.hpp"
#include "starsym/order.hpp"

#include <algorithm>

namespace starsym {

Int BettiTable::get(int i, long long j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Int(0) : it->second;
}

long long BettiTable::max_row() const {
    long long best = 0;
    for (const auto& [key, value] : entries)
        best = std::max(best, key.second - key.first);
    return best;
}

BettiTable betti_from_set_sizes(const std::vector<std::pair<long long, int>>& gens,
                                int delta, std::optional<StarParams> params) {
    if (delta < 1) throw invalid_input("invalid-range: delta must be >= 1");
    BettiTable table;
    table.params = params;
    table.entries[{0, 0}] = 1;
    for (const auto& [degree, size] : gens) {
        if (degree < 1) throw invalid_input("invalid-range: degrees must be >= 1");
        if (size < 0) throw invalid_input("invalid-range: set sizes must be >= 0");
        for (int i = 1; i <= size + 1; ++i)
            table.entries[{i, delta * (degree + i - 1)}] += binomial(size, i - 1);
    }
    return table;
}

Int a_coefficient(const Partition& p, int i, const StarParams& params) {
    params.validate();
    if (i < 1 || i > params.c)
        throw invalid_input("invalid-range: need 1 <= i <= c");
    long long weight = 0;
    for (int d : p) {
        if (d < 1 || d > params.c)
            throw invalid_input("invalid-range: parts must lie in [1, c]");
        weight += d;
    }
    if (weight != params.m)
        throw invalid_input("mismatched-weight: partition must sum to m");
    if (is_maximal_partition(p, params))
        throw invalid_input("wrong-case: maximal partitions carry no such weight");
    const int i0 = index_of_overlap(p);
    const int d_i0 = p[i0 - 1];
    const int d_t = p.back();
    if (d_t == d_i0)
        throw invalid_input("wrong-case: last part equals the overlap part");
    Int total = 0;
    for (int j = 0; j <= d_i0 - d_t; ++j)
        total += binomial(params.c - d_i0 + j, i - 1) *
                 binomial(params.s - params.c + d_t + j - 1, j);
    return total;
}

namespace {

// Number of layer chains agreeing through the overlap position: the colon
// data of a generator depends only on its chain up to there.
Int chains_to_overlap(const Partition& p, int i0, const StarParams& params) {
    Int total = binomial(params.s, params.s - params.c + p[0]);
    for (int idx = 1; idx < i0; ++idx)
        total *= binomial(params.s - params.c + p[idx - 1],
                          params.s - params.c + p[idx]);
    return total;
}

// Contribution of the alex-largest partition: the generators sharing all its
// full layers resolve like the forms in one fewer variable, which yields the
// two-binomial product below with r the last part.
Int delta_term(int r, int i, const StarParams& params) {
    return binomial(params.s, params.c - r + 1 - i) *
           binomial(params.s - params.c + r + i - 2, i - 1);
}

}  // namespace

BettiTable betti_table(const StarParams& params) {
    params.validate();
    const int s = params.s, c = params.c, m = params.m;
    const long long delta = params.delta;
    const int t_min = (m + c - 1) / c;
    BettiTable table;
    table.params = params;
    table.entries[{0, 0}] = 1;
    for (int t = t_min; t <= m; ++t) {
        std::vector<Int> beta(c + 1, 0);
        for (const Partition& p : enumerate_partitions(params, t)) {
            if (is_maximal_partition(p, params)) continue;  // handled by delta_term
            const int i0 = index_of_overlap(p);
            const Int chains = chains_to_overlap(p, i0, params);
            if (p.back() == p[i0 - 1]) {
                for (int i = 1; i <= c; ++i)
                    beta[i] += chains * binomial(c - p[i0 - 1], i - 1);
            } else {
                for (int i = 1; i <= c; ++i)
                    beta[i] += chains * a_coefficient(p, i, params);
            }
        }
        if (t == t_min) {
            int r = m - (t_min - 1) * c;  // last part of the maximal partition
            for (int i = 1; i <= c; ++i) beta[i] += delta_term(r, i, params);
        }
        for (int i = 1; i <= c; ++i)
            if (beta[i] != 0)
                table.entries[{i, delta * (static_cast<long long>(t) * (s - c) + m + i - 1)}] =
                    beta[i];
    }
    return table;
}

Int strand_closed(const StarParams& params, int t, int i) {
    params.validate();
    const int s = params.s, c = params.c, m = params.m;
    if (c < 2) throw invalid_input("wrong-codimension: strand closed form needs c >= 2");
    if (m < 2) throw invalid_input("out-of-range: strand closed form needs m >= 2");
    if (i < 1) throw invalid_input("invalid-range: need i >= 1");
    if (t > m) throw invalid_input("invalid-range: strands exist for t <= m only");
    const int mid = (m + 1) / 2;  // smallest t the closed form covers
    if (t < mid) throw invalid_input("out-of-closed-form-range: need 2t >= m");
    if (t > mid || m % 2 == 1) {
        Int generic = binomial(c - 1, i - 1) * binomial(c - 2 + m - t, c - 2) *
                      binomial(s, c - 1);
        if (t > mid) return generic;
        return generic - binomial(c - 2, i - 2) * binomial(s, c - 2);
    }
    if (m == 2) return binomial(s, c - 1 - i) * binomial(s - c + i, i - 1);
    if (m == 4)
        return binomial(c - 2, i - 1) * binomial(s, c - 2) +
               binomial(s, c - 3) *
                   (binomial(c - 3, i - 1) + binomial(c - 2, i - 1) * (s - c + 1) +
                    binomial(c - 1, i - 1) * binomial(s - c + 2, 2));
    return binomial(c - 2, i - 1) * binomial(s, c - 2) +
           binomial(c - 1, i - 1) * binomial(s, c - 1) *
               (binomial(c - 2 + t, t) - (c - 1)) -
           binomial(c - 2, i - 2) * binomial(s, c - 3) * (s - c + 3);
}

std::vector<std::pair<int, Int>> top_strand_closed(const StarParams& params) {
    params.validate();
    const int s = params.s, c = params.c, m = params.m;
    std::vector<std::pair<int, Int>> out;
    out.reserve(c);
    auto push_all = [&](auto&& value_for) {
        for (int i = 1; i <= c; ++i) out.emplace_back(i, value_for(i));
    };
    if (m <= c) {
        // Single partition [m]; its colon data is the m = 1 pattern shifted.
        push_all([&](int i) {
            return binomial(s, c - m - i + 1) * binomial(s - c + m + i - 2, i - 1);
        });
        return out;
    }
    const int q = m / c, r = m % c;
    if (r == 0) {
        push_all([&](int i) { return Int(i == 1 ? 1 : 0); });
    } else if (r == c - 1) {
        push_all([&](int i) { return Int(i == 1 ? s : (i == 2 ? s - 1 : 0)); });
    } else if (r == c - 2) {
        push_all([&](int i) -> Int {
            if (i == 1) return binomial(s, 2) + s;
            if (i == 2) return Int(s) * (s - 1);
            if (i == 3) return binomial(s - 1, 2);
            return 0;
        });
    } else if (r == c - 3) {
        const Int extra = Int(s) * std::max(0, q - 1);
        push_all([&](int i) -> Int {
            if (i == 1) return binomial(s, 3) + Int(s) * (s - 1) + extra;
            if (i == 2) return binomial(s, 2) * (s - 3) + Int(s) * (2 * s - 3) + extra;
            if (i == 3) return Int(s) * binomial(s - 2, 2) + Int(s) * (s - 2);
            if (i == 4) return binomial(s - 1, 3);
            return 0;
        });
    } else {
        throw invalid_input("unsupported-remainder: need m mod c in {0, c-1, c-2, c-3}");
    }
    return out;
}

long long regularity(const StarParams& params) {
    params.validate();
    const long long delta = params.delta;
    return delta * params.m * (params.s - params.c + 1) +
           (params.c - 1) * (delta - 1) - 1;
}

bool is_koszul_stranded(const BettiTable& table) {
    if (!table.params)
        throw invalid_input("invalid-range: table carries no parameters");
    const StarParams& p = *table.params;
    const int t_min = (p.m + p.c - 1) / p.c;
    for (const auto& [key, value] : table.entries) {
        const auto& [i, j] = key;
        if (i == 0) {
            if (j != 0) return false;
            continue;
        }
        if (i > p.c) return false;
        bool on_strand = false;
        for (int t = t_min; t <= p.m && !on_strand; ++t)
            on_strand = j == static_cast<long long>(p.delta) *
                                 (static_cast<long long>(t) * (p.s - p.c) + p.m + i - 1);
        if (!on_strand) return false;
    }
    return true;
}

}  // namespace starsym
