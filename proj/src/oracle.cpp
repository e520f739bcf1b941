#include "starsym/oracle.hpp"

#include "starsym/generators.hpp"
#include "starsym/order.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace starsym {

namespace {

// Fixed-width exponent vectors keep the hot loops branch-light; the oracle
// range tops out well below these widths.
constexpr int kMaxVars = 16;
constexpr int kMaxExp = 255;
using Packed = std::array<std::uint8_t, kMaxVars>;

Packed pack(const FMonomial& M) {
    Packed out{};
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (M[j] < 0 || M[j] > kMaxExp)
            throw invalid_input("invalid-range: oracle exponents must lie in [0, 255]");
        out[j] = static_cast<std::uint8_t>(M[j]);
    }
    return out;
}

FMonomial unpack(const Packed& a, int s) {
    FMonomial out(s);
    for (int j = 0; j < s; ++j) out[j] = a[j];
    return out;
}

int pdeg(const Packed& a) {
    int d = 0;
    for (int v : a) d += v;
    return d;
}

bool pdivides(const Packed& a, const Packed& b) {
    for (int j = 0; j < kMaxVars; ++j)
        if (a[j] > b[j]) return false;
    return true;
}

bool packed_order(const Packed& a, const Packed& b) {
    int da = pdeg(a), db = pdeg(b);
    if (da != db) return da < db;
    return a < b;
}

// Keep only the divisibility-minimal elements.  Candidates are scanned in
// (degree, lex) order, so any divisor of a candidate is already among the
// kept ones and equal monomials collapse first.
std::vector<Packed> minimalize_packed(std::vector<Packed> candidates) {
    std::sort(candidates.begin(), candidates.end(), packed_order);
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<Packed> kept;
    for (const Packed& cand : candidates) {
        bool divisible = false;
        for (const Packed& g : kept)
            if (pdivides(g, cand)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(cand);
    }
    return kept;
}

MonomialIdeal to_ideal(int s, const std::vector<Packed>& gens) {
    MonomialIdeal out;
    out.s = s;
    out.gens.reserve(gens.size());
    for (const Packed& g : gens) out.gens.push_back(unpack(g, s));
    return out;
}

std::vector<Packed> from_ideal(const MonomialIdeal& I) {
    std::vector<Packed> out;
    out.reserve(I.gens.size());
    for (const FMonomial& g : I.gens) {
        if (static_cast<int>(g.size()) != I.s)
            throw invalid_input("invalid-range: generator has the wrong number of forms");
        out.push_back(pack(g));
    }
    return out;
}

void check_var_count(int s) {
    if (s < 1 || s > kMaxVars)
        throw invalid_input("invalid-range: the oracle handles 1 <= s <= 16 variables");
}

}  // namespace

MonomialIdeal minimalize(int s, std::vector<FMonomial> gens) {
    check_var_count(s);
    std::vector<Packed> packed;
    packed.reserve(gens.size());
    for (const FMonomial& g : gens) {
        if (static_cast<int>(g.size()) != s)
            throw invalid_input("invalid-range: generator has the wrong number of forms");
        packed.push_back(pack(g));
    }
    return to_ideal(s, minimalize_packed(std::move(packed)));
}

MonomialIdeal ci_power_ideal(int s, FormSubset J, int m) {
    check_var_count(s);
    if (!J.subset_of(FormSubset::full(s)))
        throw invalid_input("invalid-range: J exceeds the variable count");
    if (J.empty()) throw invalid_input("empty-subset: J must be nonempty");
    if (m < 1) throw invalid_input("invalid-range: m must be >= 1");
    if (m > kMaxExp) throw invalid_input("invalid-range: oracle power too large");
    std::vector<int> vars = J.indices();
    std::vector<Packed> out;
    Packed current{};
    auto walk = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx + 1 == vars.size()) {
            current[vars[idx] - 1] = static_cast<std::uint8_t>(left);
            out.push_back(current);
            current[vars[idx] - 1] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            current[vars[idx] - 1] = static_cast<std::uint8_t>(e);
            self(self, idx + 1, left - e);
        }
        current[vars[idx] - 1] = 0;
    };
    walk(walk, 0, m);
    return to_ideal(s, minimalize_packed(std::move(out)));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        std::size_t max_intermediate) {
    if (a.s != b.s) throw invalid_input("invalid-range: mixed variable counts");
    check_var_count(a.s);
    std::size_t count = a.gens.size() * b.gens.size();
    if (count > max_intermediate)
        throw resource_limit("resource-limit: intersection would build " +
                             std::to_string(count) + " candidates");
    std::vector<Packed> ga = from_ideal(a), gb = from_ideal(b);
    std::vector<Packed> candidates;
    candidates.reserve(count);
    for (const Packed& x : ga)
        for (const Packed& y : gb) {
            Packed z;
            for (int j = 0; j < kMaxVars; ++j) z[j] = std::max(x[j], y[j]);
            candidates.push_back(z);
        }
    return to_ideal(a.s, minimalize_packed(std::move(candidates)));
}

MonomialIdeal symbolic_power_oracle(const StarParams& params, const OracleLimits& limits) {
    params.validate();
    if (params.s > limits.max_s)
        throw resource_limit("resource-limit: oracle capped at s <= " +
                             std::to_string(limits.max_s));
    if (params.m > limits.max_m)
        throw resource_limit("resource-limit: oracle capped at m <= " +
                             std::to_string(limits.max_m));
    check_var_count(params.s);
    MonomialIdeal result;
    bool first = true;
    for (FormSubset J : enumerate_subsets(params.s, params.c)) {
        MonomialIdeal piece = ci_power_ideal(params.s, J, params.m);
        result = first ? piece : intersect(result, piece, limits.max_intermediate);
        first = false;
    }
    return result;
}

bool contains(const MonomialIdeal& I, const FMonomial& M) {
    check_var_count(I.s);
    if (static_cast<int>(M.size()) != I.s)
        throw invalid_input("invalid-range: monomial has the wrong number of forms");
    Packed target = pack(M);
    for (const FMonomial& g : I.gens)
        if (pdivides(pack(g), target)) return true;
    return false;
}

MonomialIdeal ordinary_power(const MonomialIdeal& I, int m, std::size_t max_intermediate) {
    check_var_count(I.s);
    if (m < 1) throw invalid_input("invalid-range: m must be >= 1");
    std::vector<Packed> gens = from_ideal(I);
    if (gens.empty()) return I;  // zero ideal
    Int expected = binomial(static_cast<long long>(gens.size()) + m - 1, m);
    if (expected > Int(max_intermediate))
        throw resource_limit("resource-limit: power would build " + expected.str() +
                             " products");
    std::vector<Packed> products;
    Packed current{};
    auto walk = [&](auto&& self, std::size_t idx, int left) -> void {
        if (left == 0) {
            products.push_back(current);
            return;
        }
        if (idx == gens.size()) return;
        // Multiset choice: take the generator 0..left times, then move on.
        self(self, idx + 1, left);
        Packed saved = current;
        for (int take = 1; take <= left; ++take) {
            for (int j = 0; j < kMaxVars; ++j) {
                int v = current[j] + gens[idx][j];
                if (v > kMaxExp) throw invalid_input("invalid-range: oracle power too large");
                current[j] = static_cast<std::uint8_t>(v);
            }
            self(self, idx + 1, left - take);
        }
        current = saved;
    };
    walk(walk, 0, m);
    return to_ideal(I.s, minimalize_packed(std::move(products)));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const FMonomial& M) {
    check_var_count(I.s);
    if (static_cast<int>(M.size()) != I.s)
        throw invalid_input("invalid-range: monomial has the wrong number of forms");
    Packed divisor = pack(M);
    std::vector<Packed> out;
    out.reserve(I.gens.size());
    for (const Packed& g : from_ideal(I)) {
        Packed q;
        for (int j = 0; j < kMaxVars; ++j)
            q[j] = static_cast<std::uint8_t>(std::max(0, g[j] - divisor[j]));
        out.push_back(q);
    }
    return to_ideal(I.s, minimalize_packed(std::move(out)));
}

std::vector<ColonStep> colon_steps_oracle(const StarParams& params,
                                          const OracleLimits& limits) {
    std::vector<FMonomial> gens = symbolic_power_oracle(params, limits).gens;
    tau_sort_descending(gens, params);
    std::vector<ColonStep> out;
    out.reserve(gens.size());
    MonomialIdeal prefix;
    prefix.s = params.s;
    for (const FMonomial& g : gens) {
        // The prefix generators form an antichain, so they are already the
        // minimal generators of the ideal they span.
        out.push_back({g, colon_by_monomial(prefix, g)});
        prefix.gens.push_back(g);
    }
    return out;
}

std::vector<std::pair<FMonomial, int>> set_size_oracle(const StarParams& params,
                                                       const OracleLimits& limits) {
    std::vector<std::pair<FMonomial, int>> out;
    for (const ColonStep& step : colon_steps_oracle(params, limits)) {
        for (const FMonomial& g : step.colon.gens)
            if (fdegree(g) != 1)
                throw check_failure("nonlinear-quotient: a colon generator of degree " +
                                    std::to_string(fdegree(g)));
        out.emplace_back(step.gen, static_cast<int>(step.colon.gens.size()));
    }
    return out;
}

Int sdefect_oracle(const StarParams& params, const OracleLimits& limits) {
    MonomialIdeal symbolic = symbolic_power_oracle(params, limits);
    StarParams base = params;
    base.m = 1;
    MonomialIdeal power =
        ordinary_power(symbolic_power_oracle(base, limits), params.m,
                       limits.max_intermediate);
    Int outside = 0;
    for (const FMonomial& g : symbolic.gens)
        if (!contains(power, g)) ++outside;
    return outside;
}

}  // namespace starsym
