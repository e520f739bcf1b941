#pragma once

#include "starsym/core.hpp"

namespace starsym {

// Monomial ideal in s variables given by its minimal generators: no generator
// divides another.  No generators = zero ideal; the all-zero exponent vector
// alone = unit ideal.  Generators are kept sorted by degree, then
// lexicographically, so equal ideals compare equal.
struct MonomialIdeal {
    int s = 0;
    std::vector<FMonomial> gens;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Caps for the brute-force computations; they are exponential by design and
// exist to cross-check the counting formulas on small inputs.
struct OracleLimits {
    int max_s = 8;
    int max_m = 6;
    std::size_t max_intermediate = 1'000'000;
};

// Minimal generators of the ideal spanned by the given monomials.
MonomialIdeal minimalize(int s, std::vector<FMonomial> gens);

// The m-th power of the ideal of the variables indexed by J: all exponent
// vectors of degree m supported inside J.
MonomialIdeal ci_power_ideal(int s, FormSubset J, int m);

// Intersection via pairwise componentwise maxima followed by minimalize.
// Throws resource_limit when the candidate count exceeds max_intermediate.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        std::size_t max_intermediate = OracleLimits{}.max_intermediate);

// The m-th symbolic power from its definition: intersect the m-th powers of
// the variable ideals over all c-subsets of {1..s}, folding in subset order.
MonomialIdeal symbolic_power_oracle(const StarParams& params,
                                    const OracleLimits& limits = {});

// Monomial ideal membership = divisibility by some generator.
bool contains(const MonomialIdeal& I, const FMonomial& M);

// Ordinary m-th power: all products of m generators, minimalized.
MonomialIdeal ordinary_power(const MonomialIdeal& I, int m,
                             std::size_t max_intermediate = OracleLimits{}.max_intermediate);

// Colon ideal (I : M), generator by generator: divide out the common part.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const FMonomial& M);

// For the generators N_1 > N_2 > ... of the m-th symbolic power listed in the
// enumeration order, the minimal generators of (N_1,...,N_{i-1}) : N_i.
struct ColonStep {
    FMonomial gen;
    MonomialIdeal colon;
};
std::vector<ColonStep> colon_steps_oracle(const StarParams& params,
                                          const OracleLimits& limits = {});

// Sizes of those colons, checking every colon generator is a single form;
// throws check_failure("nonlinear-quotient") otherwise.
std::vector<std::pair<FMonomial, int>> set_size_oracle(const StarParams& params,
                                                       const OracleLimits& limits = {});

// Number of minimal generators of the m-th symbolic power that do not lie in
// the m-th ordinary power.
Int sdefect_oracle(const StarParams& params, const OracleLimits& limits = {});

}  // namespace starsym
