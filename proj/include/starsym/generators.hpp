#pragma once

#include "starsym/core.hpp"

#include <optional>

namespace starsym {

// Positive solution of sum b_i * x_i = m, component i aligned with the i-th
// smallest element of B.
using DiophantineSolution = std::vector<int>;

// Partitions of m with parts <= c (length t when given), ordered by length
// ascending and lexicographically descending within a length.  Throws
// invalid_input("invalid-range") when t lies outside [ceil(m/c), m].
std::vector<Partition> enumerate_partitions(const StarParams& params,
                                            std::optional<int> t = std::nullopt);

// The part sequence |layer_j| - (s - c) of a minimal generator of the m-th
// symbolic power.  Throws invalid_input("not-a-generator") when M is not one.
Partition partition_of(const FMonomial& M, const StarParams& params);

// Minimal generators of the m-th symbolic power, ordered descending in the
// order that makes successive colon quotients linear (see order.hpp):
// partitions by length ascending / lex descending, chains within a partition
// by positional reverse-lexicographic comparison of their layers.
std::vector<FMonomial> enumerate_generators(const StarParams& params);

// The subset of generators with at least s - c + 2 distinct forms; these
// generate the m-th symbolic power over the product of lower powers.
std::vector<FMonomial> enumerate_module_generators(const StarParams& params);

// Positive solutions of sum b_i x_i = m over the elements of B (with
// sum x_i = t when given), lexicographically ascending.  Throws
// invalid_input("empty-subset") when B is empty.
std::vector<DiophantineSolution> diophantine_solutions(FormSubset B, int m,
                                                       std::optional<int> t = std::nullopt);

// Number of minimal generators of F-degree t(s-c) + m.  Throws
// invalid_input("invalid-range") when t lies outside [ceil(m/c), m].
Int count_generators_in_degree(const StarParams& params, int t);

// Closed form for the same count, valid for 2t >= m; throws
// invalid_input("out-of-closed-form-range") below that.
Int count_generators_closed(const StarParams& params, int t);

// Total number of minimal generators of the m-th symbolic power.
Int mu(const StarParams& params);

// Number of minimal generators of the m-th symbolic power outside the m-th
// ordinary power; equals mu minus the C(s, c-1) top-degree generators.
Int sdefect(const StarParams& params);

struct MuSdefect {
    Int mu;
    Int sdefect;
};

// Closed forms in codimension 2 (any m) and 3 (any m), and for m <= 4 (any
// codimension).  Throw invalid_input("wrong-codimension") respectively
// invalid_input("out-of-range") outside their range.
MuSdefect closed_c2(const StarParams& params);
MuSdefect closed_c3(const StarParams& params);
MuSdefect closed_small_m(const StarParams& params);

// Cap on the number of generators an enumeration may emit (default 10^7,
// overridable via STARSYM_LIMIT or the CLI).  Exceeding it throws
// resource_limit before any generator is produced.
std::size_t enumeration_limit();
void set_enumeration_limit(std::size_t cap);

}  // namespace starsym
