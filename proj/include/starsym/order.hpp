#pragma once

#include "starsym/core.hpp"

namespace starsym {

enum class Ordering { less, equal, greater };

// Anti-length-lexicographic order on partitions of the same weight: fewer
// parts wins; equal lengths fall back to lexicographic comparison.  Throws
// invalid_input("mismatched-weight") when the weights differ.
Ordering alex_compare(const Partition& p, const Partition& q);

// Reverse-lexicographic order with F_1 > ... > F_s on monomials of equal
// degree: the monomial whose exponent trails off earlier wins, i.e. A beats B
// when the last index where they differ has a smaller exponent in A.  Throws
// invalid_input("degree-mismatch") when the degrees differ.
Ordering revlex_compare(const FMonomial& A, const FMonomial& B);

// Positional comparison of layered factorizations: walk the layers in step
// and settle on the first position where they differ, comparing those two
// squarefree layers reverse-lexicographically.  Requires equal layer size
// sequences (invalid_input("partition-mismatch") otherwise).  This is NOT a
// restriction of revlex_compare: a monomial can lose in plain revlex yet win
// layer by layer.
Ordering ggrevlex_compare(const FMonomial& M, const FMonomial& N, const StarParams& params);

// The order the generator listing descends in: compare partitions by
// alex_compare first, break ties with ggrevlex_compare.  Both arguments must
// be minimal generators for the given parameters.
Ordering tau_compare(const FMonomial& M, const FMonomial& N, const StarParams& params);

// Largest position j >= 1 (1-based, below the last part) where the part
// strictly drops relative to its predecessor, with a virtual infinite part in
// front: equivalently, the last position where some alex-larger partition of
// the same weight with parts <= c can still agree on everything before it.
// Throws invalid_input("length-one") on single-part partitions.
int index_of_overlap(const Partition& p);

// True when every part except possibly the last equals c, i.e. the partition
// is the alex-largest of its weight with parts <= c.
bool is_maximal_partition(const Partition& p, const StarParams& params);

// Position (1-based, within the increasing listing of B) of the largest form
// index dividing M.  Requires supp(M) nonempty and contained in B.
int m_index(FormSubset B, const FMonomial& M);

// Number of minimal generators in the colon of the tau-earlier generators by
// M; they are all single forms, so this is also the size of set_elements.
int set_size(const FMonomial& M, const StarParams& params);

// The forms spanning that colon.
FormSubset set_elements(const FMonomial& M, const StarParams& params);

// Sort generators tau-descending (largest first).
void tau_sort_descending(std::vector<FMonomial>& gens, const StarParams& params);

}  // namespace starsym
