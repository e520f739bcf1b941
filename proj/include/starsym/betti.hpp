#pragma once

#include "starsym/core.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace starsym {

// Graded Betti numbers, stored sparsely: (homological index i, internal
// degree j) -> beta, nonzero entries only.  Equality compares entries.
struct BettiTable {
    std::optional<StarParams> params;  // set when produced by betti_table
    std::map<std::pair<int, long long>, Int> entries;

    Int get(int i, long long j) const;
    long long max_row() const;  // max j - i over nonzero entries
    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries == b.entries;
    }
};

// Assemble a Betti table from (F-degree, colon set size) pairs: a generator
// of F-degree d whose colon is spanned by v forms contributes C(v, i-1) in
// homological degree i and internal degree delta * (d + i - 1), for
// i = 1..v+1.  The table always carries the single entry beta_{0,0} = 1.
BettiTable betti_from_set_sizes(const std::vector<std::pair<long long, int>>& gens,
                                int delta,
                                std::optional<StarParams> params = std::nullopt);

// Aggregated binomial weight of the generators sharing a partition whose last
// part is strictly below the part at the overlap index:
//   sum_{j=0}^{d_i0 - d_t} C(c - d_i0 + j, i - 1) * C(s - c + d_t + j - 1, j).
// The j-th term counts the chains whose colon has c - d_i0 + j forms, so the
// sum must start at j = 0 even though the weight vanishes for small j at
// large i.  Throws invalid_input("wrong-case") unless the partition is
// non-maximal with last part strictly below the overlap part.
Int a_coefficient(const Partition& p, int i, const StarParams& params);

// Full graded Betti table of the m-th symbolic power, computed by summing
// the closed per-partition contributions.
BettiTable betti_table(const StarParams& params);

// Closed form for the strand entry beta_i at F-degree t(s-c)+m, valid for
// 2t >= m and c >= 2, m >= 2; throws
// invalid_input("out-of-closed-form-range") for 2t < m.
Int strand_closed(const StarParams& params, int t, int i);

// The strand of smallest F-degree (t = ceil(m/c)), as (i, beta_i) pairs for
// i = 1..c.  Throws invalid_input("unsupported-remainder") when m > c and
// m mod c is none of 0, c-1, c-2, c-3.
std::vector<std::pair<int, Int>> top_strand_closed(const StarParams& params);

// Castelnuovo-Mumford regularity: delta*m*(s-c+1) + (c-1)*(delta-1) - 1.
long long regularity(const StarParams& params);

// True when every nonzero entry with i >= 1 sits at an internal degree
// delta*(t(s-c) + m + i - 1) for some admissible t; the table must carry its
// parameters.
bool is_koszul_stranded(const BettiTable& table);

}  // namespace starsym
