#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace starsym {

// Counts are exact: products of binomial coefficients outgrow 64 bits already
// for moderate parameters.
using Int = boost::multiprecision::cpp_int;

// Exponent vector of a monomial in the fixed forms F_1..F_s; the exponent of
// F_j sits at position j-1.  The all-zero vector is the unit monomial.
using FMonomial = std::vector<int>;

// Weakly decreasing sequence of positive integers.
using Partition = std::vector<int>;

// An argument violated a documented precondition.  CLI exit code 2.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation exceeded a configured cap.  CLI exit code 3.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; signals a bug, never bad user input.
struct check_failure : std::logic_error {
    using std::logic_error::logic_error;
};

// s forms of common degree delta in general position, codimension c of the
// star configuration, symbolic power m.
struct StarParams {
    int s = 2;
    int c = 1;
    int m = 1;
    int delta = 1;

    // Throws invalid_input unless 1 <= c < s, m >= 1, delta >= 1.
    void validate() const;

    friend bool operator==(const StarParams&, const StarParams&) = default;
};

// Subset of the form indices {1..s}, as a bitmask with bit j-1 for index j.
struct FormSubset {
    std::uint64_t bits = 0;

    static constexpr int max_forms = 63;

    static FormSubset from_indices(const std::vector<int>& indices);
    static FormSubset full(int s);

    bool contains(int j) const {
        return j >= 1 && j <= max_forms && ((bits >> (j - 1)) & 1u) != 0;
    }
    void add(int j);
    int size() const;
    bool empty() const { return bits == 0; }
    bool subset_of(FormSubset other) const { return (bits & ~other.bits) == 0; }
    FormSubset complement_in(int s) const;
    std::vector<int> indices() const;  // increasing

    friend bool operator==(FormSubset, FormSubset) = default;
};

// C(n, k), exact.  Zero when k < 0, when k > n >= 0, and when n < 0 with
// k > 0; C(n, 0) = 1 for every n.  The counting formulas below rely on this
// vanishing convention to switch terms off outside their range.
Int binomial(long long n, long long k);

// All k-subsets of {1..s}, ordered lexicographically by increasing index tuple.
std::vector<FormSubset> enumerate_subsets(int s, int k);

// Total degree in the forms (sum of exponents).
long long fdegree(const FMonomial& M);

}  // namespace starsym
