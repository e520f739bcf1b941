#include "starsym/core.hpp"

#include <bit>
#include <numeric>

namespace starsym {

void StarParams::validate() const {
    if (s < 2 || s > FormSubset::max_forms)
        throw invalid_input("invalid-range: s must satisfy 2 <= s <= " +
                            std::to_string(FormSubset::max_forms));
    if (c < 1 || c >= s)
        throw invalid_input("invalid-range: c must satisfy 1 <= c < s");
    if (m < 1) throw invalid_input("invalid-range: m must be >= 1");
    if (delta < 1) throw invalid_input("invalid-range: delta must be >= 1");
}

FormSubset FormSubset::from_indices(const std::vector<int>& indices) {
    FormSubset out;
    for (int j : indices) out.add(j);
    return out;
}

FormSubset FormSubset::full(int s) {
    if (s < 0 || s > max_forms)
        throw invalid_input("invalid-range: subset universe must have 0 <= s <= 63");
    FormSubset out;
    out.bits = (s == 0) ? 0 : (~std::uint64_t{0} >> (64 - s));
    return out;
}

void FormSubset::add(int j) {
    if (j < 1 || j > max_forms)
        throw invalid_input("invalid-range: form index must satisfy 1 <= j <= 63");
    bits |= std::uint64_t{1} << (j - 1);
}

int FormSubset::size() const { return std::popcount(bits); }

FormSubset FormSubset::complement_in(int s) const {
    FormSubset universe = full(s);
    if (!subset_of(universe))
        throw invalid_input("invalid-range: subset exceeds its universe");
    FormSubset out;
    out.bits = universe.bits & ~bits;
    return out;
}

std::vector<int> FormSubset::indices() const {
    std::vector<int> out;
    for (int j = 1; j <= max_forms; ++j)
        if (contains(j)) out.push_back(j);
    return out;
}

Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

std::vector<FormSubset> enumerate_subsets(int s, int k) {
    if (s < 0 || s > FormSubset::max_forms)
        throw invalid_input("invalid-range: subset universe must have 0 <= s <= 63");
    std::vector<FormSubset> out;
    if (k < 0 || k > s) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        out.push_back(FormSubset::from_indices(pick));
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[i] == s - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

long long fdegree(const FMonomial& M) {
    long long d = 0;
    for (int e : M) {
        if (e < 0) throw invalid_input("invalid-range: exponents must be >= 0");
        d += e;
    }
    return d;
}

}  // namespace starsym
