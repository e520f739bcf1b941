#include "starsym/core.hpp"

#include <doctest.h>

using namespace starsym;

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(6, -1) == 0);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("binomial satisfies the addition rule") {
    for (long long n = 1; n <= 60; ++n)
        for (long long k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW((StarParams{4, 2, 3, 1}).validate());
    CHECK_THROWS_AS((StarParams{3, 3, 1, 1}).validate(), invalid_input);
    CHECK_THROWS_AS((StarParams{3, 0, 1, 1}).validate(), invalid_input);
    CHECK_THROWS_AS((StarParams{1, 1, 1, 1}).validate(), invalid_input);
    CHECK_THROWS_AS((StarParams{4, 2, 0, 1}).validate(), invalid_input);
    CHECK_THROWS_AS((StarParams{4, 2, 1, 0}).validate(), invalid_input);
}

TEST_CASE("subsets are listed lexicographically") {
    auto subsets = enumerate_subsets(4, 2);
    REQUIRE(subsets.size() == 6);
    CHECK(subsets.front() == FormSubset::from_indices({1, 2}));
    CHECK(subsets[1] == FormSubset::from_indices({1, 3}));
    CHECK(subsets.back() == FormSubset::from_indices({3, 4}));
    CHECK(enumerate_subsets(5, 0).size() == 1);
    CHECK(enumerate_subsets(5, 6).empty());
    for (int s = 1; s <= 8; ++s)
        for (int k = 0; k <= s; ++k)
            CHECK(Int(enumerate_subsets(s, k).size()) == binomial(s, k));
}

TEST_CASE("subset operations") {
    FormSubset a = FormSubset::from_indices({1, 3, 5});
    CHECK(a.size() == 3);
    CHECK(a.contains(3));
    CHECK(!a.contains(2));
    CHECK(a.subset_of(FormSubset::full(5)));
    CHECK(a.complement_in(5) == FormSubset::from_indices({2, 4}));
    CHECK(a.indices() == std::vector<int>{1, 3, 5});
    CHECK(FormSubset::full(3).bits == 0b111u);
    CHECK_THROWS_AS(a.complement_in(4), invalid_input);
}

TEST_CASE("fdegree") {
    CHECK(fdegree({2, 3, 1, 1}) == 7);
    CHECK(fdegree({0, 0, 0}) == 0);
    CHECK_THROWS_AS(fdegree({1, -1}), invalid_input);
}
