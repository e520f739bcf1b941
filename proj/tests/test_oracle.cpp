#include "starsym/oracle.hpp"

#include "starsym/generators.hpp"
#include "starsym/normalform.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace starsym;

namespace {

MonomialIdeal ideal(int s, std::vector<FMonomial> gens) {
    return minimalize(s, std::move(gens));
}

MonomialIdeal random_ideal(std::mt19937& rng, int s) {
    std::uniform_int_distribution<int> count(1, 4), exponent(0, 3);
    std::vector<FMonomial> gens;
    for (int k = count(rng); k-- > 0;) {
        FMonomial g(s);
        for (int j = 0; j < s; ++j) g[j] = exponent(rng);
        gens.push_back(g);
    }
    return minimalize(s, std::move(gens));
}

}  // namespace

TEST_CASE("minimalize drops multiples and duplicates") {
    MonomialIdeal I = ideal(3, {{1, 1, 0}, {1, 2, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(I.gens == std::vector<FMonomial>{{0, 0, 1}, {1, 1, 0}});
    CHECK(ideal(2, {}).gens.empty());
    CHECK(ideal(2, {{0, 0}, {1, 0}}).gens == std::vector<FMonomial>{{0, 0}});
}

TEST_CASE("powers of variable subsets") {
    MonomialIdeal I = ci_power_ideal(3, FormSubset::from_indices({1, 3}), 2);
    CHECK(I.gens == std::vector<FMonomial>{{0, 0, 2}, {1, 0, 1}, {2, 0, 0}});
    for (int k = 1; k <= 4; ++k) {
        MonomialIdeal J = ci_power_ideal(4, FormSubset::from_indices({1, 2, 4}), k);
        CHECK(Int(J.gens.size()) == binomial(k + 2, 2));
        for (const FMonomial& g : J.gens) {
            CHECK(fdegree(g) == k);
            CHECK(g[2] == 0);
        }
    }
    CHECK_THROWS_AS(ci_power_ideal(3, FormSubset{}, 2), invalid_input);
}

TEST_CASE("pairwise intersection") {
    MonomialIdeal xy = ideal(3, {{1, 0, 0}, {0, 1, 0}});
    MonomialIdeal xz = ideal(3, {{1, 0, 0}, {0, 0, 1}});
    MonomialIdeal yz = ideal(3, {{0, 1, 0}, {0, 0, 1}});
    MonomialIdeal two = intersect(xy, xz);
    MonomialIdeal all = intersect(two, yz);
    CHECK(all.gens == std::vector<FMonomial>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(intersect(xy, xy) == xy);
}

TEST_CASE("intersection is commutative, associative, idempotent") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 25; ++round) {
        MonomialIdeal a = random_ideal(rng, 3), b = random_ideal(rng, 3),
                      c = random_ideal(rng, 3);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, a) == a);
    }
}

TEST_CASE("intersection respects the candidate cap") {
    MonomialIdeal big = ci_power_ideal(4, FormSubset::full(4), 5);
    CHECK_THROWS_AS(intersect(big, big, 100), resource_limit);
}

TEST_CASE("symbolic powers of the triangle configuration") {
    StarParams p1{3, 2, 1, 1};
    CHECK(symbolic_power_oracle(p1).gens ==
          std::vector<FMonomial>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    StarParams p2{3, 2, 2, 1};
    CHECK(symbolic_power_oracle(p2).gens ==
          std::vector<FMonomial>{{1, 1, 1}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
}

TEST_CASE("squarefree generators in codimension 3") {
    StarParams p{4, 3, 1, 1};
    MonomialIdeal I = symbolic_power_oracle(p);
    REQUIRE(I.gens.size() == 6);
    for (const FMonomial& g : I.gens) {
        CHECK(fdegree(g) == 2);
        CHECK(support(g).size() == 2);
    }
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(symbolic_power_oracle(StarParams{9, 2, 1, 1}), resource_limit);
    CHECK_THROWS_AS(symbolic_power_oracle(StarParams{4, 2, 7, 1}), resource_limit);
    OracleLimits raised{10, 7, 1'000'000};
    CHECK(symbolic_power_oracle(StarParams{9, 2, 1, 1}, raised).gens.size() > 0);
    CHECK(symbolic_power_oracle(StarParams{4, 2, 7, 1}, raised).gens.size() > 0);
}

TEST_CASE("membership is divisibility") {
    StarParams p{3, 2, 2, 1};
    MonomialIdeal I = symbolic_power_oracle(p);
    CHECK(contains(I, {1, 1, 1}));
    CHECK(contains(I, {2, 1, 1}));
    CHECK(!contains(I, {2, 1, 0}));
    CHECK(!contains(I, {0, 0, 0}));
}

TEST_CASE("membership in the power ladder is monotone and tops out at sdeg") {
    for (int s = 3; s <= 4; ++s)
        for (int c = 1; c < s; ++c) {
            StarParams base{s, c, 1, 1};
            OracleLimits limits{8, 12, 1'000'000};
            std::vector<MonomialIdeal> ladder;
            for (int u = 1; u <= 9; ++u) {
                StarParams q{s, c, u, 1};
                ladder.push_back(symbolic_power_oracle(q, limits));
            }
            FMonomial M(s, 0);
            while (true) {
                int largest = 0;
                bool previous = true;
                for (int u = 1; u <= 9; ++u) {
                    bool now = contains(ladder[u - 1], M);
                    CHECK((previous || !now));  // monotone decreasing in u
                    if (now) largest = u;
                    previous = now;
                }
                int expected = std::min(sdeg(M, base), 9);
                CHECK(largest == expected);
                int j = 0;
                while (j < s && M[j] == 3) M[j++] = 0;
                if (j == s) break;
                ++M[j];
            }
        }
}

TEST_CASE("ordinary powers") {
    MonomialIdeal I = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    MonomialIdeal I2 = ordinary_power(I, 2);
    CHECK(I2.gens == std::vector<FMonomial>{{0, 2, 2}, {1, 1, 2}, {1, 2, 1},
                                            {2, 0, 2}, {2, 1, 1}, {2, 2, 0}});
    CHECK(ordinary_power(I, 1) == I);
    MonomialIdeal zero;
    zero.s = 3;
    CHECK(ordinary_power(zero, 3).gens.empty());
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal I = ideal(3, {{1, 1, 0}, {1, 0, 1}});
    CHECK(colon_by_monomial(I, {0, 1, 1}).gens == std::vector<FMonomial>{{1, 0, 0}});
    CHECK(colon_by_monomial(I, {1, 1, 0}).gens == std::vector<FMonomial>{{0, 0, 0}});
    CHECK(colon_by_monomial(I, {0, 0, 0}) == I);
    // The colon of a span is the span of the generator colons.
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        MonomialIdeal J = random_ideal(rng, 3);
        FMonomial M{1, 2, 0};
        MonomialIdeal Q = colon_by_monomial(J, M);
        for (const FMonomial& g : J.gens) {
            FMonomial q(3);
            for (int j = 0; j < 3; ++j) q[j] = std::max(0, g[j] - M[j]);
            CHECK(contains(Q, q));
        }
    }
}

TEST_CASE("successive colon sizes for the triangle") {
    StarParams p{3, 2, 1, 1};
    auto sizes = set_size_oracle(p);
    REQUIRE(sizes.size() == 3);
    CHECK(sizes[0].second == 0);
    CHECK(sizes[1].second == 1);
    CHECK(sizes[2].second == 1);
}

TEST_CASE("defect of the doubled triangle") {
    StarParams p{3, 2, 2, 1};
    CHECK(sdefect_oracle(p) == 1);
    StarParams p1{3, 2, 1, 1};
    CHECK(sdefect_oracle(p1) == 0);
    StarParams p533{5, 3, 3, 1};
    CHECK(sdefect_oracle(p533) == sdefect(p533));
}
