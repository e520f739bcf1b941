#include "starsym/render.hpp"

#include "starsym/generators.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>

using namespace starsym;

TEST_CASE("factored display of a normal form") {
    CHECK(factored_form({2, 3, 1, 1}) == "(F1 F2 F3 F4)(F1 F2)(F2)");
    CHECK(factored_form({1, 1, 1}) == "(F1 F2 F3)");
    CHECK(factored_form({0, 2, 0}) == "(F2)(F2)");
    CHECK_THROWS_AS(factored_form({0, 0, 0}), invalid_input);
}

TEST_CASE("generator listing as text") {
    StarParams p{3, 2, 2, 1};
    std::string text = render_generators(p, enumerate_generators(p), false, "text");
    CHECK(text ==
          "[1,1,1]\t(F1 F2 F3)\n"
          "[2,2,0]\t(F1 F2)(F1 F2)\n"
          "[2,0,2]\t(F1 F3)(F1 F3)\n"
          "[0,2,2]\t(F2 F3)(F2 F3)\n");
}

TEST_CASE("generator listing as json and csv") {
    StarParams p{3, 2, 2, 2};
    auto gens = enumerate_generators(p);
    nlohmann::json doc = nlohmann::json::parse(render_generators(p, gens, false, "json"));
    CHECK(doc["schema"] == "starsym/1");
    CHECK(doc["command"] == "gens");
    CHECK(doc["params"]["s"] == 3);
    CHECK(doc["params"]["delta"] == 2);
    CHECK(doc["params"]["module"] == false);
    CHECK(doc["count"] == "4");
    REQUIRE(doc["generators"].size() == 4);
    CHECK(doc["generators"][0]["exponents"] == nlohmann::json::array({1, 1, 1}));
    CHECK(doc["generators"][0]["fdegree"] == 3);
    CHECK(doc["generators"][0]["degree"] == 6);
    CHECK(doc["generators"][1]["factored"] == "(F1 F2)(F1 F2)");

    std::string csv = render_generators(p, gens, false, "csv");
    CHECK(csv.rfind("exponents,fdegree,degree,factored\n", 0) == 0);
    CHECK(csv.find("1 1 1,3,6,(F1 F2 F3)\n") != std::string::npos);
    CHECK(csv.find("2 2 0,4,8,(F1 F2)(F1 F2)\n") != std::string::npos);

    CHECK_THROWS_AS(render_generators(p, gens, false, "yaml"), invalid_input);
}

TEST_CASE("invariant summary rendering") {
    StarParams p{7, 3, 7, 1};
    std::string text = render_invariants(p, "text");
    CHECK(text.find("mu         238\n") != std::string::npos);
    CHECK(text.find("sdefect    217\n") != std::string::npos);
    CHECK(text.find("regularity 34\n") != std::string::npos);
    CHECK(text.find("degree t=3 deg=19 count=28\n") != std::string::npos);
    CHECK(text.find("degree t=7 deg=35 count=21\n") != std::string::npos);

    nlohmann::json doc = nlohmann::json::parse(render_invariants(p, "json"));
    CHECK(doc["schema"] == "starsym/1");
    CHECK(doc["command"] == "invariants");
    CHECK(doc["mu"] == "238");
    CHECK(doc["sdefect"] == "217");
    CHECK(doc["regularity"] == 34);
    REQUIRE(doc["degrees"].size() == 5);
    CHECK(doc["degrees"][0]["t"] == 3);
    CHECK(doc["degrees"][0]["degree"] == 19);
    CHECK(doc["degrees"][0]["count"] == "28");

    std::string csv = render_invariants(p, "csv");
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("mu,238\n") != std::string::npos);
    CHECK(csv.find("count_t5,63\n") != std::string::npos);
}

TEST_CASE("scaled degrees in the invariant summary") {
    StarParams p{6, 4, 2, 3};
    nlohmann::json doc = nlohmann::json::parse(render_invariants(p, "json"));
    REQUIRE(doc["degrees"].size() == 2);
    CHECK(doc["degrees"][0]["t"] == 1);
    CHECK(doc["degrees"][0]["degree"] == 12);  // 3 * (1*2 + 2)
    CHECK(doc["degrees"][1]["degree"] == 18);
}

TEST_CASE("betti table as text") {
    StarParams p{3, 2, 1, 1};
    std::string text = render_betti(betti_table(p), "text");
    CHECK(text ==
          "   0 1 2\n"
          "0: 1 . .\n"
          "1: . 3 2\n");
}

TEST_CASE("betti json round-trips through text") {
    StarParams p{7, 3, 7, 1};
    BettiTable table = betti_table(p);
    nlohmann::json doc = nlohmann::json::parse(render_betti(table, "json"));
    CHECK(doc["schema"] == "starsym/1");
    CHECK(doc["command"] == "betti");
    CHECK(doc["regularity"] == 34);
    CHECK(doc["koszul_stranded"] == true);

    BettiTable parsed;
    parsed.params = StarParams{doc["params"]["s"], doc["params"]["c"],
                               doc["params"]["m"], doc["params"]["delta"]};
    for (const auto& entry : doc["entries"]) {
        const int i = entry["i"];
        const long long j = entry["j"];
        CHECK(entry["row"] == j - i);
        parsed.entries[{i, j}] = Int(entry["beta"].get<std::string>());
    }
    CHECK(parsed == table);
    CHECK(render_betti(parsed, "text") == render_betti(table, "text"));

    std::string csv = render_betti(table, "csv");
    CHECK(csv.rfind("i,j,row,beta\n", 0) == 0);
    CHECK(csv.find("0,0,0,1\n") != std::string::npos);
    CHECK(csv.find("2,24,22,161\n") != std::string::npos);
}
