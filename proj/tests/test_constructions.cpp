#include "tilepot/constructions.hpp"

#include "tilepot/scenario.hpp"

#include "doctest.h"

using namespace tilepot;

TEST_CASE("family pots use three or four tiles in the loosest scenario") {
    for (int m = 4; m <= 7; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto tiles = lollipop_pot(1, m, n).tile_count();
            CHECK(tiles == (n == 1 ? 3u : 4u));
        }
    for (int m = 3; m <= 7; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(tadpole_pot(1, m, n).tile_count() == 3u);
}

TEST_CASE("recipes describe the construction") {
    PotRecipe recipe;
    lollipop_pot(2, 5, 3, &recipe);
    CHECK(recipe.family == "lollipop");
    CHECK(recipe.scenario == 2);
    CHECK_FALSE(recipe.rule.empty());

    tadpole_pot(3, 5, 2, &recipe);
    CHECK(recipe.family == "tadpole");
    CHECK(recipe.scenario == 3);
}

TEST_CASE("family pots reject out-of-range input") {
    CHECK_THROWS_AS(lollipop_pot(1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(lollipop_pot(0, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(lollipop_pot(4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(tadpole_pot(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(tadpole_pot(1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_pot("example-3", 4, 12),
                    std::invalid_argument);
}

TEST_CASE("pots realize their targets") {
    for (int m = 4; m <= 6; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int scenario = 1; scenario <= 3; ++scenario) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(scenario);
                Pot pot = lollipop_pot(scenario, m, n);
                CHECK(realizes(pot, make_lollipop(m, n)).has_value());
            }
    for (int m = 3; m <= 6; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int scenario = 1; scenario <= 3; ++scenario) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(scenario);
                Pot pot = tadpole_pot(scenario, m, n);
                CHECK(realizes(pot, make_tadpole(m, n)).has_value());
            }
}

TEST_CASE("scenario pots pass their scenario on small members") {
    CHECK(check_scenario(tadpole_pot(2, 4, 2), make_tadpole(4, 2), 2)
              .pass());
    CHECK(check_scenario(tadpole_pot(3, 3, 2), make_tadpole(3, 2), 3)
              .pass());
    CHECK(check_scenario(lollipop_pot(2, 4, 2), make_lollipop(4, 2), 2)
              .pass());
    CHECK(check_scenario(lollipop_pot(3, 4, 1), make_lollipop(4, 1), 3)
              .pass());
}

TEST_CASE("cautionary hub pots realize the target but break down") {
    // Both pots realize L_{4,n}; for long paths they also admit a
    // complex of smaller order, so they cannot witness the strictest
    // scenarios.
    for (const char* which : {"example-1", "example-2"}) {
        const int n = which[8] == '1' ? 12 : 13;
        Pot pot = counterexample_pot(which, 4, n);
        CHECK(realizes(pot, make_lollipop(4, n)).has_value());
        auto small = smallest_realized_order(pot, 4 + n);
        REQUIRE(small.has_value());
        CHECK(small->first < 4 + n);
    }
}
