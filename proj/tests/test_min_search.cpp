#include "tilepot/min_search.hpp"

#include "tilepot/bounds.hpp"
#include "tilepot/constructions.hpp"

#include "doctest.h"

using namespace tilepot;

namespace {

long long found_min(const SearchResult& r) {
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.minimum.has_value());
    REQUIRE(r.lower_bound == *r.minimum);
    REQUIRE(r.witness_pot.has_value());
    REQUIRE(r.witness_assembly.has_value());
    CHECK(validate_assembly(*r.witness_assembly, *r.witness_pot));
    return *r.minimum;
}

} // namespace

TEST_CASE("cycle minima in the loosest scenario") {
    // A single self-complementary labeling closes any cycle.
    for (int m : {3, 4, 5}) {
        auto r = min_bond_types(make_cycle(m), 1, 4);
        CHECK(found_min(r) == 1);
        auto t = min_tile_types(make_cycle(m), 1, 4);
        CHECK(found_min(t) == 1);
    }
}

TEST_CASE("cycle minima in the stricter scenarios") {
    // Half the edges must break the fold-back into shorter cycles.
    for (int m : {3, 4, 5, 6}) {
        const long long half = (m + 1) / 2;
        for (int scenario : {2, 3}) {
            CAPTURE(m);
            CAPTURE(scenario);
            auto b = min_bond_types(make_cycle(m), scenario, 6);
            CHECK(found_min(b) == half);
            auto t = min_tile_types(make_cycle(m), scenario, 6);
            CHECK(found_min(t) == half + 1);
        }
    }
}

TEST_CASE("path minima") {
    // A path on n vertices folds into shorter complexes unless enough
    // types alternate: the middle scenario needs ceil((n - 1) / 2)
    // bond types and one more tile type than that.
    for (int n : {2, 3, 4, 5}) {
        const long long half_edges = n / 2; // == ceil((n - 1) / 2)
        auto b = min_bond_types(make_path(n), 2, 5);
        CHECK(found_min(b) == half_edges);
        auto t = min_tile_types(make_path(n), 2, 6);
        CHECK(found_min(t) == half_edges + 1);
    }
}

TEST_CASE("search agrees with the closed-form table on a small sweep") {
    struct Point {
        const char* family;
        int m, n, scenario;
    };
    const Point points[] = {
        {"tadpole", 3, 1, 2}, {"tadpole", 3, 2, 2}, {"tadpole", 4, 1, 2},
        {"tadpole", 3, 1, 3}, {"tadpole", 3, 2, 3}, {"tadpole", 4, 1, 3},
        {"lollipop", 4, 1, 2}, {"lollipop", 4, 1, 3},
    };
    for (const auto& p : points) {
        CAPTURE(p.family);
        CAPTURE(p.m);
        CAPTURE(p.n);
        CAPTURE(p.scenario);
        const auto target = p.family == std::string("tadpole")
                                ? make_tadpole(p.m, p.n)
                                : make_lollipop(p.m, p.n);
        const auto bond =
            p.family == std::string("tadpole")
                ? tadpole_bound(BoundKind::BondTypes, p.scenario, p.m, p.n)
                : lollipop_bound(BoundKind::BondTypes, p.scenario, p.m, p.n);
        const auto tile =
            p.family == std::string("tadpole")
                ? tadpole_bound(BoundKind::TileTypes, p.scenario, p.m, p.n)
                : lollipop_bound(BoundKind::TileTypes, p.scenario, p.m, p.n);
        REQUIRE(bond.exact.has_value());
        REQUIRE(tile.exact.has_value());
        auto b = min_bond_types(target, p.scenario, 8);
        CHECK(found_min(b) == *bond.exact);
        auto t = min_tile_types(target, p.scenario, 8);
        CHECK(found_min(t) == *tile.exact);
    }
}

TEST_CASE("exhaustion below the minimum") {
    // C4 needs two bond types in the middle scenario, so a 1-type cap
    // exhausts.
    auto r = min_bond_types(make_cycle(4), 2, 1);
    CHECK(r.status == SearchStatus::exhausted);
    CHECK(r.lower_bound == 2);
}

TEST_CASE("budget exhaustion reports indeterminate with a lower bound") {
    auto r = min_bond_types(make_lollipop(6, 2), 3, 10, 50);
    CHECK(r.status == SearchStatus::indeterminate);
    CHECK(r.budget_exceeded);
    CHECK_FALSE(r.minimum.has_value());
    CHECK(r.lower_bound >= 1);
}

TEST_CASE("edgeless targets are unrealizable") {
    auto r = min_bond_types(Multigraph(1), 1, 3);
    CHECK(r.status == SearchStatus::exhausted);
}

TEST_CASE("invalid arguments throw") {
    CHECK_THROWS_AS(min_bond_types(make_cycle(3), 0, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_bond_types(make_cycle(3), 4, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_bond_types(make_cycle(3), 1, 0),
                    std::invalid_argument);
}
