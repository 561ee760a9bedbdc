#include "tilepot/assembly.hpp"

#include "tilepot/constructions.hpp"

#include "doctest.h"

#include <set>

using namespace tilepot;

TEST_CASE("realizes finds a valid witness") {
    Pot pot = parse_pot("{a:2}; {~a:2}");
    auto c4 = make_cycle(4);
    auto witness = realizes(pot, c4);
    REQUIRE(witness.has_value());
    CHECK(witness->graph.canonical_edges() == c4.canonical_edges());
    CHECK(validate_assembly(*witness, pot));
}

TEST_CASE("realizes rejects impossible targets") {
    // Odd cycle from a strictly alternating pot is impossible.
    Pot pot = parse_pot("{a:2}; {~a:2}");
    CHECK_FALSE(realizes(pot, make_cycle(5)).has_value());

    // Degree mismatch: no degree-3 tile available.
    CHECK_FALSE(realizes(pot, make_complete(4)).has_value());
}

TEST_CASE("realizes respects usage proportions") {
    // {a:3}; {~a}: every complex uses tiles 1:3, so a star K_{1,3}
    // works but a path does not.
    Pot pot = parse_pot("{a:3}; {~a}");
    Multigraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(realizes(pot, star).has_value());
    CHECK_FALSE(realizes(pot, make_path(4)).has_value());
}

TEST_CASE("enumerate complexes lists small closed shapes") {
    // {a, ~a} alone forms a loop vertex at order 1, and cycles/paths of
    // a-edges at every order; all complexes at each order up to iso.
    Pot pot = parse_pot("{a, ~a}");
    auto catalog = enumerate_complexes(pot, 3);
    REQUIRE_FALSE(catalog.budget_exceeded);
    // Order 1: single tile with a loop.
    REQUIRE(catalog.by_order.count(1) == 1);
    CHECK(catalog.by_order.at(1).size() == 1);
    CHECK(catalog.by_order.at(1)[0].graph.edge_count() == 1);
    // Order 2: double edge between the two tiles.
    REQUIRE(catalog.by_order.count(2) == 1);
    CHECK(catalog.by_order.at(2).size() == 1);
    // Order 3: the triangle C3.
    REQUIRE(catalog.by_order.count(3) == 1);
    CHECK(is_isomorphic(catalog.by_order.at(3)[0].graph, make_cycle(3)));
}

TEST_CASE("enumerate complexes deduplicates up to isomorphism") {
    Pot pot = parse_pot("{a:2}; {~a:2}");
    auto catalog = enumerate_complexes(pot, 4);
    REQUIRE_FALSE(catalog.budget_exceeded);
    for (const auto& [order, entries] : catalog.by_order) {
        std::set<std::vector<Edge>> seen;
        for (const auto& entry : entries) {
            CHECK(entry.graph.vertex_count() == order);
            CHECK(seen.insert(entry.graph.canonical_edges()).second);
            CHECK(validate_assembly(entry.witness, pot));
        }
    }
    // Order 2: only the double a-edge; order 4: only C4 (alternating
    // tiles forbid odd cycles and any other 4-vertex 2-regular shape).
    CHECK(catalog.by_order.at(2).size() == 1);
    REQUIRE(catalog.by_order.count(4) == 1);
    CHECK(catalog.by_order.at(4).size() == 1);
    CHECK(is_isomorphic(catalog.by_order.at(4)[0].graph, make_cycle(4)));
}

TEST_CASE("enumeration visitor can stop early") {
    Pot pot = parse_pot("{a, ~a}");
    int calls = 0;
    enumerate_complexes(pot, 5, nullptr,
                        [&](long long, const CatalogEntry&) {
                            ++calls;
                            return false;
                        });
    CHECK(calls == 1);
}

TEST_CASE("complex from usage pairs arms greedily") {
    Pot pot = parse_pot("{a:2}; {~a:2}");
    UsageVector usage;
    usage.counts = {1, 1};
    usage.order = 2;
    auto entry = complex_from_usage(pot, usage);
    CHECK(entry.graph.vertex_count() == 2);
    CHECK(entry.graph.edge_count() == 2); // double edge
    CHECK(validate_assembly(entry.witness, pot));
}

TEST_CASE("smallest realized order equals the catalog minimum") {
    // Cross-check the usage-based shortcut against full enumeration.
    const char* pots[] = {
        "{a:2}; {~a:2}",
        "{a:3}; {~a}",
        "{a, b}; {~a, ~b}",
        "{a:2, b}; {~a, ~b:2}; {~a, b}",
        "{a:4}; {~a:2}; {~a, b}; {~b}",
    };
    for (const char* text : pots) {
        Pot pot = parse_pot(text);
        auto fast = smallest_realized_order(pot, 8);
        auto catalog = enumerate_complexes(pot, 8);
        REQUIRE_FALSE(catalog.budget_exceeded);
        long long slow = 0;
        for (const auto& [order, entries] : catalog.by_order)
            if (!entries.empty()) {
                slow = order;
                break;
            }
        if (slow == 0) {
            CHECK_FALSE(fast.has_value());
        } else {
            REQUIRE(fast.has_value());
            CHECK(fast->first == slow);
            CHECK(fast->second.vertex_count() == slow);
        }
    }
}

TEST_CASE("smallest realized order respects the cap") {
    Pot pot = parse_pot("{a:3}; {~a}"); // minimum order 4
    CHECK_FALSE(smallest_realized_order(pot, 3).has_value());
    auto r = smallest_realized_order(pot, 4);
    REQUIRE(r.has_value());
    CHECK(r->first == 4);
}

TEST_CASE("budget exhaustion is reported") {
    Pot pot = parse_pot("{a:2, b}; {~a, ~b:2}; {~a, b}; {a, ~b}");
    Budget tiny(5);
    auto catalog = enumerate_complexes(pot, 6, &tiny);
    CHECK(catalog.budget_exceeded);
    CHECK(tiny.exceeded);
}
