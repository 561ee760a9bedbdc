#include "tilepot/serialize.hpp"

#include "tilepot/constructions.hpp"

#include "doctest.h"

using namespace tilepot;

TEST_CASE("graph json round trip") {
    auto g = make_tadpole(4, 2);
    auto j = graph_to_json(g);
    CHECK(j["vertices"] == 6);
    CHECK(j["edges"].size() == 6);
    auto back = graph_from_json(j);
    CHECK(back.canonical_edges() == g.canonical_edges());

    // Loops and parallel edges survive.
    Multigraph m(2);
    m.add_edge(0, 0);
    m.add_edge(0, 1);
    m.add_edge(0, 1);
    CHECK(graph_from_json(graph_to_json(m)).edges() == m.edges());
}

TEST_CASE("pot json round trip") {
    Pot pot = parse_pot("{a:2, ~b}; {~a, b}; {~a}");
    auto j = pot_to_json(pot);
    CHECK(j["tiles"].size() == 3);
    CHECK(pot_from_json(j) == pot);
}

TEST_CASE("rational json round trip") {
    Rational r(-3, 9);
    r.canonicalize();
    auto j = rational_to_json(r);
    CHECK(j["num"] == -1);
    CHECK(j["den"] == 3);
    CHECK(rational_from_json(j) == r);
}

TEST_CASE("json output is deterministic") {
    Pot pot = tadpole_pot(2, 5, 2);
    CHECK(pot_to_json(pot).dump() == pot_to_json(pot).dump());
    auto s = solve_spectrum(construction_matrix(pot));
    CHECK(spectrum_to_json(s).dump() == spectrum_to_json(s).dump());
}

TEST_CASE("spectrum and matrix serialization shape") {
    Pot pot = parse_pot("{a}; {~a}; {a, ~a}");
    auto m = construction_matrix(pot);
    auto jm = matrix_to_json(m);
    CHECK(jm["bond_types"].size() == 1);
    CHECK(jm["rows"].size() == 2); // one bond row plus the sum row
    auto js = spectrum_to_json(solve_spectrum(m));
    CHECK(js["empty"] == false);
    CHECK(js["particular"].size() == 3);
    CHECK(js["basis"].size() == 1);
}

TEST_CASE("assembly serialization and dot export") {
    Pot pot = parse_pot("{a:2}; {~a:2}");
    auto witness = realizes(pot, make_cycle(4));
    REQUIRE(witness.has_value());
    auto j = assembly_to_json(*witness);
    CHECK(j["vertex_tiles"].size() == 4);
    CHECK(j["edge_labels"].size() == 4);
    auto dot = assembly_to_dot(*witness);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("a") != std::string::npos);
}

TEST_CASE("verdict serialization carries the witness") {
    Pot pot = parse_pot("{a, ~a}");
    auto v = check_scenario(pot, make_cycle(4), 2);
    auto j = verdict_to_json(v);
    CHECK(j["scenario"] == 2);
    CHECK(j["verdict"] == "fail");
    CHECK(j.contains("witness"));
}

TEST_CASE("bound serialization distinguishes exact from range") {
    auto exact = tadpole_bound(BoundKind::BondTypes, 2, 5, 2);
    auto je = bound_to_json(exact);
    CHECK(je["lower"] == je["upper"]);
    auto range = tadpole_bound(BoundKind::BondTypes, 2, 4, 7);
    auto jr = bound_to_json(range);
    CHECK(jr["lower"] == 5);
    CHECK(jr["upper"] == 7);
}
