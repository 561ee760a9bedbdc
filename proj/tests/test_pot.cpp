#include "tilepot/pot.hpp"

#include "doctest.h"

using namespace tilepot;

TEST_CASE("natural symbol order") {
    CHECK(natural_symbol_less("a2", "a10"));
    CHECK_FALSE(natural_symbol_less("a10", "a2"));
    CHECK(natural_symbol_less("a", "b"));
    CHECK(natural_symbol_less("a", "a1"));
}

TEST_CASE("tile multiset semantics") {
    Tile t({{"a", false}, {"a", false}, {"b", true}});
    CHECK(t.degree() == 3);
    CHECK(t.count({"a", false}) == 2);
    CHECK(t.count({"b", true}) == 1);
    CHECK(t.count({"b", false}) == 0);

    // Order of construction is irrelevant.
    Tile s({{"b", true}, {"a", false}, {"a", false}});
    CHECK(t == s);
}

TEST_CASE("pot parsing round trip") {
    const std::string text = "{a:3, ~b}; {~a, b:2}; {~a:2}";
    Pot pot = parse_pot(text);
    CHECK(pot.tile_count() == 3);
    CHECK(pot.bond_types() == std::vector<std::string>{"a", "b"});
    CHECK(parse_pot(format_pot(pot)) == pot);
}

TEST_CASE("pot parser formatting is canonical") {
    // Arms print sorted, multiplicities use the :N shorthand.
    Pot pot = parse_pot("{ ~b , a , a }");
    CHECK(format_pot(pot) == "{a:2, ~b}");
}

TEST_CASE("pot parser error reporting") {
    CHECK_THROWS_AS(parse_pot(""), ParseError);
    CHECK_THROWS_AS(parse_pot("{a"), ParseError);
    CHECK_THROWS_AS(parse_pot("{a:0}"), ParseError);
    CHECK_THROWS_AS(parse_pot("{}"), ParseError);
    CHECK_THROWS_AS(parse_pot("{a}; {a}"), std::runtime_error); // duplicate
    try {
        parse_pot("{a};\n{b");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("pot rejects duplicate tiles") {
    Tile t({{"a", false}});
    CHECK_THROWS_AS(Pot({t, t}), std::invalid_argument);
}

TEST_CASE("validate assembly accepts a correct labeling") {
    // Two-vertex graph, one edge labeled a, tiles {a} and {~a}.
    Pot pot = parse_pot("{a}; {~a}");
    LabeledAssembly a;
    a.graph = Multigraph(2);
    a.graph.add_edge(0, 1);
    a.vertex_tiles = {0, 1};
    a.edge_labels = {{"a", 0}};
    CHECK(validate_assembly(a, pot));

    // Wrong orientation: vertex 0 would need the hatted arm.
    a.edge_labels = {{"a", 1}};
    CHECK_FALSE(validate_assembly(a, pot));
}

TEST_CASE("validate assembly handles loops") {
    Pot pot = parse_pot("{a, ~a}");
    LabeledAssembly a;
    a.graph = Multigraph(1);
    a.graph.add_edge(0, 0);
    a.vertex_tiles = {0};
    a.edge_labels = {{"a", 0}};
    CHECK(validate_assembly(a, pot));
}

TEST_CASE("validate assembly rejects malformed input") {
    Pot pot = parse_pot("{a}; {~a}");
    LabeledAssembly a;
    a.graph = Multigraph(2);
    a.graph.add_edge(0, 1);
    a.vertex_tiles = {0, 5}; // dangling tile index
    a.edge_labels = {{"a", 0}};
    CHECK_THROWS_AS(validate_assembly(a, pot), std::invalid_argument);
}
