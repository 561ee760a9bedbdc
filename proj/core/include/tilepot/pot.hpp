#pragma once

// Bond-edge half-edge labels, tiles (multisets of labels), pots (ordered
// sets of distinct tiles), a small text DSL for pots, and labeled
// assemblies that witness a pot realizing a graph.
//
// DSL grammar (whitespace insignificant):
//   pot   := tile (";" tile)* [";"]
//   tile  := "{" arm ("," arm)* "}"
//   arm   := ["~"] IDENT [":" COUNT]
//   IDENT := letter (letter|digit)* ; COUNT := positive integer
// "~" marks the hatted (complementary) version of a bond type; ":N" is a
// multiplicity shorthand, e.g. "{a:3}" is the tile {a, a, a}.

#include "tilepot/multigraph.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilepot {

// Orders symbols so numeric suffixes sort numerically: a2 < a10.
bool natural_symbol_less(const std::string& a, const std::string& b);

struct HalfEdgeLabel {
    std::string bond_type;
    bool hatted = false;

    HalfEdgeLabel complement() const { return {bond_type, !hatted}; }

    bool operator==(const HalfEdgeLabel&) const = default;
    bool operator<(const HalfEdgeLabel& other) const {
        if (bond_type != other.bond_type)
            return natural_symbol_less(bond_type, other.bond_type);
        return hatted < other.hatted; // un-hatted sorts first
    }
};

class Tile {
public:
    Tile() = default;
    explicit Tile(std::vector<HalfEdgeLabel> arms);

    // Sorted (label -> multiplicity) view; multiset semantics.
    const std::vector<std::pair<HalfEdgeLabel, int>>& arms() const {
        return arms_;
    }
    int degree() const { return degree_; }
    int count(const HalfEdgeLabel& label) const;

    bool operator==(const Tile&) const = default;
    bool operator<(const Tile& other) const { return arms_ < other.arms_; }

private:
    std::vector<std::pair<HalfEdgeLabel, int>> arms_;
    int degree_ = 0;
};

class Pot {
public:
    Pot() = default;
    // Throws on empty tile list, empty tiles, or duplicate tiles.
    explicit Pot(std::vector<Tile> tiles);

    const std::vector<Tile>& tiles() const { return tiles_; }
    // All bond-type symbols appearing in any tile, in natural order.
    const std::vector<std::string>& bond_types() const { return bond_types_; }
    std::size_t tile_count() const { return tiles_.size(); }

    bool operator==(const Pot&) const = default;

private:
    std::vector<Tile> tiles_;
    std::vector<std::string> bond_types_;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line, int column);
};

Pot parse_pot(const std::string& text); // throws ParseError
std::string format_pot(const Pot& pot); // canonical; parse round-trips

// A labeled assembly: tiles assigned to vertices and an oriented bond
// type on every edge. edge_labels runs parallel to graph.edges();
// unhatted_end names the endpoint holding the un-hatted half-edge (for a
// loop both halves sit on the single vertex and the field is ignored).
struct EdgeLabel {
    std::string bond_type;
    int unhatted_end = 0;
};

struct LabeledAssembly {
    Multigraph graph;
    std::vector<int> vertex_tiles; // vertex -> tile index into the pot
    std::vector<EdgeLabel> edge_labels;
};

// True iff every vertex's induced arm multiset equals its assigned tile
// (loops contribute one hatted and one un-hatted arm of the loop's type).
// Throws std::invalid_argument on dangling indices / size mismatches.
bool validate_assembly(const LabeledAssembly& assembly, const Pot& pot);

} // namespace tilepot
