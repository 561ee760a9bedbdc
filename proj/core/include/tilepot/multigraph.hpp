#pragma once

// Undirected multigraphs with loops and parallel edges, small-graph
// generators (paths, cycles, complete graphs, lollipops, tadpoles),
// degree statistics, and exact isomorphism testing via canonical forms.
//
// Vertices are dense 0-based indices. Edges are stored as unordered
// pairs (u, v) with u <= v; a loop is the pair (v, v). Edge insertion
// order is never observable: equality, hashing, and canonical forms all
// work on the sorted edge multiset.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilepot {

using Edge = std::pair<int, int>; // normalized: first <= second

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Adds an edge between u and v (u == v adds a loop). Endpoints must
    // already exist.
    void add_edge(int u, int v);
    int add_vertex(); // returns the new vertex's index

    // Edge multiset in sorted order (normalized pairs, lexicographic).
    const std::vector<Edge>& edges() const;

    // Degree of v; a loop contributes 2.
    int degree(int v) const;
    std::vector<int> degrees() const;

    bool is_connected() const;
    bool has_loop_or_parallel_edge() const;

    // Canonical edge list: the lexicographically smallest relabeling of
    // the edge multiset over all vertex permutations (computed with
    // partition refinement + individualization; exact).
    std::vector<Edge> canonical_edges() const;

    bool operator==(const Multigraph& other) const;

private:
    int vertex_count_ = 0;
    mutable std::vector<Edge> edges_;
    mutable bool sorted_ = true;

    void ensure_sorted() const;
};

struct DegreeStats {
    int av = 0; // distinct degrees
    int ev = 0; // distinct even degrees
    int ov = 0; // distinct odd degrees
};

// Generators. All throw std::invalid_argument on out-of-range input.
Multigraph make_path(int n);                // n >= 1 vertices
Multigraph make_cycle(int m);               // m >= 3
Multigraph make_complete(int m);            // m >= 1
Multigraph make_lollipop(int m, int n);     // m >= 4, n >= 1; K_m + path P_n
Multigraph make_tadpole(int m, int n);      // m >= 3, n >= 1; C_m + path P_n

DegreeStats degree_stats(const Multigraph& g); // throws on empty graph

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

// Serialization helpers (see serialize.hpp for JSON).
std::string to_dot(const Multigraph& g);

} // namespace tilepot
