#pragma once

// Brute-force oracle for the true minimum bond-edge-type and tile-type
// counts of a target graph under a scenario. Exhausts edge-labelings of
// the target (type + orientation per edge) in canonical order and tests
// each induced pot; intended for desk-scale targets.

#include "tilepot/scenario.hpp"

#include <optional>

namespace tilepot {

enum class SearchStatus {
    found,        // minimum determined, witness attached
    exhausted,    // no labeling up to max_types passes
    indeterminate // budget ran out; lower_bound is still verified
};

struct SearchResult {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<long long> minimum;
    // No scenario-passing labeling exists with fewer than lower_bound
    // types; equals minimum when found.
    long long lower_bound = 1;
    std::optional<Pot> witness_pot;
    std::optional<LabeledAssembly> witness_assembly;
    long long explored = 0; // complete labelings tested
    long long nodes_used = 0;
    bool budget_exceeded = false;
};

// Least number of bond-edge types (<= max_types) for which some
// edge-labeling of the target induces a pot passing the scenario.
// Labelings equivalent under type renaming or per-type orientation
// flips are enumerated once.
SearchResult min_bond_types(const Multigraph& target, int scenario,
                            int max_types, long long budget = 10'000'000);

// Least number of distinct tile types (<= max_types); the bond-type
// count is unconstrained up to the edge count.
SearchResult min_tile_types(const Multigraph& target, int scenario,
                            int max_types, long long budget = 10'000'000);

} // namespace tilepot
