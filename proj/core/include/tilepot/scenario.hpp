#pragma once

// Scenario verdicts: does a pot realize a target (level 1), realize
// nothing smaller (level 2), realize nothing non-isomorphic of equal
// order (level 3)? Budget exhaustion yields an explicit indeterminate
// verdict, never a silent pass.

#include "tilepot/assembly.hpp"

#include <optional>
#include <string>

namespace tilepot {

enum class Verdict { pass, fail, indeterminate };

enum class FailureReason {
    does_not_realize,
    smaller_order,
    same_order_non_isomorphic,
};

struct ScenarioWitness {
    Multigraph graph;
    std::optional<LabeledAssembly> assembly; // absent for does_not_realize
    FailureReason reason;
};

struct ScenarioCaps {
    // Enumeration caps; defaults (when unset): level 2 checks orders
    // < |target|, level 3 additionally order |target|.
    std::optional<long long> level2_cap;
    std::optional<long long> level3_cap;
    long long budget = 10'000'000;
};

struct ScenarioVerdict {
    int scenario = 1;
    Verdict verdict = Verdict::indeterminate;
    std::optional<ScenarioWitness> witness;
    long long level2_cap_used = 0;
    long long level3_cap_used = 0;
    long long nodes_used = 0;

    bool pass() const { return verdict == Verdict::pass; }
};

ScenarioVerdict check_scenario(const Pot& pot, const Multigraph& target,
                               int level, const ScenarioCaps& caps = {});

// As check_scenario, but takes an already-known realization witness and
// skips the realizes() search (used by the labeling-search oracle).
ScenarioVerdict check_scenario_with_witness(const Pot& pot,
                                            const Multigraph& target,
                                            int level,
                                            const ScenarioCaps& caps,
                                            Budget& budget);

struct OptimalityReport {
    ScenarioVerdict verdict;
    long long bond_types = 0;
    long long tile_types = 0;
    bool counts_match = false; // pot counts equal the claimed B and T
    bool confirmed = false;    // counts match and scenario passes
};

OptimalityReport verify_optimality(const Multigraph& target, int scenario,
                                   long long claimed_bond_types,
                                   long long claimed_tile_types,
                                   const Pot& pot,
                                   const ScenarioCaps& caps = {});

} // namespace tilepot
