#pragma once

// Closed-form pot constructions for lollipop and tadpole targets under
// all three scenarios, plus the two cautionary hub-labeling pots used to
// demonstrate scenario-3 failure thresholds for long appended paths.

#include "tilepot/pot.hpp"

#include <string>

namespace tilepot {

struct PotRecipe {
    std::string family;  // "lollipop" | "tadpole"
    int scenario = 1;
    std::string regime;  // path-length regime and parity descriptor
    std::string rule;    // identifier of the construction rule applied
};

// m >= 4, n >= 1, scenario in {1,2,3}. Throws std::invalid_argument on
// out-of-range input (m = 3 callers are directed to tadpole_pot).
Pot lollipop_pot(int scenario, int m, int n, PotRecipe* recipe = nullptr);

// m >= 3, n >= 1, scenario in {1,2,3}.
Pot tadpole_pot(int scenario, int m, int n, PotRecipe* recipe = nullptr);

// "example-1": every edge at the bridging vertex shares one bond type.
// "example-2": one bond type labels two edges at the bridging vertex.
// Both realize L_{m,n}; for large n they admit complexes smaller than
// the target, which is the point.
Pot counterexample_pot(const std::string& which, int m, int n,
                       PotRecipe* recipe = nullptr);

} // namespace tilepot
