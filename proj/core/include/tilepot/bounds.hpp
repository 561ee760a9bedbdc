#pragma once

// Closed-form minimum bond-edge-type and tile-type counts (exact values
// or ranges) for lollipop, tadpole, complete, and cycle targets, plus
// the general lower bounds implied by an appended path.

#include <optional>
#include <string>

namespace tilepot {

enum class BoundKind { BondTypes, TileTypes };

struct BoundValue {
    std::optional<long long> exact; // set iff lower == upper
    long long lower = 0;
    long long upper = 0;
};

// m >= 4 (m = 3 is answered by the tadpole formulas), n >= 1.
BoundValue lollipop_bound(BoundKind kind, int scenario, int m, int n);

// m >= 3, n >= 1.
BoundValue tadpole_bound(BoundKind kind, int scenario, int m, int n);

// Lower bound forced by a path of n edges appended to any graph of
// order m, under scenario 2 or 3. m >= 1, n >= 1.
long long appended_path_lower_bound(BoundKind kind, int scenario, int m,
                                    int n);

// family is "complete" or "cycle"; m >= 3.
BoundValue reference_bound(const std::string& family, BoundKind kind,
                           int scenario, int m);

} // namespace tilepot
