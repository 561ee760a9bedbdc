#pragma once

// Deciding whether a pot realizes a target graph (witness search) and
// enumerating all connected complete complexes a pot can form up to a
// given order. "Realized graph" always means a connected complete
// complex; disconnected matchings are discarded (their components are
// realized graphs in their own right and appear at their own orders).

#include "tilepot/pot.hpp"
#include "tilepot/spectrum.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace tilepot {

// Work budget counted in search-node expansions, shared across the
// realization and matching searches.
struct Budget {
    long long limit = 10'000'000;
    long long used = 0;
    bool exceeded = false;

    explicit Budget(long long limit = 10'000'000) : limit(limit) {}

    // Returns false once the budget is exhausted.
    bool spend(long long n = 1) {
        used += n;
        if (used > limit) exceeded = true;
        return !exceeded;
    }
};

struct CatalogEntry {
    Multigraph graph;
    LabeledAssembly witness;
};

struct ComplexCatalog {
    std::map<long long, std::vector<CatalogEntry>> by_order;
    bool budget_exceeded = false;
    long long nodes_used = 0;
};

// Witness assembly of the target from the pot, or nullopt. Deterministic
// search order: vertices by degree descending (index tiebreak), tiles by
// pot index. A null budget means the default budget.
std::optional<LabeledAssembly> realizes(const Pot& pot,
                                        const Multigraph& target,
                                        Budget* budget = nullptr);

// Called for each connected complete complex found (already deduplicated
// within its order); return false to stop the enumeration early.
using ComplexVisitor =
    std::function<bool(long long order, const CatalogEntry& entry)>;

// All connected complete complexes of order <= max_order, up to
// isomorphism, one witness each. On budget exhaustion the catalog is
// returned partially filled with budget_exceeded set.
ComplexCatalog enumerate_complexes(const Pot& pot, long long max_order,
                                   Budget* budget = nullptr,
                                   const ComplexVisitor& visitor = nullptr);

// As enumerate_complexes, but for one exact order.
void enumerate_complexes_at_order(const Pot& pot, long long order,
                                  Budget* budget,
                                  const ComplexVisitor& visitor);

// A concrete complete complex for a usage vector, built by pairing
// complementary arms greedily; when the usage has minimal order the
// result is connected (a disconnected pairing would split the usage
// into strictly smaller ones). Otherwise one connected component of
// the pairing is returned.
CatalogEntry complex_from_usage(const Pot& pot, const UsageVector& usage);

// Least order N <= cap at which the pot realizes some graph, with one
// witness graph. Any net-zero usage vector admits a complete complex
// whose components are realized graphs, so this equals the minimum
// usage order; nullopt when no usage vector exists within the cap.
std::optional<std::pair<long long, Multigraph>> smallest_realized_order(
    const Pot& pot, long long cap, Budget* budget = nullptr);

} // namespace tilepot
