#pragma once

// JSON and DOT serialization for every public artifact: graphs, pots,
// rationals, construction matrices, spectra, usage vectors, assemblies,
// catalogs, verdicts, search results, and bounds. Output is
// deterministic: identical inputs give byte-identical JSON.

#include "tilepot/bounds.hpp"
#include "tilepot/min_search.hpp"

#include <nlohmann/json.hpp>

namespace tilepot {

using json = nlohmann::ordered_json;

// {"vertices": N, "edges": [[u,v], ...]} with u <= v; loops as [v,v].
json graph_to_json(const Multigraph& graph);
Multigraph graph_from_json(const json& j);

// {"tiles": [["a","a","~b"], ...]} with arms expanded and sorted.
json pot_to_json(const Pot& pot);
Pot pot_from_json(const json& j);

// {"num": int, "den": int}, canonicalized with den > 0.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json matrix_to_json(const ConstructionMatrix& matrix);
json spectrum_to_json(const Spectrum& spectrum);
json usage_to_json(const UsageVector& usage);

json assembly_to_json(const LabeledAssembly& assembly);
json catalog_to_json(const ComplexCatalog& catalog);
json verdict_to_json(const ScenarioVerdict& verdict);
json search_result_to_json(const SearchResult& result);
json bound_to_json(const BoundValue& bound);

// Directed DOT with each edge drawn from its un-hatted toward its
// hatted end, labeled with the bond type; vertices labeled by tile.
std::string assembly_to_dot(const LabeledAssembly& assembly);

} // namespace tilepot
