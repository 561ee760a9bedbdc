#include "tilepot/serialize.hpp"

#include <sstream>

namespace tilepot {

namespace {

std::string arm_to_string(const HalfEdgeLabel& label) {
    return label.hatted ? "~" + label.bond_type : label.bond_type;
}

HalfEdgeLabel arm_from_string(const std::string& text) {
    if (!text.empty() && text.front() == '~')
        return {text.substr(1), true};
    return {text, false};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "indeterminate";
    }
}

const char* reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::does_not_realize: return "does-not-realize";
        case FailureReason::smaller_order: return "smaller-order";
        default: return "same-order-non-isomorphic";
    }
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        default: return "indeterminate";
    }
}

} // namespace

json graph_to_json(const Multigraph& graph) {
    json edges = json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    return {{"vertices", graph.vertex_count()}, {"edges", edges}};
}

Multigraph graph_from_json(const json& j) {
    Multigraph graph(j.at("vertices").get<int>());
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument("edge must be a pair [u, v]");
        graph.add_edge(edge[0].get<int>(), edge[1].get<int>());
    }
    return graph;
}

json pot_to_json(const Pot& pot) {
    json tiles = json::array();
    for (const Tile& tile : pot.tiles()) {
        json arms = json::array();
        for (const auto& [label, count] : tile.arms())
            for (int c = 0; c < count; ++c)
                arms.push_back(arm_to_string(label));
        tiles.push_back(arms);
    }
    return {{"tiles", tiles}};
}

Pot pot_from_json(const json& j) {
    std::vector<Tile> tiles;
    for (const auto& tile : j.at("tiles")) {
        std::vector<HalfEdgeLabel> arms;
        for (const auto& arm : tile)
            arms.push_back(arm_from_string(arm.get<std::string>()));
        tiles.push_back(Tile(arms));
    }
    return Pot(tiles);
}

json rational_to_json(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return {{"num", static_cast<long long>(c.get_num().get_si())},
            {"den", static_cast<long long>(c.get_den().get_si())}};
}

Rational rational_from_json(const json& j) {
    Rational r(mpz_class(static_cast<long>(j.at("num").get<long long>())),
               mpz_class(static_cast<long>(j.at("den").get<long long>())));
    r.canonicalize();
    return r;
}

json matrix_to_json(const ConstructionMatrix& matrix) {
    json rows = json::array();
    for (const auto& row : matrix.rows) {
        json out = json::array();
        for (const auto& entry : row) out.push_back(rational_to_json(entry));
        rows.push_back(out);
    }
    return {{"bond_types", matrix.bond_types}, {"rows", rows}};
}

json spectrum_to_json(const Spectrum& spectrum) {
    json j;
    j["empty"] = spectrum.empty;
    json particular = json::array();
    for (const auto& entry : spectrum.particular)
        particular.push_back(rational_to_json(entry));
    j["particular"] = particular;
    json basis = json::array();
    for (const auto& vec : spectrum.basis) {
        json out = json::array();
        for (const auto& entry : vec) out.push_back(rational_to_json(entry));
        basis.push_back(out);
    }
    j["basis"] = basis;
    j["free_columns"] = spectrum.free_columns;
    return j;
}

json usage_to_json(const UsageVector& usage) {
    return {{"counts", usage.counts}, {"order", usage.order}};
}

json assembly_to_json(const LabeledAssembly& assembly) {
    json labels = json::array();
    for (const auto& label : assembly.edge_labels)
        labels.push_back({{"bond_type", label.bond_type},
                          {"unhatted_end", label.unhatted_end}});
    return {{"graph", graph_to_json(assembly.graph)},
            {"vertex_tiles", assembly.vertex_tiles},
            {"edge_labels", labels}};
}

json catalog_to_json(const ComplexCatalog& catalog) {
    json entries = json::array();
    for (const auto& [order, list] : catalog.by_order)
        for (const auto& entry : list)
            entries.push_back({{"order", order},
                               {"graph", graph_to_json(entry.graph)},
                               {"witness", assembly_to_json(entry.witness)}});
    return {{"complexes", entries},
            {"budget_exceeded", catalog.budget_exceeded},
            {"nodes_used", catalog.nodes_used}};
}

json verdict_to_json(const ScenarioVerdict& verdict) {
    json j;
    j["scenario"] = verdict.scenario;
    j["verdict"] = verdict_name(verdict.verdict);
    if (verdict.witness) {
        json w;
        w["reason"] = reason_name(verdict.witness->reason);
        w["graph"] = graph_to_json(verdict.witness->graph);
        if (verdict.witness->assembly)
            w["assembly"] = assembly_to_json(*verdict.witness->assembly);
        j["witness"] = w;
    }
    j["level2_cap_used"] = verdict.level2_cap_used;
    j["level3_cap_used"] = verdict.level3_cap_used;
    j["nodes_used"] = verdict.nodes_used;
    return j;
}

json search_result_to_json(const SearchResult& result) {
    json j;
    j["status"] = status_name(result.status);
    if (result.minimum) j["minimum"] = *result.minimum;
    j["lower_bound"] = result.lower_bound;
    if (result.witness_pot) j["witness_pot"] = format_pot(*result.witness_pot);
    if (result.witness_assembly)
        j["witness_assembly"] = assembly_to_json(*result.witness_assembly);
    j["explored"] = result.explored;
    j["nodes_used"] = result.nodes_used;
    j["budget_exceeded"] = result.budget_exceeded;
    return j;
}

json bound_to_json(const BoundValue& bound) {
    json j;
    j["lower"] = bound.lower;
    j["upper"] = bound.upper;
    if (bound.exact) j["exact"] = *bound.exact;
    return j;
}

std::string assembly_to_dot(const LabeledAssembly& assembly) {
    std::ostringstream out;
    out << "digraph assembly {\n";
    for (int v = 0; v < assembly.graph.vertex_count(); ++v)
        out << "  " << v << " [label=\"v" << v << " (t"
            << assembly.vertex_tiles[v] + 1 << ")\"];\n";
    const auto& edges = assembly.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [u, v] = edges[i];
        const auto& label = assembly.edge_labels[i];
        const int from = u == v ? u : label.unhatted_end;
        const int to = u == v ? v : (label.unhatted_end == u ? v : u);
        out << "  " << from << " -> " << to << " [label=\""
            << label.bond_type << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace tilepot
