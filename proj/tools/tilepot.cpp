// tilepot: command-line front end for the tile/pot toolkit.
//
// Exit codes: 0 pass, 1 fail, 2 indeterminate, 3 input/usage errors
// raised here, >100 for flag parse errors.

#include "tilepot/bounds.hpp"
#include "tilepot/constructions.hpp"
#include "tilepot/min_search.hpp"
#include "tilepot/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tilepot;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 3;

long long default_budget() {
    if (const char* env = std::getenv("TILEPOT_BUDGET")) {
        char* end = nullptr;
        const double parsed = std::strtod(env, &end);
        if (end != env && parsed >= 1) return static_cast<long long>(parsed);
    }
    return 10'000'000;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Multigraph load_graph(const std::string& path) {
    return graph_from_json(json::parse(read_file(path)));
}

Multigraph make_family_graph(const std::string& family, int m, int n) {
    if (family == "lollipop") return make_lollipop(m, n);
    if (family == "tadpole") return make_tadpole(m, n);
    if (family == "cycle") return make_cycle(m);
    if (family == "complete") return make_complete(m);
    if (family == "path") return make_path(m);
    throw std::invalid_argument("unknown graph family: " + family);
}

Pot make_family_pot(const std::string& family, int scenario, int m, int n,
                    PotRecipe* recipe) {
    if (family == "lollipop") return lollipop_pot(scenario, m, n, recipe);
    if (family == "tadpole") return tadpole_pot(scenario, m, n, recipe);
    if (family == "example-1" || family == "example-2")
        return counterexample_pot(family, m, n, recipe);
    throw std::invalid_argument("unknown pot family: " + family);
}

// "family:m,n" (n optional), e.g. "tadpole:5,2" or "cycle:6".
Multigraph parse_target(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("target must look like family:m[,n]");
    const std::string family = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    const auto comma = params.find(',');
    const int m = std::stoi(params.substr(0, comma));
    const int n =
        comma == std::string::npos ? 1 : std::stoi(params.substr(comma + 1));
    return make_family_graph(family, m, n);
}

std::string matrix_to_text(const ConstructionMatrix& matrix) {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 1;
    for (const auto& row : matrix.rows) {
        cells.emplace_back();
        for (const auto& entry : row) {
            cells.back().push_back(entry.get_str());
            width = std::max(width, cells.back().back().size());
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            if (j + 1 == cells[i].size()) out << "| ";
            out << std::string(width - cells[i][j].size(), ' ')
                << cells[i][j] << ' ';
        }
        out << "]";
        if (i < matrix.bond_types.size())
            out << "  " << matrix.bond_types[i];
        else
            out << "  (sum)";
        out << '\n';
    }
    return out.str();
}

std::string spectrum_to_text(const Spectrum& spectrum) {
    std::ostringstream out;
    if (spectrum.empty) return "spectrum: empty (no solutions)\n";
    out << "particular: (";
    for (std::size_t i = 0; i < spectrum.particular.size(); ++i)
        out << (i ? ", " : "") << spectrum.particular[i].get_str();
    out << ")\n";
    for (std::size_t b = 0; b < spectrum.basis.size(); ++b) {
        out << "free r" << spectrum.free_columns[b] + 1 << " direction: (";
        for (std::size_t i = 0; i < spectrum.basis[b].size(); ++i)
            out << (i ? ", " : "") << spectrum.basis[b][i].get_str();
        out << ")\n";
    }
    return out.str();
}

int cmd_gen_graph(const std::string& family, int m, int n, bool dot) {
    const Multigraph graph = make_family_graph(family, m, n);
    if (dot)
        std::cout << to_dot(graph);
    else
        std::cout << graph_to_json(graph).dump(2) << '\n';
    return kExitPass;
}

int cmd_gen_pot(const std::string& family, int scenario, int m, int n,
                bool as_json) {
    PotRecipe recipe;
    const Pot pot = make_family_pot(family, scenario, m, n, &recipe);
    if (as_json) {
        json j = pot_to_json(pot);
        j["pot"] = format_pot(pot);
        j["family"] = recipe.family;
        j["scenario"] = recipe.scenario;
        j["regime"] = recipe.regime;
        j["rule"] = recipe.rule;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << format_pot(pot) << '\n';
    }
    return kExitPass;
}

int cmd_analyze(const std::string& pot_path, long long cap, bool as_json) {
    const Pot pot = parse_pot(read_file(pot_path));
    const ConstructionMatrix matrix = construction_matrix(pot);
    const Spectrum spectrum = solve_spectrum(matrix);
    const auto usage = min_usage_order(pot, cap);
    if (as_json) {
        json j;
        j["pot"] = format_pot(pot);
        j["matrix"] = matrix_to_json(matrix);
        j["spectrum"] = spectrum_to_json(spectrum);
        j["usage_cap"] = cap;
        if (usage) j["min_usage"] = usage_to_json(*usage);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "pot: " << format_pot(pot) << '\n'
                  << "construction matrix:\n"
                  << matrix_to_text(matrix) << spectrum_to_text(spectrum);
        if (usage) {
            std::cout << "min usage order: " << usage->order << " (counts";
            for (long long c : usage->counts) std::cout << ' ' << c;
            std::cout << ")\n";
        } else {
            std::cout << "min usage order: none up to cap " << cap << '\n';
        }
    }
    return kExitPass;
}

int cmd_check(const std::string& pot_path, const std::string& graph_path,
              int scenario, long long budget, bool as_json) {
    const Pot pot = parse_pot(read_file(pot_path));
    const Multigraph target = load_graph(graph_path);
    ScenarioCaps caps;
    caps.budget = budget;
    const ScenarioVerdict verdict = check_scenario(pot, target, scenario, caps);
    if (as_json)
        std::cout << verdict_to_json(verdict).dump(2) << '\n';
    else
        std::cout << "scenario " << scenario << ": "
                  << verdict_to_json(verdict)["verdict"].get<std::string>()
                  << '\n';
    switch (verdict.verdict) {
        case Verdict::pass: return kExitPass;
        case Verdict::fail: return kExitFail;
        default: return kExitIndeterminate;
    }
}

int cmd_bounds(const std::string& family, BoundKind kind, int scenario,
               int m, int n) {
    BoundValue value;
    json j;
    if (family == "lollipop") {
        value = lollipop_bound(kind, scenario, m, n);
    } else if (family == "tadpole") {
        value = tadpole_bound(kind, scenario, m, n);
    } else {
        value = reference_bound(family, kind, scenario, m);
    }
    j = bound_to_json(value);
    j["family"] = family;
    j["kind"] = kind == BoundKind::BondTypes ? "B" : "T";
    j["scenario"] = scenario;
    j["m"] = m;
    if (family == "lollipop" || family == "tadpole") j["n"] = n;
    std::cout << j.dump(2) << '\n';
    return kExitPass;
}

int cmd_search_min(const std::string& target_spec, int scenario,
                   const std::string& kind, int max_types,
                   long long budget) {
    const Multigraph target = parse_target(target_spec);
    const int cap = max_types > 0 ? max_types
                                  : static_cast<int>(target.edge_count());
    const SearchResult result =
        kind == "bond" ? min_bond_types(target, scenario, cap, budget)
                       : min_tile_types(target, scenario, cap, budget);
    std::cout << search_result_to_json(result).dump(2) << '\n';
    switch (result.status) {
        case SearchStatus::found: return kExitPass;
        case SearchStatus::exhausted: return kExitFail;
        default: return kExitIndeterminate;
    }
}

int cmd_verify_table(const std::string& family, int scenario, int max_order,
                     long long budget) {
    const int min_m = family == "tadpole" ? 3 : 4;
    json points = json::array();
    bool all_pass = true;
    for (int m = min_m; m + 1 <= max_order; ++m) {
        for (int n = 1; m + n <= max_order; ++n) {
            const Multigraph target = family == "tadpole"
                                          ? make_tadpole(m, n)
                                          : make_lollipop(m, n);
            PotRecipe recipe;
            const Pot pot = make_family_pot(family, scenario, m, n, &recipe);
            ScenarioCaps caps;
            caps.budget = budget;
            const ScenarioVerdict verdict =
                check_scenario(pot, target, scenario, caps);
            const BoundValue bond_bound =
                family == "tadpole"
                    ? tadpole_bound(BoundKind::BondTypes, scenario, m, n)
                    : lollipop_bound(BoundKind::BondTypes, scenario, m, n);
            const BoundValue tile_bound =
                family == "tadpole"
                    ? tadpole_bound(BoundKind::TileTypes, scenario, m, n)
                    : lollipop_bound(BoundKind::TileTypes, scenario, m, n);
            const long long bonds =
                static_cast<long long>(pot.bond_types().size());
            const long long tiles = static_cast<long long>(pot.tile_count());
            const bool in_range =
                bonds >= bond_bound.lower && bonds <= bond_bound.upper &&
                tiles >= tile_bound.lower && tiles <= tile_bound.upper;
            const bool ok = verdict.pass() && in_range;
            all_pass = all_pass && ok;
            points.push_back({{"m", m},
                              {"n", n},
                              {"pot", format_pot(pot)},
                              {"rule", recipe.rule},
                              {"verdict", verdict_to_json(verdict)["verdict"]},
                              {"bond_types", bonds},
                              {"tile_types", tiles},
                              {"counts_in_range", in_range},
                              {"ok", ok}});
        }
    }
    json report = {{"family", family},
                   {"scenario", scenario},
                   {"max_order", max_order},
                   {"all_pass", all_pass},
                   {"points", points}};
    std::cout << report.dump(2) << '\n';
    return all_pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tile/pot toolkit for flexible-tile self-assembly designs"};
    app.require_subcommand(1);

    std::string family, pot_path, graph_path, target_spec, kind = "bond";
    int m = 0, n = 1, scenario = 1, max_types = 0, max_order = 10;
    long long cap = 25;
    long long budget = default_budget();
    bool dot = false, as_json = false;

    auto* gen_graph = app.add_subcommand("gen-graph", "emit a target graph");
    gen_graph->add_option("family", family)->required();
    gen_graph->add_option("m", m)->required();
    gen_graph->add_option("n", n);
    gen_graph->add_flag("--dot", dot);
    gen_graph->add_flag("--json", as_json);

    auto* gen_pot = app.add_subcommand("gen-pot", "emit a designed pot");
    gen_pot->add_option("family", family)->required();
    gen_pot->add_option("m", m)->required();
    gen_pot->add_option("n", n)->required();
    gen_pot->add_option("--scenario", scenario)->check(CLI::Range(1, 3));
    gen_pot->add_flag("--json", as_json);

    auto* analyze = app.add_subcommand(
        "analyze", "construction matrix, spectrum, minimum usage order");
    analyze->add_option("pot", pot_path)->required();
    analyze->add_option("--cap", cap);
    analyze->add_flag("--json", as_json);

    auto* check = app.add_subcommand("check", "scenario verdict for pot+graph");
    check->add_option("pot", pot_path)->required();
    check->add_option("graph", graph_path)->required();
    check->add_option("--scenario", scenario)->check(CLI::Range(1, 3));
    check->add_option("--budget", budget);
    check->add_flag("--json", as_json);

    auto* bounds = app.add_subcommand("bounds", "closed-form bound lookup");
    bounds->add_option("--family", family)->required();
    bounds->add_option("--kind", kind)->check(CLI::IsMember({"B", "T"}));
    bounds->add_option("--scenario", scenario)->check(CLI::Range(1, 3));
    bounds->add_option("-m,--m", m)->required();
    bounds->add_option("-n,--n", n);

    auto* search = app.add_subcommand("search-min", "brute-force minimum");
    search->add_option("--target", target_spec)->required();
    search->add_option("--scenario", scenario)->check(CLI::Range(1, 3));
    search->add_option("--kind", kind)->check(CLI::IsMember({"bond", "tile"}));
    search->add_option("--max-types", max_types);
    search->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify-table",
                                      "sweep a family against its bounds");
    verify->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"lollipop", "tadpole"}));
    verify->add_option("--scenario", scenario)->check(CLI::Range(1, 3));
    verify->add_option("--max-order", max_order);
    verify->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_graph->parsed()) return cmd_gen_graph(family, m, n, dot);
        if (gen_pot->parsed())
            return cmd_gen_pot(family, scenario, m, n, as_json);
        if (analyze->parsed()) return cmd_analyze(pot_path, cap, as_json);
        if (check->parsed())
            return cmd_check(pot_path, graph_path, scenario, budget, as_json);
        if (bounds->parsed())
            return cmd_bounds(family,
                              kind == "T" ? BoundKind::TileTypes
                                          : BoundKind::BondTypes,
                              scenario, m, n);
        if (search->parsed())
            return cmd_search_min(target_spec, scenario, kind, max_types,
                                  budget);
        if (verify->parsed())
            return cmd_verify_table(family, scenario, max_order, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
