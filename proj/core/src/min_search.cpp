#include "tilepot/min_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>

namespace tilepot {

namespace {

std::string type_symbol(int t) { return "a" + std::to_string(t); }

bool has_loop(const Multigraph& g) {
    for (const auto& [u, v] : g.edges())
        if (u == v) return true;
    return false;
}

// Largest clique and independent set of the subgraph induced by each
// degree class (classes listed in `class_degree`). Used for the
// strictest scenario: adjacent vertices must carry distinct tiles (see
// the rewiring prunes below), so per class the number of distinct
// tiles is at least the clique number and no tile repeats more often
// than the independence number.
struct ClassAdjacencyBounds {
    std::vector<int> clique;
    std::vector<int> indep;
};

ClassAdjacencyBounds class_adjacency_bounds(
    const Multigraph& target, const std::vector<int>& class_degree) {
    ClassAdjacencyBounds out;
    out.clique.assign(class_degree.size(), 1);
    out.indep.assign(class_degree.size(), 1);
    const auto degs = target.degrees();
    for (std::size_t ci = 0; ci < class_degree.size(); ++ci) {
        std::vector<int> members;
        for (int v = 0; v < target.vertex_count(); ++v)
            if (degs[static_cast<std::size_t>(v)] == class_degree[ci])
                members.push_back(v);
        const std::size_t n = members.size();
        std::vector<unsigned long long> adj(n, 0);
        for (const auto& [a, b] : target.edges())
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (members[x] == a && members[y] == b && x != y) {
                        adj[x] |= 1ull << y;
                        adj[y] |= 1ull << x;
                    }
        int best_clique = 1, best_indep = 1;
        for (unsigned long long s = 1; s < (1ull << n); ++s) {
            bool clique = true, indep = true;
            for (std::size_t x = 0; x < n && (clique || indep); ++x) {
                if (!(s >> x & 1)) continue;
                const unsigned long long rest = s & ~(1ull << x);
                if ((adj[x] & rest) != rest) clique = false;
                if (adj[x] & rest) indep = false;
            }
            const int sz = __builtin_popcountll(s);
            if (clique) best_clique = std::max(best_clique, sz);
            if (indep) best_indep = std::max(best_indep, sz);
        }
        out.clique[ci] = best_clique;
        out.indep[ci] = best_indep;
    }
    return out;
}

// Exhaustive DFS over canonical edge-labelings of the target. Canonical
// means: bond types are numbered in first-appearance order along a fixed
// edge ordering, and each type's first non-loop edge carries the fixed
// orientation (un-hatted half at the smaller endpoint). Every labeling
// is enumerated exactly once per equivalence class under type renaming
// and per-type global orientation flips.
class LabelingSearch {
public:
    LabelingSearch(const Multigraph& target, int scenario, bool tile_mode,
                   Budget& budget, std::map<std::string, Verdict>& memo)
        : target_(target),
          scenario_(scenario),
          tile_mode_(tile_mode),
          budget_(budget),
          memo_(memo) {
        const auto& raw = target.edges();
        for (std::size_t i = 0; i < raw.size(); ++i)
            edges_.push_back({raw[i].first, raw[i].second,
                              static_cast<int>(i)});
        // Vertex-major order: all edges at vertex 0 first, then the
        // rest of vertex 1's, and so on. Vertices complete as early as
        // possible, which powers the completed-tile prunes below.
        std::sort(edges_.begin(), edges_.end(),
                  [](const EdgeRef& a, const EdgeRef& b) {
                      if (a.u != b.u) return a.u < b.u;
                      if (a.v != b.v) return a.v < b.v;
                      return a.original < b.original;
                  });
        const int vertex_count = target.vertex_count();
        arms_.resize(vertex_count);
        remaining_.resize(vertex_count, 0);
        vertex_tiles_.resize(vertex_count);
        for (const auto& e : edges_) {
            ++remaining_[e.u];
            if (e.v != e.u) ++remaining_[e.v];
        }
        type_of_.resize(edges_.size(), 0);
        unhatted_of_.resize(edges_.size(), 0);
        prev_pos_.assign(edges_.size(), -1);
        group_start_.assign(edges_.size(), false);
        for (std::size_t e = 0; e < edges_.size(); ++e)
            group_start_[e] = e == 0 || edges_[e].u != edges_[e - 1].u;

        multiplicity_.assign(vertex_count,
                             std::vector<int>(vertex_count, 0));
        for (const auto& e : edges_) {
            ++multiplicity_[e.u][e.v];
            if (e.u != e.v) ++multiplicity_[e.v][e.u];
        }
        // See the prune in try_assign; rewiring an assembly that gives
        // adjacent vertices the same tile yields a loop, which is only
        // conclusive against a loop-free target.
        adjacent_distinct_ = scenario_ >= 3 && !has_loop(target);
    }

    // True when a scenario-passing labeling with exactly `goal` bond
    // types (bond mode) or distinct tiles (tile mode) was found.
    bool run(int goal) {
        goal_ = goal;
        saw_indeterminate_ = false;
        explored_ = 0;
        return dfs(0);
    }

    bool saw_indeterminate() const { return saw_indeterminate_; }
    long long explored() const { return explored_; }
    const Pot& witness_pot() const { return witness_pot_; }
    const LabeledAssembly& witness_assembly() const {
        return witness_assembly_;
    }

private:
    struct EdgeRef {
        int u, v;     // u <= v
        int original; // index into target_.edges()
    };

    bool dfs(std::size_t e) {
        if (budget_.exceeded) return false;
        if (e == edges_.size()) return leaf();
        const int remaining_edges = static_cast<int>(edges_.size() - e);
        if (!tile_mode_ && used_types_ + remaining_edges < goal_)
            return false; // cannot still introduce enough types
        const int type_cap =
            tile_mode_ ? static_cast<int>(edges_.size()) : goal_;
        const EdgeRef& edge = edges_[e];
        if (group_start_[e]) compute_group_constraints(e);
        // Interchangeable-sibling symmetry: labels along a chain of
        // equivalent neighbors must be non-decreasing in (type,
        // orientation) order, so start from the predecessor's label.
        int type_lo = 1, orient_lo = 0;
        if (prev_pos_[e] >= 0) {
            const auto p = static_cast<std::size_t>(prev_pos_[e]);
            type_lo = type_of_[p];
            orient_lo = unhatted_of_[p] == edges_[p].u ? 0 : 1;
        }
        for (int t = type_lo; t <= used_types_; ++t) {
            const bool anchor_here = !anchored_.count(t) && edge.u != edge.v;
            if (!(t == type_lo && orient_lo > 0)) {
                if (try_assign(e, t, edge.u, anchor_here)) return true;
                if (budget_.exceeded) return false;
            }
            if (edge.u != edge.v && anchored_.count(t) && !anchor_here) {
                if (try_assign(e, t, edge.v, false)) return true;
                if (budget_.exceeded) return false;
            }
        }
        if (used_types_ < type_cap) {
            ++used_types_;
            const int t = used_types_;
            const bool anchor = edge.u != edge.v;
            if (try_assign(e, t, edge.u, anchor)) return true;
            --used_types_;
        }
        return false;
    }

    // A transposition of a and b (a != b) maps the edge multiset to
    // itself: identical loop counts and identical multiplicities toward
    // every other vertex.
    bool swap_is_automorphism(int a, int b) const {
        if (multiplicity_[a][a] != multiplicity_[b][b]) return false;
        for (std::size_t x = 0; x < multiplicity_.size(); ++x) {
            if (static_cast<int>(x) == a || static_cast<int>(x) == b)
                continue;
            if (multiplicity_[a][x] != multiplicity_[b][x]) return false;
        }
        return true;
    }

    // (w, type, un-hatted-at-neighbor) triples over the labeled edges
    // incident to v, sorted; positions before `limit` are labeled.
    std::vector<std::tuple<int, int, int>> history(int v,
                                                   std::size_t limit) const {
        std::vector<std::tuple<int, int, int>> h;
        for (std::size_t g = 0; g < limit; ++g)
            if (edges_[g].v == v || edges_[g].u == v)
                h.emplace_back(edges_[g].u == v ? edges_[g].v : edges_[g].u,
                               type_of_[g],
                               unhatted_of_[g] == v ? 0 : 1);
        std::sort(h.begin(), h.end());
        return h;
    }

    void compute_group_constraints(std::size_t start) {
        const int u = edges_[start].u;
        for (std::size_t f = start;
             f < edges_.size() && edges_[f].u == u; ++f) {
            prev_pos_[f] = -1;
            const int v = edges_[f].v;
            for (std::size_t g = f; g-- > start;) {
                const int v2 = edges_[g].v;
                if (v2 == v) {
                    prev_pos_[f] = static_cast<int>(g);
                    break;
                }
                if (v != u && v2 != u && swap_is_automorphism(v2, v) &&
                    history(v2, start) == history(v, start)) {
                    prev_pos_[f] = static_cast<int>(g);
                    break;
                }
            }
        }
    }

    bool try_assign(std::size_t e, int type, int unhatted_vertex,
                    bool anchor) {
        if (!budget_.spend()) return false;
        const EdgeRef& edge = edges_[e];
        const bool loop = edge.u == edge.v;
        type_of_[e] = type;
        unhatted_of_[e] = unhatted_vertex;

        const std::string sym = type_symbol(type);
        if (adjacent_distinct_ && !loop) {
            // A vertex carrying both polarities of one type lets the
            // matching be rewired into a loop at that vertex (same
            // order, so either non-isomorphic or disconnected).
            const int v0 = unhatted_vertex == edge.u ? edge.v : edge.u;
            for (const auto& a : arms_[unhatted_vertex])
                if (a.hatted && a.bond_type == sym) return false;
            for (const auto& a : arms_[v0])
                if (!a.hatted && a.bond_type == sym) return false;
            // Two same-type edges whose partner swap duplicates an
            // existing edge rewire into a complex with a parallel edge.
            for (std::size_t g = 0; g < e; ++g) {
                if (type_of_[g] != type) continue;
                const int x = unhatted_of_[g];
                const int y = x == edges_[g].u ? edges_[g].v : edges_[g].u;
                if (unhatted_vertex != x && v0 != y &&
                    (multiplicity_[unhatted_vertex][y] > 0 ||
                     multiplicity_[x][v0] > 0))
                    return false;
            }
        }
        if (anchor) anchored_.insert(type);
        std::vector<int> touched; // endpoints, once each
        if (loop) {
            // A loop contributes both halves to its single vertex.
            arms_[edge.u].push_back({sym, false});
            arms_[edge.u].push_back({sym, true});
            touched = {edge.u};
        } else {
            arms_[edge.u].push_back({sym, edge.u != unhatted_vertex});
            arms_[edge.v].push_back({sym, edge.v != unhatted_vertex});
            touched = {edge.u, edge.v};
        }

        bool prune = false;
        bool completed_new_tile = false;
        for (int w : touched) {
            if (--remaining_[w] == 0) {
                Tile tile(arms_[w]);
                vertex_tiles_[w] = tile;
                if (++tile_counts_[tile] == 1) {
                    completed_new_tile = true;
                    if (tile_mode_ &&
                        static_cast<int>(tile_counts_.size()) > goal_)
                        prune = true;
                }
                // Adjacent vertices sharing a tile let the matching be
                // rewired into a same-order complex with a loop (or a
                // disconnection), so no pot passing the strictest
                // scenario admits such an assembly, and no candidate
                // pot is ever lost by skipping the labeling.
                if (!prune && adjacent_distinct_) {
                    for (std::size_t x = 0; x < vertex_tiles_.size();
                         ++x)
                        if (static_cast<int>(x) != w &&
                            multiplicity_[w][x] > 0 &&
                            vertex_tiles_[x] &&
                            *vertex_tiles_[x] == tile) {
                            prune = true;
                            break;
                        }
                }
            }
        }
        // Any sub-pot of completed tiles that already realizes a complex
        // the scenario forbids (smaller order; for scenario 3 also equal
        // order but non-isomorphic) dooms every extension: the finished
        // pot keeps those tiles, so it realizes the same complex.
        if (!prune && completed_new_tile && scenario_ >= 2 &&
            completed_subpot_is_dead())
            prune = true;
        // With the distinct-tile budget spent, every vertex still being
        // labeled must end up equal to one of the completed tiles, so
        // its partial arms must fit inside one of matching degree.
        if (!prune && tile_mode_ &&
            static_cast<int>(tile_counts_.size()) == goal_) {
            for (int w : touched)
                if (remaining_[w] > 0 && !partial_fits_completed(w)) {
                    prune = true;
                    break;
                }
        }
        const bool found = !prune && dfs(e + 1);

        for (int w : touched) {
            if (remaining_[w] == 0) {
                auto it = tile_counts_.find(*vertex_tiles_[w]);
                if (--it->second == 0) tile_counts_.erase(it);
                vertex_tiles_[w].reset();
            }
            ++remaining_[w];
        }
        if (loop) {
            arms_[edge.u].pop_back();
            arms_[edge.u].pop_back();
        } else {
            arms_[edge.u].pop_back();
            arms_[edge.v].pop_back();
        }
        if (anchor) anchored_.erase(type);
        return found;
    }

    bool partial_fits_completed(int w) const {
        const int degree = target_.degree(w);
        std::map<HalfEdgeLabel, int> partial;
        for (const auto& label : arms_[w]) ++partial[label];
        for (const auto& [tile, count] : tile_counts_) {
            if (tile.degree() != degree) continue;
            bool fits = true;
            for (const auto& [label, need] : partial)
                if (tile.count(label) < need) {
                    fits = false;
                    break;
                }
            if (fits) return true;
        }
        return false;
    }

    bool completed_subpot_is_dead() {
        std::vector<Tile> tiles;
        for (const auto& [tile, count] : tile_counts_) tiles.push_back(tile);
        Pot subpot(tiles);
        const std::string key = format_pot(subpot);
        auto it = subpot_memo_.find(key);
        if (it != subpot_memo_.end()) return it->second;
        bool dead =
            min_usage_order(subpot, target_.vertex_count() - 1).has_value();
        if (!dead && scenario_ >= 3) {
            // Capped probe: sub-pots with few distinct tiles can have
            // enormous matching spaces, so give up quickly; a missed
            // prune only costs time, never correctness.
            Budget probe(20'000);
            enumerate_complexes_at_order(
                subpot, target_.vertex_count(), &probe,
                [&](long long, const CatalogEntry& entry) {
                    if (is_isomorphic(entry.graph, target_)) return true;
                    dead = true;
                    return false;
                });
            budget_.spend(probe.used);
        }
        subpot_memo_.emplace(key, dead);
        return dead;
    }

    bool leaf() {
        if (!tile_mode_ && used_types_ != goal_) return false;
        if (tile_mode_ &&
            static_cast<int>(tile_counts_.size()) != goal_)
            return false;
        ++explored_;

        std::vector<Tile> tiles;
        for (const auto& [tile, count] : tile_counts_) tiles.push_back(tile);
        Pot pot(tiles);

        LabeledAssembly assembly;
        assembly.graph = target_;
        assembly.vertex_tiles.resize(target_.vertex_count());
        for (int v = 0; v < target_.vertex_count(); ++v) {
            const Tile& tile = *vertex_tiles_[v];
            assembly.vertex_tiles[v] = static_cast<int>(
                std::lower_bound(tiles.begin(), tiles.end(), tile) -
                tiles.begin());
        }
        assembly.edge_labels.resize(edges_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e)
            assembly.edge_labels[edges_[e].original] = {
                type_symbol(type_of_[e]), unhatted_of_[e]};

        const std::string key = format_pot(pot);
        auto it = memo_.find(key);
        Verdict verdict;
        if (it != memo_.end()) {
            verdict = it->second;
        } else {
            verdict = check_scenario_with_witness(pot, target_, scenario_,
                                                  ScenarioCaps{}, budget_)
                          .verdict;
            if (!budget_.exceeded) memo_.emplace(key, verdict);
        }
        if (verdict == Verdict::indeterminate) {
            saw_indeterminate_ = true;
            return false;
        }
        if (verdict == Verdict::fail) return false;
        witness_pot_ = pot;
        witness_assembly_ = std::move(assembly);
        return true;
    }

    const Multigraph& target_;
    int scenario_;
    bool tile_mode_;
    Budget& budget_;
    std::map<std::string, Verdict>& memo_;

    std::vector<EdgeRef> edges_;
    std::vector<std::vector<HalfEdgeLabel>> arms_;
    std::vector<int> remaining_;
    std::vector<std::optional<Tile>> vertex_tiles_;
    std::map<Tile, int> tile_counts_;
    std::vector<int> type_of_;
    std::vector<int> unhatted_of_;
    std::set<int> anchored_; // types whose orientation is pinned
    std::map<std::string, bool> subpot_memo_;
    std::vector<int> prev_pos_;       // sibling-chain predecessor or -1
    std::vector<bool> group_start_;   // first edge of its vertex group
    std::vector<std::vector<int>> multiplicity_;
    int used_types_ = 0;
    int goal_ = 0;
    bool adjacent_distinct_ = false;
    bool saw_indeterminate_ = false;
    long long explored_ = 0;

    Pot witness_pot_;
    LabeledAssembly witness_assembly_;
};

// Tile-count search: enumerates candidate pots directly instead of edge
// labelings. A pot attaining the minimum has every tile used in some
// assembly of the target (unused tiles can be dropped without changing
// any verdict), so a degree class of c vertices is served by k distinct
// degree-d tiles (1 <= k <= c), each used between 1 and c - k + 1
// times. Pots are enumerated canonically: tile slots in
// degree-descending order, same-degree tiles strictly increasing, bond
// types numbered by first appearance with the first occurrence
// un-hatted. Net-arm counts are pruned with interval arithmetic over
// the admissible usage range of each tile.
class TilePotSearch {
public:
    TilePotSearch(const Multigraph& target, int scenario, Budget& budget,
                  std::map<std::string, Verdict>& memo)
        : target_(target), scenario_(scenario), budget_(budget),
          memo_(memo) {
        std::map<int, long long, std::greater<int>> classes;
        for (int d : target.degrees()) ++classes[d];
        for (const auto& [degree, size] : classes) {
            class_degree_.push_back(degree);
            class_size_.push_back(size);
        }
        // See class_adjacency_bounds: in the strictest scenario,
        // per-class distinct tiles are bounded below by the clique
        // number and per-tile usage above by the independence number.
        no_mixed_polarity_ = scenario_ >= 3 && !has_loop(target);
        if (no_mixed_polarity_) {
            auto bounds = class_adjacency_bounds(target, class_degree_);
            class_clique_ = std::move(bounds.clique);
            class_indep_ = std::move(bounds.indep);
        } else {
            class_clique_.assign(class_degree_.size(), 1);
            class_indep_.assign(class_degree_.size(),
                                target.vertex_count());
        }
    }

    bool run(int goal) {
        goal_ = goal;
        saw_indeterminate_ = false;
        explored_ = 0;
        alloc_.assign(class_degree_.size(), 0);
        bool found = choose_allocation(0, goal);
        if (std::getenv("TILEPOT_DEBUG"))
            std::cerr << "[tile goal " << goal << "] explored=" << explored_
                      << " probes=" << dbg_probes_ << "/" << dbg_probe_spent_
                      << " realizes=" << dbg_realizes_ << "/"
                      << dbg_realize_spent_ << " scenarios=" << dbg_scenarios_
                      << "/" << dbg_scenario_spent_
                      << " total=" << budget_.used << "\n";
        return found;
    }

    bool saw_indeterminate() const { return saw_indeterminate_; }
    long long explored() const { return explored_; }
    const Pot& witness_pot() const { return witness_pot_; }
    const LabeledAssembly& witness_assembly() const {
        return witness_assembly_;
    }

private:
    struct Slot {
        int degree = 0;
        long long usage_max = 1; // each tile is used 1..usage_max times
        std::size_t cls = 0;
    };

    bool choose_allocation(std::size_t ci, int left) {
        if (ci == class_degree_.size()) {
            if (left != 0) return false;
            return start_tiles();
        }
        const auto classes_after =
            static_cast<int>(class_degree_.size() - ci - 1);
        const int hi = static_cast<int>(
            std::min<long long>(class_size_[ci], left - classes_after));
        for (int k = class_clique_[ci]; k <= hi; ++k) {
            // k tiles with per-tile usage cap must still cover the class.
            if (static_cast<long long>(k) * usage_cap(ci, k) <
                class_size_[ci])
                continue;
            alloc_[ci] = k;
            if (choose_allocation(ci + 1, left - k)) return true;
            if (budget_.exceeded) return false;
        }
        return false;
    }

    long long usage_cap(std::size_t ci, int k) const {
        return std::min<long long>(class_size_[ci] - k + 1,
                                   class_indep_[ci]);
    }

    bool start_tiles() {
        slots_.clear();
        for (std::size_t ci = 0; ci < class_degree_.size(); ++ci)
            for (int k = 0; k < alloc_[ci]; ++k)
                slots_.push_back({class_degree_[ci],
                                  usage_cap(ci, alloc_[ci]), ci});
        suffix_weight_.assign(slots_.size() + 1, 0);
        long long total_arms = 0;
        for (std::size_t i = slots_.size(); i-- > 0;) {
            suffix_weight_[i] = suffix_weight_[i + 1] +
                                slots_[i].usage_max * slots_[i].degree;
            total_arms += slots_[i].degree;
        }
        // Every bond type needs an un-hatted and a hatted arm somewhere
        // in the pot, or no usage vector exists.
        type_cap_ = static_cast<int>(std::min<long long>(64, total_arms / 2));
        arms_.assign(slots_.size(), {});
        tile_cnt_.assign(slots_.size(), {});
        cnt_.clear();
        lo_.clear();
        hi_.clear();
        clo_.clear();
        chi_.clear();
        used_types_ = 0;
        return next_tile(0);
    }

    bool next_tile(std::size_t i) {
        if (budget_.exceeded) return false;
        if (i == slots_.size()) return test_pot();
        return extend_tile(i, slots_[i].degree, HalfEdgeLabel{"", false});
    }

    // Every net count must reach zero in some usage vector, and each
    // future arm-usage unit corrects the imbalance of exactly one bond
    // type, so the per-type corrections needed must fit the remaining
    // arm mass in aggregate. lo_/hi_ hold exact intervals of completed
    // classes, clo_/chi_ loose per-tile intervals of the current
    // class's completed tiles, cnt_ the current tile's partial counts.
    bool aggregate_feasible(std::size_t i, int arms_left) const {
        const long long ub = slots_[i].usage_max;
        const long long future =
            arms_left * ub + suffix_weight_[i + 1];
        long long need = 0;
        std::set<int> live;
        for (const auto& [t, v] : lo_) live.insert(t);
        for (const auto& [t, v] : clo_) live.insert(t);
        for (const auto& [t, v] : cnt_) live.insert(t);
        for (int t : live) {
            const long long c = cnt(t);
            const long long lo =
                at(lo_, t) + at(clo_, t) + std::min(c, c * ub);
            const long long hi =
                at(hi_, t) + at(chi_, t) + std::max(c, c * ub);
            need += std::max<long long>(0, lo) +
                    std::max<long long>(0, -hi);
            if (need > future) return false;
        }
        return true;
    }

    // Interval of the final pot-wide net count of type t given the
    // current tile's partial count and the open arm/tile budget.
    // lo_/hi_ hold exact intervals of completed classes, clo_/chi_
    // loose per-tile intervals of the current class's completed tiles.
    bool type_feasible(std::size_t i, int t, int arms_left) const {
        const long long ub = slots_[i].usage_max;
        const long long nmin = cnt(t) - arms_left;
        const long long nmax = cnt(t) + arms_left;
        const long long contrib_lo = std::min(nmin, nmin * ub);
        const long long contrib_hi = std::max(nmax, nmax * ub);
        const long long future = suffix_weight_[i + 1];
        const long long lo = at(lo_, t) + at(clo_, t) + contrib_lo - future;
        const long long hi = at(hi_, t) + at(chi_, t) + contrib_hi + future;
        return lo <= 0 && hi >= 0;
    }

    bool extend_tile(std::size_t i, int left, HalfEdgeLabel min_arm) {
        if (budget_.exceeded) return false;
        if (left == 0) return complete_tile(i);
        const int from = std::max(1, arm_type(min_arm));
        for (int t = from; t <= used_types_; ++t)
            for (bool hat : {false, true}) {
                HalfEdgeLabel arm{type_symbol(t), hat};
                if (arm < min_arm) continue;
                // A tile holding both polarities of one type puts them
                // on one vertex of the target (every tile is used), and
                // that matching rewires into a same-order complex with
                // a loop, so the strictest scenario excludes it.
                if (no_mixed_polarity_ &&
                    std::find(arms_[i].begin(), arms_[i].end(),
                              arm.complement()) != arms_[i].end())
                    continue;
                if (!budget_.spend()) return false;
                cnt_[t] += hat ? -1 : 1;
                arms_[i].push_back(arm);
                const bool ok = aggregate_feasible(i, left - 1) &&
                                extend_tile(i, left - 1, arm);
                arms_[i].pop_back();
                cnt_[t] -= hat ? -1 : 1;
                if (ok) return true;
                if (budget_.exceeded) return false;
            }
        // A fresh type; canonically its first occurrence is un-hatted.
        if (used_types_ < type_cap_) {
            ++used_types_;
            const int t = used_types_;
            if (!budget_.spend()) return false;
            cnt_[t] += 1;
            arms_[i].push_back({type_symbol(t), false});
            const bool ok = aggregate_feasible(i, left - 1) &&
                            extend_tile(i, left - 1,
                                        {type_symbol(t), false});
            arms_[i].pop_back();
            cnt_[t] -= 1;
            --used_types_;
            if (ok) return true;
        }
        return false;
    }

    bool complete_tile(std::size_t i) {
        // Same-degree tiles ascend strictly (they must be distinct, and
        // one order per set suffices).
        if (i > 0 && slots_[i].cls == slots_[i - 1].cls &&
            !(arms_[i - 1] < arms_[i]))
            return false;

        tile_cnt_[i] = cnt_;
        cnt_.clear();
        const bool class_done = i + 1 == slots_.size() ||
                                slots_[i + 1].cls != slots_[i].cls;

        std::map<int, long long> saved_clo, saved_chi;
        std::map<int, long long> exact_lo, exact_hi;
        if (!class_done) {
            // Loose per-tile fold until the class is complete.
            const long long ub = slots_[i].usage_max;
            for (const auto& [t, n] : tile_cnt_[i]) {
                clo_[t] += std::min(n, n * ub);
                chi_[t] += std::max(n, n * ub);
            }
        } else {
            // The class's tile usages are 1 each plus c - k freely
            // distributed extras, so the exact net range of type t is
            // sum + extra * [min over tiles, max over tiles].
            std::size_t first = i;
            while (first > 0 && slots_[first - 1].cls == slots_[i].cls)
                --first;
            const long long extra =
                class_size_[slots_[i].cls] -
                static_cast<long long>(i - first + 1);
            std::set<int> types;
            for (std::size_t j = first; j <= i; ++j)
                for (const auto& [t, n] : tile_cnt_[j]) types.insert(t);
            for (int t : types) {
                long long base = 0;
                long long mn = at(tile_cnt_[first], t);
                long long mx = mn;
                for (std::size_t j = first; j <= i; ++j) {
                    const long long n = at(tile_cnt_[j], t);
                    base += n;
                    mn = std::min(mn, n);
                    mx = std::max(mx, n);
                }
                exact_lo[t] = base + extra * mn;
                exact_hi[t] = base + extra * mx;
            }
            saved_clo = std::move(clo_);
            saved_chi = std::move(chi_);
            clo_.clear();
            chi_.clear();
            for (const auto& [t, v] : exact_lo) lo_[t] += v;
            for (const auto& [t, v] : exact_hi) hi_[t] += v;
        }

        bool ok = aggregate_feasible(i, 0);
        if (ok && scenario_ >= 2) ok = !partial_pot_is_dead(i);
        if (ok) ok = next_tile(i + 1);

        if (!class_done) {
            const long long ub = slots_[i].usage_max;
            for (const auto& [t, n] : tile_cnt_[i]) {
                clo_[t] -= std::min(n, n * ub);
                chi_[t] -= std::max(n, n * ub);
            }
        } else {
            for (const auto& [t, v] : exact_lo) lo_[t] -= v;
            for (const auto& [t, v] : exact_hi) hi_[t] -= v;
            clo_ = std::move(saved_clo);
            chi_ = std::move(saved_chi);
        }
        cnt_ = std::move(tile_cnt_[i]);
        return ok;
    }

    // The tiles built so far all belong to the final pot, so if they
    // already realize a forbidden complex every completion fails the
    // scenario.
    bool partial_pot_is_dead(std::size_t i) {
        std::vector<Tile> tiles;
        for (std::size_t j = 0; j <= i; ++j) tiles.push_back(Tile(arms_[j]));
        Pot subpot(tiles);
        const std::string key = format_pot(subpot);
        auto it = subpot_memo_.find(key);
        if (it != subpot_memo_.end()) return it->second;
        bool dead =
            min_usage_order(subpot, target_.vertex_count() - 1).has_value();
        if (!dead && scenario_ >= 3) {
            Budget probe(20'000);
            enumerate_complexes_at_order(
                subpot, target_.vertex_count(), &probe,
                [&](long long, const CatalogEntry& entry) {
                    if (is_isomorphic(entry.graph, target_)) return true;
                    dead = true;
                    return false;
                });
            budget_.spend(probe.used);
            dbg_probe_spent_ += probe.used;
            ++dbg_probes_;
        }
        subpot_memo_.emplace(key, dead);
        return dead;
    }

    long long cnt(int t) const { return at(cnt_, t); }

    static long long at(const std::map<int, long long>& m, int t) {
        auto it = m.find(t);
        return it == m.end() ? 0 : it->second;
    }

    static int arm_type(const HalfEdgeLabel& arm) {
        return arm.bond_type.empty()
                   ? 0
                   : std::stoi(arm.bond_type.substr(1));
    }

    bool test_pot() {
        ++explored_;
        std::vector<Tile> tiles;
        for (const auto& arms : arms_) tiles.push_back(Tile(arms));
        Pot pot(tiles);
        const std::string key = format_pot(pot);
        auto it = memo_.find(key);
        if (it != memo_.end() && it->second != Verdict::pass)
            return false;
        long long before = budget_.used;
        auto assembly = realizes(pot, target_, &budget_);
        dbg_realize_spent_ += budget_.used - before;
        ++dbg_realizes_;
        if (budget_.exceeded) {
            saw_indeterminate_ = true;
            return false;
        }
        if (!assembly) {
            memo_.emplace(key, Verdict::fail);
            return false;
        }
        Verdict verdict;
        if (it != memo_.end()) {
            verdict = it->second;
        } else {
            before = budget_.used;
            verdict = check_scenario_with_witness(pot, target_, scenario_,
                                                  ScenarioCaps{}, budget_)
                          .verdict;
            dbg_scenario_spent_ += budget_.used - before;
            ++dbg_scenarios_;
            if (!budget_.exceeded) memo_.emplace(key, verdict);
        }
        if (verdict == Verdict::indeterminate) {
            saw_indeterminate_ = true;
            return false;
        }
        if (verdict == Verdict::fail) return false;
        witness_pot_ = pot;
        witness_assembly_ = std::move(*assembly);
        return true;
    }

    const Multigraph& target_;
    int scenario_;
    Budget& budget_;
    std::map<std::string, Verdict>& memo_;

    std::vector<int> class_degree_;    // distinct degrees, descending
    std::vector<long long> class_size_;
    std::vector<int> class_clique_;    // min distinct tiles per class
    std::vector<int> class_indep_;     // max usage of any one tile
    std::vector<int> alloc_;           // tiles allotted per class
    std::vector<Slot> slots_;
    std::vector<long long> suffix_weight_;
    std::vector<std::vector<HalfEdgeLabel>> arms_;
    std::map<int, long long> cnt_;     // current tile's net per type
    std::vector<std::map<int, long long>> tile_cnt_; // per completed slot
    std::map<int, long long> lo_, hi_; // completed classes, exact
    std::map<int, long long> clo_, chi_; // current class, loose
    std::map<std::string, bool> subpot_memo_;
    int used_types_ = 0;
    int type_cap_ = 64;
    int goal_ = 0;
    bool no_mixed_polarity_ = false;
    bool saw_indeterminate_ = false;
    long long explored_ = 0;
    long long dbg_probes_ = 0, dbg_probe_spent_ = 0;
    long long dbg_realizes_ = 0, dbg_realize_spent_ = 0;
    long long dbg_scenarios_ = 0, dbg_scenario_spent_ = 0;

    Pot witness_pot_;
    LabeledAssembly witness_assembly_;
};

SearchResult run_search(const Multigraph& target, int scenario,
                        int max_types, long long budget_limit,
                        bool tile_mode) {
    if (scenario < 1 || scenario > 3)
        throw std::invalid_argument("scenario must be 1, 2, or 3");
    if (max_types < 1)
        throw std::invalid_argument("max_types must be >= 1");

    SearchResult result;
    if (target.edges().empty()) {
        // An edgeless vertex would need an armless tile, which no pot
        // contains.
        result.status = SearchStatus::exhausted;
        result.lower_bound = max_types + 1;
        return result;
    }

    int start = 1;
    if (tile_mode) {
        // Tiles determine vertex degree, so distinct degrees give a
        // floor on the tile count. In the strictest scenario adjacent
        // vertices need distinct tiles (see the rewiring prunes), so
        // each degree class needs at least its clique number of tiles.
        std::vector<int> class_degree;
        for (int d : std::set<int>(target.degrees().begin(),
                                   target.degrees().end()))
            class_degree.push_back(d);
        start = static_cast<int>(class_degree.size());
        if (scenario >= 3 && !has_loop(target)) {
            const auto bounds =
                class_adjacency_bounds(target, class_degree);
            int floor = 0;
            for (int c : bounds.clique) floor += c;
            start = std::max(start, floor);
        }
    }

    result.lower_bound = start;
    Budget budget(budget_limit);
    std::map<std::string, Verdict> memo;
    // The searches (and their internal sub-pot memos) persist across
    // goals: prefix pots recur from one goal to the next.
    TilePotSearch tile_search(target, scenario, budget, memo);
    LabelingSearch labeling_search(target, scenario, tile_mode, budget,
                                   memo);
    for (int goal = start; goal <= max_types; ++goal) {
        bool found = false, indeterminate = false;
        std::optional<Pot> pot;
        std::optional<LabeledAssembly> assembly;
        // Tile-count goals are searched over candidate pots directly,
        // except in the strictest scenario, where the rewiring rules
        // prune edge labelings so hard that enumerating labelings wins.
        bool use_labeling = !tile_mode || scenario >= 3;
        if (const char* force = std::getenv("TILEPOT_TILE_SEARCH"))
            use_labeling = std::string(force) == "labeling" || !tile_mode;
        if (tile_mode && !use_labeling) {
            found = tile_search.run(goal);
            result.explored += tile_search.explored();
            indeterminate = tile_search.saw_indeterminate();
            if (found) {
                pot = tile_search.witness_pot();
                assembly = tile_search.witness_assembly();
            }
        } else {
            found = labeling_search.run(goal);
            result.explored += labeling_search.explored();
            indeterminate = labeling_search.saw_indeterminate();
            if (found) {
                pot = labeling_search.witness_pot();
                assembly = labeling_search.witness_assembly();
            }
        }
        result.nodes_used = budget.used;
        result.budget_exceeded = budget.exceeded;
        if (found) {
            result.status = SearchStatus::found;
            result.minimum = goal;
            result.lower_bound = goal;
            result.witness_pot = std::move(pot);
            result.witness_assembly = std::move(assembly);
            return result;
        }
        result.lower_bound = goal; // no solution below `goal` verified
        if (budget.exceeded || indeterminate) {
            result.status = SearchStatus::indeterminate;
            return result;
        }
        result.lower_bound = goal + 1;
    }
    result.status = SearchStatus::exhausted;
    return result;
}

} // namespace

SearchResult min_bond_types(const Multigraph& target, int scenario,
                            int max_types, long long budget) {
    return run_search(target, scenario, max_types, budget, false);
}

SearchResult min_tile_types(const Multigraph& target, int scenario,
                            int max_types, long long budget) {
    return run_search(target, scenario, max_types, budget, true);
}

} // namespace tilepot
