#include "tilepot/assembly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tilepot {

namespace {

// ---------------------------------------------------------------------
// realizes(): assign tiles to vertices (degree-filtered, with net-count
// pruning), then labels+orientations to edges (most-constrained first).
// ---------------------------------------------------------------------

struct RealizeSearch {
    const Pot& pot;
    const Multigraph& target;
    Budget& budget;

    std::vector<int> vertex_order;          // degree-descending
    std::vector<std::vector<int>> cands;    // per ordered position: tile idxs
    std::vector<std::vector<long long>> z;  // bond x tile net counts
    // Suffix bounds for net-count pruning over ordered positions.
    std::vector<std::vector<long long>> suffix_max, suffix_min;

    std::vector<int> chosen;                // per ordered position
    std::vector<long long> partial;         // per bond type
    // Per-tile ceilings from the usage vectors of order |V|: a complete
    // complex on |V| tiles must use tile j between 0 and usage_ub[j]
    // times, so assignments exceeding the ceiling are dead.
    std::vector<long long> usage_ub;
    std::vector<long long> used_count;

    // Edge labeling state.
    std::vector<std::map<HalfEdgeLabel, int>> remaining; // per vertex
    std::vector<EdgeLabel> labels;
    std::vector<char> edge_done;

    std::optional<LabeledAssembly> result;

    RealizeSearch(const Pot& p, const Multigraph& t, Budget& b)
        : pot(p), target(t), budget(b) {}

    bool prepare() {
        const int n = target.vertex_count();
        auto usages = usage_vectors_of_order(pot, n);
        if (usages.empty()) return false;
        usage_ub.assign(pot.tile_count(), 0);
        for (const auto& usage : usages)
            for (std::size_t j = 0; j < usage.counts.size(); ++j)
                usage_ub[j] = std::max(usage_ub[j], usage.counts[j]);
        used_count.assign(pot.tile_count(), 0);

        auto deg = target.degrees();
        vertex_order.resize(static_cast<std::size_t>(n));
        std::iota(vertex_order.begin(), vertex_order.end(), 0);
        std::sort(vertex_order.begin(), vertex_order.end(), [&](int a, int b) {
            auto da = deg[static_cast<std::size_t>(a)];
            auto db = deg[static_cast<std::size_t>(b)];
            return da != db ? da > db : a < b;
        });

        const auto& types = pot.bond_types();
        z.assign(types.size(), std::vector<long long>(pot.tile_count(), 0));
        for (std::size_t j = 0; j < pot.tile_count(); ++j)
            for (const auto& [label, count] : pot.tiles()[j].arms()) {
                auto row = static_cast<std::size_t>(
                    std::find(types.begin(), types.end(), label.bond_type) -
                    types.begin());
                z[row][j] += label.hatted ? -count : count;
            }

        cands.resize(static_cast<std::size_t>(n));
        for (int pos = 0; pos < n; ++pos) {
            int v = vertex_order[static_cast<std::size_t>(pos)];
            for (std::size_t j = 0; j < pot.tile_count(); ++j)
                if (pot.tiles()[j].degree() == deg[static_cast<std::size_t>(v)])
                    cands[static_cast<std::size_t>(pos)].push_back(
                        static_cast<int>(j));
            if (cands[static_cast<std::size_t>(pos)].empty()) return false;
        }

        const std::size_t rows = types.size();
        suffix_max.assign(rows, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
        suffix_min.assign(rows, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
        for (std::size_t i = 0; i < rows; ++i) {
            for (int pos = n; pos-- > 0;) {
                long long hi = z[i][static_cast<std::size_t>(cands[static_cast<std::size_t>(pos)][0])];
                long long lo = hi;
                for (int j : cands[static_cast<std::size_t>(pos)]) {
                    hi = std::max(hi, z[i][static_cast<std::size_t>(j)]);
                    lo = std::min(lo, z[i][static_cast<std::size_t>(j)]);
                }
                suffix_max[i][static_cast<std::size_t>(pos)] =
                    suffix_max[i][static_cast<std::size_t>(pos) + 1] + hi;
                suffix_min[i][static_cast<std::size_t>(pos)] =
                    suffix_min[i][static_cast<std::size_t>(pos) + 1] + lo;
            }
        }

        chosen.assign(static_cast<std::size_t>(n), -1);
        partial.assign(rows, 0);
        return true;
    }

    void assign_tiles(std::size_t pos) {
        if (result || budget.exceeded) return;
        const std::size_t n = chosen.size();
        if (pos == n) {
            label_edges();
            return;
        }
        for (int j : cands[pos]) {
            if (used_count[static_cast<std::size_t>(j)] >=
                usage_ub[static_cast<std::size_t>(j)])
                continue;
            if (!budget.spend()) return;
            bool ok = true;
            for (std::size_t i = 0; i < partial.size(); ++i) {
                long long next = partial[i] + z[i][static_cast<std::size_t>(j)];
                if (next + suffix_min[i][pos + 1] > 0 ||
                    next + suffix_max[i][pos + 1] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[pos] = j;
            ++used_count[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < partial.size(); ++i)
                partial[i] += z[i][static_cast<std::size_t>(j)];
            assign_tiles(pos + 1);
            for (std::size_t i = 0; i < partial.size(); ++i)
                partial[i] -= z[i][static_cast<std::size_t>(j)];
            --used_count[static_cast<std::size_t>(j)];
            chosen[pos] = -1;
            if (result || budget.exceeded) return;
        }
    }

    struct Option {
        std::string bond_type;
        int unhatted_end;
    };

    std::vector<Option> edge_options(std::size_t e) const {
        const auto& [u, v] = target.edges()[e];
        std::vector<Option> opts;
        const auto& ru = remaining[static_cast<std::size_t>(u)];
        const auto& rv = remaining[static_cast<std::size_t>(v)];
        if (u == v) {
            for (const auto& [label, count] : ru) {
                if (label.hatted) continue;
                auto it = ru.find(label.complement());
                if (count > 0 && it != ru.end() && it->second > 0)
                    opts.push_back({label.bond_type, u});
            }
            return opts;
        }
        for (const auto& [label, count] : ru) {
            if (label.hatted || count <= 0) continue;
            auto it = rv.find(label.complement());
            if (it != rv.end() && it->second > 0)
                opts.push_back({label.bond_type, u});
        }
        for (const auto& [label, count] : rv) {
            if (label.hatted || count <= 0) continue;
            auto it = ru.find(label.complement());
            if (it != ru.end() && it->second > 0)
                opts.push_back({label.bond_type, v});
        }
        return opts;
    }

    void label_edges() {
        const std::size_t n = chosen.size();
        remaining.assign(n, {});
        for (std::size_t pos = 0; pos < n; ++pos) {
            auto v = static_cast<std::size_t>(vertex_order[pos]);
            for (const auto& [label, count] :
                 pot.tiles()[static_cast<std::size_t>(chosen[pos])].arms())
                remaining[v][label] = count;
        }
        labels.assign(target.edge_count(), {});
        edge_done.assign(target.edge_count(), 0);
        label_step(target.edge_count());
    }

    void apply(std::size_t e, const Option& o, int delta) {
        const auto& [u, v] = target.edges()[e];
        HalfEdgeLabel plain{o.bond_type, false}, hat{o.bond_type, true};
        if (u == v) {
            remaining[static_cast<std::size_t>(u)][plain] -= delta;
            remaining[static_cast<std::size_t>(u)][hat] -= delta;
        } else {
            int other = o.unhatted_end == u ? v : u;
            remaining[static_cast<std::size_t>(o.unhatted_end)][plain] -= delta;
            remaining[static_cast<std::size_t>(other)][hat] -= delta;
        }
    }

    void label_step(std::size_t todo) {
        if (result || budget.exceeded) return;
        if (todo == 0) {
            LabeledAssembly a;
            a.graph = target;
            a.vertex_tiles.assign(chosen.size(), -1);
            for (std::size_t pos = 0; pos < chosen.size(); ++pos)
                a.vertex_tiles[static_cast<std::size_t>(vertex_order[pos])] =
                    chosen[pos];
            a.edge_labels = labels;
            result = std::move(a);
            return;
        }
        // Most-constrained unassigned edge.
        std::size_t best = target.edge_count();
        std::vector<Option> best_opts;
        for (std::size_t e = 0; e < target.edge_count(); ++e) {
            if (edge_done[e]) continue;
            auto opts = edge_options(e);
            if (opts.empty()) return; // dead end
            if (best == target.edge_count() || opts.size() < best_opts.size()) {
                best = e;
                best_opts = std::move(opts);
                if (best_opts.size() == 1) break;
            }
        }
        edge_done[best] = 1;
        for (const auto& o : best_opts) {
            if (!budget.spend()) break;
            apply(best, o, 1);
            labels[best] = EdgeLabel{o.bond_type, o.unhatted_end};
            label_step(todo - 1);
            apply(best, o, -1);
            if (result || budget.exceeded) break;
        }
        edge_done[best] = 0;
    }
};

// ---------------------------------------------------------------------
// Matching enumeration: all ways to pair complementary half-edge pools
// of a fixed usage vector, with symmetry pruning, yielding connected
// complete complexes.
// ---------------------------------------------------------------------

struct Bond {
    int unhatted; // instance holding the un-hatted half
    int hatted;   // instance holding the hatted half (== unhatted: loop)
    int type;     // index into pot.bond_types()
};

struct MatchSearch {
    const Pot& pot;
    Budget& budget;

    std::vector<int> inst_tile;                 // instance -> tile type
    std::vector<std::vector<int>> unhat, hat;   // [type][instance] counts
    std::vector<char> touched;
    std::vector<int> free_arms;                 // unmatched arms per instance
    std::vector<Bond> bonds;

    // Flattened work list: (type, instance) groups with un-hatted arms.
    struct Group {
        int type;
        int instance;
        int arms;
    };
    std::vector<Group> groups;

    // Returns false to abort the remaining enumeration.
    std::function<bool(const std::vector<Bond>&)> emit;
    bool aborted = false;

    MatchSearch(const Pot& p, Budget& b) : pot(p), budget(b) {}

    void run(const UsageVector& usage,
             const std::function<bool(const std::vector<Bond>&)>& on_complete) {
        emit = on_complete;
        aborted = false;
        inst_tile.clear();
        for (std::size_t j = 0; j < usage.counts.size(); ++j)
            for (long long c = 0; c < usage.counts[j]; ++c)
                inst_tile.push_back(static_cast<int>(j));
        const auto ninst = inst_tile.size();
        const auto& types = pot.bond_types();
        unhat.assign(types.size(), std::vector<int>(ninst, 0));
        hat.assign(types.size(), std::vector<int>(ninst, 0));
        for (std::size_t i = 0; i < ninst; ++i) {
            const Tile& tile = pot.tiles()[static_cast<std::size_t>(inst_tile[i])];
            for (const auto& [label, count] : tile.arms()) {
                auto t = static_cast<std::size_t>(
                    std::find(types.begin(), types.end(), label.bond_type) -
                    types.begin());
                (label.hatted ? hat : unhat)[t][i] += count;
            }
        }
        groups.clear();
        for (std::size_t t = 0; t < types.size(); ++t)
            for (std::size_t i = 0; i < ninst; ++i)
                if (unhat[t][i] > 0)
                    groups.push_back({static_cast<int>(t),
                                      static_cast<int>(i),
                                      unhat[t][i]});
        touched.assign(ninst, 0);
        free_arms.assign(ninst, 0);
        for (std::size_t i = 0; i < ninst; ++i)
            free_arms[i] = pot.tiles()[static_cast<std::size_t>(inst_tile[i])]
                               .degree();
        bonds.clear();
        step(0, 0, 0);
    }

    // After placing a bond: if the component of its endpoints has no
    // free arms left while other instances remain, every completion of
    // this branch is disconnected, so the branch is dead.
    bool closed_proper_component() const {
        const auto ninst = inst_tile.size();
        std::vector<int> parent(ninst);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] = parent[static_cast<
                    std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& b : bonds)
            parent[static_cast<std::size_t>(find(b.unhatted))] =
                find(b.hatted);
        const int root = find(bonds.back().unhatted);
        std::size_t size = 0;
        long long open = 0;
        for (std::size_t i = 0; i < ninst; ++i) {
            if (find(static_cast<int>(i)) != root) continue;
            ++size;
            open += free_arms[i];
        }
        return open == 0 && size < ninst;
    }

    // Is `cand` allowed as an untouched partner? Only the lowest-indexed
    // untouched copy of each tile type may be entered (identical copies
    // are interchangeable).
    bool fresh_ok(int cand) const {
        if (touched[static_cast<std::size_t>(cand)]) return true;
        for (int i = 0; i < cand; ++i)
            if (!touched[static_cast<std::size_t>(i)] &&
                inst_tile[static_cast<std::size_t>(i)] ==
                    inst_tile[static_cast<std::size_t>(cand)])
                return false;
        return true;
    }

    void step(std::size_t g, int arm, int min_partner) {
        if (budget.exceeded || aborted) return;
        if (g == groups.size()) {
            if (!emit(bonds)) aborted = true;
            return;
        }
        const auto& grp = groups[g];
        if (arm == grp.arms) {
            step(g + 1, 0, 0);
            return;
        }
        const auto t = static_cast<std::size_t>(grp.type);
        for (std::size_t cand = static_cast<std::size_t>(min_partner);
             cand < inst_tile.size(); ++cand) {
            if (hat[t][cand] <= 0) continue;
            if (!fresh_ok(static_cast<int>(cand))) continue;
            if (!budget.spend()) return;
            --hat[t][cand];
            char saved_c = touched[cand];
            char saved_s = touched[static_cast<std::size_t>(grp.instance)];
            touched[cand] = 1;
            touched[static_cast<std::size_t>(grp.instance)] = 1;
            bonds.push_back({grp.instance, static_cast<int>(cand), grp.type});
            --free_arms[static_cast<std::size_t>(grp.instance)];
            --free_arms[cand];
            if (!closed_proper_component()) step(g, arm + 1, static_cast<int>(cand));
            ++free_arms[static_cast<std::size_t>(grp.instance)];
            ++free_arms[cand];
            bonds.pop_back();
            touched[cand] = saved_c;
            touched[static_cast<std::size_t>(grp.instance)] = saved_s;
            ++hat[t][cand];
            if (budget.exceeded || aborted) return;
        }
    }
};

bool bonds_connected(const std::vector<Bond>& bonds, std::size_t ninst) {
    if (ninst <= 1) return true;
    std::vector<int> parent(ninst);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::size_t components = ninst;
    for (const auto& b : bonds) {
        int ra = find(b.unhatted), rb = find(b.hatted);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

CatalogEntry make_entry(const Pot& pot, const std::vector<int>& inst_tile,
                        const std::vector<Bond>& bonds) {
    struct Rec {
        int u, v;
        std::string type;
        int unhatted_end;
    };
    std::vector<Rec> recs;
    recs.reserve(bonds.size());
    for (const auto& b : bonds) {
        int u = b.unhatted, v = b.hatted;
        int unhatted_end = b.unhatted;
        if (u > v) std::swap(u, v);
        recs.push_back({u, v, pot.bond_types()[static_cast<std::size_t>(b.type)],
                        unhatted_end});
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    CatalogEntry entry;
    entry.witness.graph = Multigraph(static_cast<int>(inst_tile.size()));
    for (const auto& r : recs) entry.witness.graph.add_edge(r.u, r.v);
    entry.witness.vertex_tiles = inst_tile;
    for (const auto& r : recs)
        entry.witness.edge_labels.push_back(EdgeLabel{r.type, r.unhatted_end});
    entry.graph = entry.witness.graph;
    return entry;
}

// Enumerate connected complete complexes of one exact order, deduped by
// canonical edge list within the order. Returns false when the visitor
// asked to stop.
bool complexes_of_order(const Pot& pot, long long order, Budget& budget,
                        const ComplexVisitor& visitor) {
    std::set<std::vector<Edge>> seen;
    auto usages = usage_vectors_of_order(pot, order);
    MatchSearch matcher(pot, budget);
    bool stop = false;
    for (const auto& usage : usages) {
        if (stop || budget.exceeded) break;
        matcher.run(usage, [&](const std::vector<Bond>& bonds) {
            if (!bonds_connected(bonds, matcher.inst_tile.size()))
                return true;
            auto entry = make_entry(pot, matcher.inst_tile, bonds);
            auto canon = entry.graph.canonical_edges();
            if (!seen.insert(std::move(canon)).second) return true;
            if (visitor && !visitor(order, entry)) stop = true;
            return !stop;
        });
    }
    return !stop;
}

} // namespace

std::optional<LabeledAssembly> realizes(const Pot& pot,
                                        const Multigraph& target,
                                        Budget* budget) {
    if (target.vertex_count() == 0)
        throw std::invalid_argument("target graph must be nonempty");
    Budget local;
    Budget& b = budget ? *budget : local;
    RealizeSearch search(pot, target, b);
    if (!search.prepare()) return std::nullopt;
    search.assign_tiles(0);
    return search.result;
}

ComplexCatalog enumerate_complexes(const Pot& pot, long long max_order,
                                   Budget* budget,
                                   const ComplexVisitor& visitor) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    Budget local;
    Budget& b = budget ? *budget : local;
    ComplexCatalog catalog;
    bool stop = false;
    for (long long n = 1; n <= max_order && !stop && !b.exceeded; ++n) {
        stop = !complexes_of_order(
            pot, n, b, [&](long long order, const CatalogEntry& entry) {
                catalog.by_order[order].push_back(entry);
                return !visitor || visitor(order, catalog.by_order[order].back());
            });
    }
    catalog.budget_exceeded = b.exceeded;
    catalog.nodes_used = b.used;
    return catalog;
}

void enumerate_complexes_at_order(const Pot& pot, long long order,
                                  Budget* budget,
                                  const ComplexVisitor& visitor) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    Budget local;
    complexes_of_order(pot, order, budget ? *budget : local, visitor);
}

CatalogEntry complex_from_usage(const Pot& pot, const UsageVector& usage) {
    std::vector<int> inst_tile;
    for (std::size_t j = 0; j < usage.counts.size(); ++j)
        for (long long c = 0; c < usage.counts[j]; ++c)
            inst_tile.push_back(static_cast<int>(j));
    const auto& types = pot.bond_types();

    // Per bond type, pools of instances holding each kind of arm; the
    // pools have equal size (the usage is net-zero), pair them in order.
    std::vector<Bond> bonds;
    for (std::size_t t = 0; t < types.size(); ++t) {
        std::vector<int> plain, hats;
        for (std::size_t i = 0; i < inst_tile.size(); ++i) {
            const Tile& tile =
                pot.tiles()[static_cast<std::size_t>(inst_tile[i])];
            for (const auto& [label, count] : tile.arms()) {
                if (label.bond_type != types[t]) continue;
                auto& pool = label.hatted ? hats : plain;
                pool.insert(pool.end(), static_cast<std::size_t>(count),
                            static_cast<int>(i));
            }
        }
        for (std::size_t k = 0; k < plain.size(); ++k)
            bonds.push_back({plain[k], hats[k], static_cast<int>(t)});
    }

    // Keep only the component containing instance 0; for a usage of
    // minimal order this is everything.
    std::vector<int> parent(inst_tile.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<
                std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& b : bonds)
        parent[static_cast<std::size_t>(find(b.unhatted))] = find(b.hatted);
    const int root = find(0);
    std::vector<int> renum(inst_tile.size(), -1);
    std::vector<int> kept_tiles;
    for (std::size_t i = 0; i < inst_tile.size(); ++i) {
        if (find(static_cast<int>(i)) != root) continue;
        renum[i] = static_cast<int>(kept_tiles.size());
        kept_tiles.push_back(inst_tile[i]);
    }
    std::vector<Bond> kept_bonds;
    for (const auto& b : bonds) {
        if (find(b.unhatted) != root) continue;
        kept_bonds.push_back({renum[static_cast<std::size_t>(b.unhatted)],
                              renum[static_cast<std::size_t>(b.hatted)],
                              b.type});
    }
    return make_entry(pot, kept_tiles, kept_bonds);
}

std::optional<std::pair<long long, Multigraph>> smallest_realized_order(
    const Pot& pot, long long cap, Budget* budget) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    // Any net-zero usage vector pairs into a complete complex whose
    // components are realized graphs no larger than it, so the least
    // usage order and the least realized order coincide.
    (void)budget;
    auto usage = min_usage_order(pot, cap);
    if (!usage) return std::nullopt;
    auto entry = complex_from_usage(pot, *usage);
    return {{usage->order, entry.graph}};
}

} // namespace tilepot
