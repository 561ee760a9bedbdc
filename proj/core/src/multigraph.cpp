#include "tilepot/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tilepot {

Multigraph::Multigraph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    vertex_count_ = vertex_count;
}

void Multigraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    sorted_ = false;
}

int Multigraph::add_vertex() {
    return vertex_count_++;
}

void Multigraph::ensure_sorted() const {
    if (!sorted_) {
        std::sort(edges_.begin(), edges_.end());
        sorted_ = true;
    }
}

const std::vector<Edge>& Multigraph::edges() const {
    ensure_sorted();
    return edges_;
}

int Multigraph::degree(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw std::invalid_argument("vertex out of range");
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d; // loop (v,v) counts twice
    }
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
    for (const auto& [a, b] : edges_) {
        ++d[static_cast<std::size_t>(a)];
        ++d[static_cast<std::size_t>(b)];
    }
    return d;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
    for (const auto& [a, b] : edges_) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return visited == vertex_count_;
}

bool Multigraph::has_loop_or_parallel_edge() const {
    ensure_sorted();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].first == edges_[i].second) return true;
        if (i + 1 < edges_.size() && edges_[i] == edges_[i + 1]) return true;
    }
    return false;
}

bool Multigraph::operator==(const Multigraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges() == other.edges();
}

namespace {

// Adjacency multiplicity matrix; loops stored on the diagonal with
// multiplicity = number of loops (degree contribution handled separately).
std::vector<std::vector<int>> adjacency(const Multigraph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& [a, b] : g.edges()) {
        auto u = static_cast<std::size_t>(a), v = static_cast<std::size_t>(b);
        if (u == v) {
            ++m[u][u];
        } else {
            ++m[u][v];
            ++m[v][u];
        }
    }
    return m;
}

// Iterated partition refinement by (color, sorted multiset of
// (neighbor color, multiplicity)), including loop multiplicity.
// Returns a stable coloring; equal colors = indistinguishable so far.
std::vector<int> refine(const std::vector<std::vector<int>>& adj,
                        std::vector<int> color) {
    const std::size_t n = adj.size();
    for (;;) {
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::map<int, int> by_color;
            for (std::size_t w = 0; w < n; ++w) {
                if (w == v) continue;
                if (adj[v][w] > 0) by_color[color[w]] += adj[v][w];
            }
            std::vector<std::pair<int, int>> s(by_color.begin(), by_color.end());
            s.emplace_back(-1, adj[v][v]); // loop count folded into signature
            sig[v] = {color[v], std::move(s)};
        }
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> index;
        for (std::size_t v = 0; v < n; ++v) index.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, idx] : index) idx = next++;
        std::vector<int> fresh(n);
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            fresh[v] = index[sig[v]];
            if (fresh[v] != color[v]) changed = true;
        }
        color = std::move(fresh);
        if (!changed) return color;
    }
}

std::vector<Edge> relabeled_edges(const Multigraph& g,
                                  const std::vector<int>& perm) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) {
        int u = perm[static_cast<std::size_t>(a)];
        int v = perm[static_cast<std::size_t>(b)];
        if (u > v) std::swap(u, v);
        out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void canonical_search(const Multigraph& g,
                      const std::vector<std::vector<int>>& adj,
                      std::vector<int> color,
                      std::vector<Edge>& best,
                      bool& have_best) {
    color = refine(adj, color);
    const std::size_t n = adj.size();

    // Find the first non-singleton color class (smallest color value).
    std::map<int, std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < n; ++v) classes[color[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : classes) {
        if (members.size() > 1) {
            target = &members;
            break;
        }
    }

    if (!target) {
        // Discrete coloring: permutation = rank by color.
        std::vector<int> perm(n);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        for (std::size_t rank = 0; rank < n; ++rank)
            perm[order[rank]] = static_cast<int>(rank);
        auto cand = relabeled_edges(g, perm);
        if (!have_best || cand < best) {
            best = std::move(cand);
            have_best = true;
        }
        return;
    }

    // Individualize each member of the class in turn.
    for (std::size_t v : *target) {
        auto next = color;
        // Give v a color strictly between its class and the previous class.
        for (std::size_t w = 0; w < n; ++w) next[w] *= 2;
        next[v] -= 1;
        canonical_search(g, adj, std::move(next), best, have_best);
    }
}

} // namespace

std::vector<Edge> Multigraph::canonical_edges() const {
    if (vertex_count_ == 0) return {};
    auto adj = adjacency(*this);
    const std::size_t n = adj.size();
    std::vector<int> color(n, 0);
    // Seed with (degree, loop count) so refinement starts sharp.
    {
        auto deg = degrees();
        std::map<std::pair<int, int>, int> index;
        for (std::size_t v = 0; v < n; ++v)
            index.emplace(std::make_pair(deg[v], adj[v][v]), 0);
        int next = 0;
        for (auto& [k, idx] : index) idx = next++;
        for (std::size_t v = 0; v < n; ++v)
            color[v] = index[{deg[v], adj[v][v]}];
    }
    std::vector<Edge> best;
    bool have_best = false;
    canonical_search(*this, adj, std::move(color), best, have_best);
    return best;
}

Multigraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph make_cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle order must be >= 3");
    Multigraph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

Multigraph make_complete(int m) {
    if (m < 1) throw std::invalid_argument("complete graph order must be >= 1");
    Multigraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    return g;
}

Multigraph make_lollipop(int m, int n) {
    if (m <= 3)
        throw std::invalid_argument(
            "lollipop requires m >= 4 (for m = 3 the graph is a tadpole; "
            "use make_tadpole)");
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    // Vertices 0..m-1: clique (vertex 0 is the bridging vertex);
    // vertices m..m+n-1: the appended path.
    Multigraph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    g.add_edge(0, m);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(m + i, m + i + 1);
    return g;
}

Multigraph make_tadpole(int m, int n) {
    if (m < 3) throw std::invalid_argument("tadpole requires m >= 3");
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    // Vertices 0..m-1: cycle (vertex 0 bridges); m..m+n-1: the path.
    Multigraph g(m + n);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    g.add_edge(0, m);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(m + i, m + i + 1);
    return g;
}

DegreeStats degree_stats(const Multigraph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("degree stats of an empty graph");
    std::set<int> all, even, odd;
    for (int d : g.degrees()) {
        all.insert(d);
        (d % 2 == 0 ? even : odd).insert(d);
    }
    return DegreeStats{static_cast<int>(all.size()),
                       static_cast<int>(even.size()),
                       static_cast<int>(odd.size())};
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return a.canonical_edges() == b.canonical_edges();
}

std::string to_dot(const Multigraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
    for (const auto& [u, v] : g.edges())
        out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace tilepot
