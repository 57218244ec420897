#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relkit/error.hpp"

namespace relkit {

// One undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of the edges of one specific graph, held as a bit mask over edge
// indices. Anything that enumerates subsets (the brute-force counters, the
// Monte Carlo sampler) requires the host graph to have at most
// kMaxMaskEdges edges and rejects larger inputs.
struct EdgeSubset {
    static constexpr int kMaxMaskEdges = 63;

    std::uint64_t bits = 0;

    static EdgeSubset of(std::initializer_list<int> indices) {
        EdgeSubset s;
        for (int i : indices) s.set(i);
        return s;
    }

    bool test(int i) const { return (bits >> i) & 1u; }
    EdgeSubset& set(int i) {
        bits |= std::uint64_t{1} << i;
        return *this;
    }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
};

// Immutable simple undirected graph: a vertex count plus a canonical
// (lexicographically sorted, u < v) edge list. Construction goes through
// validate(), so a Graph value is always simple with in-range indices.
// Connectivity is a separate query, not an invariant, so edge-removal views
// stay representable.
class Graph {
  public:
    static Graph validate(int n_vertices, std::vector<Edge> edges) {
        if (n_vertices < 0) raise(Errc::vertex_out_of_range, "negative vertex count");
        for (Edge& e : edges) {
            if (e.u == e.v)
                raise(Errc::loop_edge, "loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_vertices)
                raise(Errc::vertex_out_of_range,
                      "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") outside [0," + std::to_string(n_vertices) + ")");
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            raise(Errc::duplicate_edge, "parallel edge (" + std::to_string(dup->u) + "," +
                                            std::to_string(dup->v) + ")");
        return Graph(n_vertices, std::move(edges));
    }

    int n_vertices() const { return n_vertices_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool has_vertex(int v) const { return v >= 0 && v < n_vertices_; }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    Graph(int n, std::vector<Edge> e) : n_vertices_(n), edges_(std::move(e)) {}

    int n_vertices_;
    std::vector<Edge> edges_;
};

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n_vertices()), 0);
    for (const Edge& e : g.edges()) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

namespace detail {

inline void check_subset_range(const Graph& g, EdgeSubset removed) {
    if (g.m() < 64 && (removed.bits >> g.m()) != 0)
        raise(Errc::index_out_of_range, "edge subset indexes past edge " +
                                            std::to_string(g.m() - 1));
}

// Adjacency as (neighbor, edge index) pairs, neighbors ascending.
inline std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(g.n_vertices()));
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edge(i);
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

} // namespace detail

// Maximal connected vertex sets of g minus the removed edges, breadth-first,
// ordered by smallest member; members ascending within each set.
inline std::vector<std::vector<int>> connected_components(const Graph& g,
                                                          EdgeSubset removed = {}) {
    detail::check_subset_range(g, removed);
    const auto adj = detail::adjacency(g);
    std::vector<char> seen(static_cast<std::size_t>(g.n_vertices()), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> queue;
    for (int s = 0; s < g.n_vertices(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        queue.assign(1, s);
        seen[static_cast<std::size_t>(s)] = 1;
        std::vector<int> comp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            comp.push_back(v);
            for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
                if (removed.test(ei) || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// True iff g minus the removed edges has a single connected component.
// Graphs with at most one vertex count as connected.
inline bool is_connected(const Graph& g, EdgeSubset removed = {}) {
    if (g.n_vertices() <= 1) {
        detail::check_subset_range(g, removed);
        return true;
    }
    return connected_components(g, removed).size() == 1;
}

// Edges whose single removal disconnects the graph, via one depth-first
// low-link pass. The definitional per-edge removal check is the test oracle.
inline EdgeSubset bridges(const Graph& g) {
    if (!is_connected(g)) raise(Errc::not_connected, "bridges need a connected graph");
    const auto adj = detail::adjacency(g);
    const int n = g.n_vertices();
    std::vector<int> entry(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    EdgeSubset out;

    struct Frame {
        int vertex;
        int parent_edge;
    };
    std::vector<Frame> stack;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (entry[static_cast<std::size_t>(root)] != -1) continue;
        stack.push_back({root, -1});
        entry[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            const auto [v, parent_edge] = stack.back();
            const auto& nbrs = adj[static_cast<std::size_t>(v)];
            if (next[static_cast<std::size_t>(v)] < nbrs.size()) {
                const auto [w, ei] = nbrs[next[static_cast<std::size_t>(v)]++];
                if (ei == parent_edge) continue;
                if (entry[static_cast<std::size_t>(w)] != -1) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)],
                                 entry[static_cast<std::size_t>(w)]);
                } else {
                    entry[static_cast<std::size_t>(w)] =
                        low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, ei});
                }
            } else {
                const Frame done = stack.back();
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().vertex;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)],
                                 low[static_cast<std::size_t>(done.vertex)]);
                    if (low[static_cast<std::size_t>(done.vertex)] >
                        entry[static_cast<std::size_t>(p)])
                        out.set(done.parent_edge);
                }
            }
        }
    }
    return out;
}

// Edge-addition steps. Leaf grows the vertex set by one pendant vertex (the
// next unused index) wired to `attach`; Chord joins two existing vertices
// that are not yet adjacent.
struct LeafStep {
    int attach = 0;
    friend bool operator==(const LeafStep&, const LeafStep&) = default;
};

struct ChordStep {
    int u = 0;
    int v = 0;
    friend bool operator==(const ChordStep&, const ChordStep&) = default;
};

using ConstructionStep = std::variant<LeafStep, ChordStep>;

// Ordered steps applied to the implicit base graph (two vertices joined by
// one edge). Every prefix of a valid script replays to a simple connected
// graph; after s steps the graph has s + 1 edges.
struct ConstructionScript {
    std::vector<ConstructionStep> steps;

    int final_edge_count() const { return 1 + static_cast<int>(steps.size()); }

    friend bool operator==(const ConstructionScript&, const ConstructionScript&) = default;
};

inline Graph base_graph() { return Graph::validate(2, {{0, 1}}); }

inline Graph apply_step(const Graph& g, const ConstructionStep& step) {
    std::vector<Edge> edges = g.edges();
    if (const auto* leaf = std::get_if<LeafStep>(&step)) {
        if (!g.has_vertex(leaf->attach))
            raise(Errc::attach_vertex_missing,
                  "attach vertex " + std::to_string(leaf->attach) + " not in graph");
        edges.push_back({leaf->attach, g.n_vertices()});
        return Graph::validate(g.n_vertices() + 1, std::move(edges));
    }
    const auto& chord = std::get<ChordStep>(step);
    if (chord.u == chord.v)
        raise(Errc::chord_endpoints_equal, "chord endpoints both " + std::to_string(chord.u));
    if (!g.has_vertex(chord.u) || !g.has_vertex(chord.v))
        raise(Errc::vertex_out_of_range, "chord endpoint not in graph");
    if (g.has_edge(chord.u, chord.v))
        raise(Errc::chord_endpoints_adjacent, "chord (" + std::to_string(chord.u) + "," +
                                                  std::to_string(chord.v) +
                                                  ") already an edge");
    edges.push_back({chord.u, chord.v});
    return Graph::validate(g.n_vertices(), std::move(edges));
}

inline Graph replay(const ConstructionScript& script) {
    Graph g = base_graph();
    for (const ConstructionStep& s : script.steps) g = apply_step(g, s);
    return g;
}

// derive_script output: the script plus the vertex relabeling it implies.
// relabel[original vertex] = vertex index used by the script, so replaying
// the script and mapping indices back through the inverse of `relabel`
// reproduces the input graph's canonical edge list exactly.
struct DerivedScript {
    ConstructionScript script;
    std::vector<int> relabel;
};

// Decompose a connected graph into construction steps: a breadth-first
// spanning tree from vertex 0 (ties broken by ascending neighbor index)
// emitted as Leaf steps in discovery order, then the remaining edges as
// Chord steps in canonical order of the relabeled endpoints. Deterministic
// by construction.
inline DerivedScript derive_script(const Graph& g) {
    if (g.m() < 1) raise(Errc::empty_edge_set, "graph has no edges");
    if (!is_connected(g)) raise(Errc::not_connected, "cannot derive a script");

    const auto adj = detail::adjacency(g);
    const int n = g.n_vertices();
    std::vector<int> relabel(static_cast<std::size_t>(n), -1);
    std::vector<int> order; // original indices in discovery order
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> tree_edge(static_cast<std::size_t>(g.m()), 0);

    relabel[0] = 0;
    order.push_back(0);
    std::vector<std::pair<int, int>> tree_parents; // (parent original, child original)
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
            if (relabel[static_cast<std::size_t>(w)] != -1) continue;
            relabel[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
            order.push_back(w);
            tree_edge[static_cast<std::size_t>(ei)] = 1;
            tree_parents.emplace_back(v, w);
        }
    }

    ConstructionScript script;
    script.steps.reserve(static_cast<std::size_t>(g.m() - 1));
    // tree_parents[0] is the base edge (relabeled (0,1)); later tree edges
    // become Leaf steps in discovery order.
    for (std::size_t i = 1; i < tree_parents.size(); ++i)
        script.steps.push_back(
            LeafStep{relabel[static_cast<std::size_t>(tree_parents[i].first)]});

    std::vector<Edge> chords;
    for (int i = 0; i < g.m(); ++i) {
        if (tree_edge[static_cast<std::size_t>(i)]) continue;
        int a = relabel[static_cast<std::size_t>(g.edge(i).u)];
        int b = relabel[static_cast<std::size_t>(g.edge(i).v)];
        if (a > b) std::swap(a, b);
        chords.push_back({a, b});
    }
    std::sort(chords.begin(), chords.end());
    for (const Edge& c : chords) script.steps.push_back(ChordStep{c.u, c.v});

    return {std::move(script), std::move(relabel)};
}

} // namespace relkit
