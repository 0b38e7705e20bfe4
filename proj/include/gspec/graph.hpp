#ifndef GSPEC_GRAPH_HPP
#define GSPEC_GRAPH_HPP

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gspec/vertex_set.hpp"

namespace gspec {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most kMaxOrder vertices.
///
/// Adjacency is one VertexSet per vertex. Every constructor path validates
/// symmetry and the absence of loops, so a Graph value always satisfies them.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse; loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::span<const Edge> edges) {
        check_order(n);
        Graph g;
        g.n_ = n;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
            g.adj_[u] = g.adj_[u].with(v);
            g.adj_[v] = g.adj_[v].with(u);
        }
        return g;
    }
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(std::span<const VertexSet> rows) {
        const int n = static_cast<int>(rows.size());
        check_order(n);
        Graph g;
        g.n_ = n;
        const VertexSet all = VertexSet::range(n);
        for (int v = 0; v < n; ++v) {
            if (!rows[v].is_subset_of(all)) throw std::invalid_argument("adjacency row out of range");
            if (rows[v].contains(v)) throw std::invalid_argument("loop at vertex " + std::to_string(v));
            g.adj_[v] = rows[v];
        }
        for (int v = 0; v < n; ++v)
            for (int u : rows[v])
                if (!rows[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_.at(check_vertex(v)); }
    VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(check_vertex(v)); }
    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].size();
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Returns a new graph with one extra vertex (index order()) adjacent to `nbrs`.
    Graph with_vertex(VertexSet nbrs) const {
        check_order(n_ + 1);
        if (!nbrs.is_subset_of(vertices())) throw std::invalid_argument("neighbour out of range");
        Graph g = *this;
        const int w = n_;
        g.n_ = n_ + 1;
        g.adj_[w] = nbrs;
        for (int v : nbrs) g.adj_[v] = g.adj_[v].with(w);
        return g;
    }

    /// Returns a new graph with the edge {u,v} toggled.
    Graph with_edge_toggled(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop");
        Graph g = *this;
        g.adj_[u] = g.adj_[u] ^ VertexSet().with(v);
        g.adj_[v] = g.adj_[v] ^ VertexSet().with(u);
        return g;
    }

    bool operator==(const Graph& other) const {
        if (n_ != other.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != other.adj_[v]) return false;
        return true;
    }

private:
    static void check_order(int n) {
        if (n < 0 || n > kMaxOrder)
            throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                        std::to_string(kMaxOrder));
    }
    int check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
        return v;
    }

    int n_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }
inline Graph build_graph(int n, std::initializer_list<Edge> edges) { return Graph::from_edges(n, edges); }

/// An ordered list of distinct vertices forming a geodesic in some host graph.
struct PathWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    VertexSet as_set() const { return VertexSet::of(vertices); }
    bool operator==(const PathWitness&) const = default;
};

/// Breadth-first distances from `source`; unreachable vertices get -1.
inline std::vector<int> distances_from(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    VertexSet frontier = VertexSet().with(source);
    VertexSet seen = frontier;
    dist[source] = 0;
    for (int level = 1; !frontier.empty(); ++level) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next -= seen;
        for (int v : next) dist[v] = level;
        seen |= next;
        frontier = next;
    }
    return dist;
}

inline int distance(const Graph& g, int u, int v) { return distances_from(g, u).at(v); }

/// True iff the graph is non-empty and a BFS from vertex 0 reaches every vertex.
inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    VertexSet seen = VertexSet().with(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices();
}

/// All-pairs distances by repeated BFS.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d.push_back(distances_from(g, v));
    return d;
}

inline int diameter(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("diameter of a disconnected graph");
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        for (int x : distances_from(g, v)) best = std::max(best, x);
    return best;
}

namespace detail {

// Walks back from `target` to `source` along BFS layers, always taking the
// smallest-index predecessor.
inline std::vector<int> smallest_parent_path(const Graph& g, const std::vector<int>& dist, int target) {
    std::vector<int> rev{target};
    int cur = target;
    while (dist[cur] > 0) {
        for (int p : g.neighbors(cur)) {
            if (dist[p] == dist[cur] - 1) {
                cur = p;
                break;
            }
        }
        rev.push_back(cur);
    }
    return {rev.rbegin(), rev.rend()};
}

}  // namespace detail

/// Diameter plus one deterministic diametral geodesic: the lexicographically
/// smallest diametral pair (source, target), joined by the BFS path that picks
/// the smallest-index parent at every step.
inline std::pair<int, PathWitness> diameter_and_path(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("diameter_and_path: graph is not connected");
    int best = -1;
    int best_t = 0;
    std::vector<int> best_dist;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = distances_from(g, s);
        for (int t = 0; t < g.order(); ++t) {
            if (dist[t] > best) {
                best = dist[t];
                best_t = t;
                best_dist = dist;
            }
        }
    }
    PathWitness w{detail::smallest_parent_path(g, best_dist, best_t)};
    return {best, std::move(w)};
}

/// Every diametral geodesic as an ordered vertex list. Both orientations of
/// each geodesic appear. Output order is deterministic.
inline std::vector<PathWitness> all_diameter_paths(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("all_diameter_paths: graph is not connected");
    const auto dm = distance_matrix(g);
    int d = 0;
    for (const auto& row : dm)
        for (int x : row) d = std::max(d, x);

    std::vector<PathWitness> out;
    std::vector<int> path;
    for (int s = 0; s < g.order(); ++s) {
        for (int t = 0; t < g.order(); ++t) {
            if (dm[s][t] != d) continue;
            // depth-first along vertices whose distance to t decreases by one
            path.assign(1, s);
            auto extend = [&](auto&& self, int cur) -> void {
                if (cur == t) {
                    out.push_back(PathWitness{path});
                    return;
                }
                for (int nxt : g.neighbors(cur)) {
                    if (dm[nxt][t] != dm[cur][t] - 1) continue;
                    path.push_back(nxt);
                    self(self, nxt);
                    path.pop_back();
                }
            };
            extend(extend, s);
        }
    }
    return out;
}

/// True iff the witness is a path in g whose end-to-end distance equals its length.
inline bool is_geodesic(const Graph& g, const PathWitness& p) {
    if (p.vertices.empty()) return false;
    if (p.as_set().size() != static_cast<int>(p.vertices.size())) return false;
    for (int v : p.vertices)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        if (!g.adjacent(p.vertices[i - 1], p.vertices[i])) return false;
    return distance(g, p.vertices.front(), p.vertices.back()) == p.length();
}

/// Subgraph induced by `keep`, relabelled in ascending order of original index.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.is_subset_of(g.vertices())) throw std::out_of_range("induced_subgraph: vertex out of range");
    std::array<int, 64> relabel{};
    int next = 0;
    for (int v : keep) relabel[v] = next++;
    std::vector<VertexSet> rows(next);
    for (int v : keep) {
        VertexSet r;
        for (int u : g.neighbors(v) & keep) r = r.with(relabel[u]);
        rows[relabel[v]] = r;
    }
    return Graph::from_rows(rows);
}

/// G - X.
inline Graph remove_vertices(const Graph& g, VertexSet drop) { return induced_subgraph(g, g.vertices() - drop); }

/// Applies a vertex permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    std::vector<VertexSet> rows(g.order());
    VertexSet seen;
    for (int p : perm) {
        if (p < 0 || p >= g.order() || seen.contains(p)) throw std::invalid_argument("not a permutation");
        seen = seen.with(p);
    }
    for (int v = 0; v < g.order(); ++v) {
        VertexSet r;
        for (int u : g.neighbors(v)) r = r.with(perm[u]);
        rows[perm[v]] = r;
    }
    return Graph::from_rows(rows);
}

}  // namespace gspec

#endif  // GSPEC_GRAPH_HPP
