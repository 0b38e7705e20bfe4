#ifndef GSPEC_REDUCTIONS_HPP
#define GSPEC_REDUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "gspec/exact_linalg.hpp"
#include "gspec/graph.hpp"

namespace gspec {

/// Partition of V(G) into classes of vertices with equal closed neighbourhoods.
/// Classes are ordered by their smallest member.
struct RhoPartition {
    std::vector<VertexSet> classes;

    int size() const { return static_cast<int>(classes.size()); }
    bool operator==(const RhoPartition&) const = default;
};

inline RhoPartition rho_partition(const Graph& g) {
    RhoPartition p;
    VertexSet assigned;
    for (int v = 0; v < g.order(); ++v) {
        if (assigned.contains(v)) continue;
        const VertexSet nv = g.closed_neighborhood(v);
        VertexSet cls;
        // members of v's class are all inside N[v]
        for (int u : nv)
            if (g.closed_neighborhood(u) == nv) cls = cls.with(u);
        assigned |= cls;
        p.classes.push_back(cls);
    }
    return p;
}

/// True iff no two vertices share a closed neighbourhood.
inline bool is_c_canonical(const Graph& g) { return rho_partition(g).size() == g.order(); }

/// Quotient by the closed-twin relation, keeping the smallest vertex of each
/// class and relabelling in ascending order.
inline Graph canonical_graph(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("canonical_graph: graph is not connected");
    VertexSet reps;
    for (VertexSet cls : rho_partition(g).classes) reps = reps.with(cls.first());
    return induced_subgraph(g, reps);
}

/// A hanging path w - a - b: deg(b) = 1 with N(b) = {a}, deg(a) = 2 with N(a) = {w, b}.
struct PendantP3 {
    int w = -1;
    int a = -1;
    int b = -1;

    bool operator==(const PendantP3&) const = default;
};

inline bool is_pendant_p3(const Graph& g, const PendantP3& p) {
    const int n = g.order();
    for (int v : {p.w, p.a, p.b})
        if (v < 0 || v >= n) return false;
    if (p.w == p.a || p.a == p.b || p.w == p.b) return false;
    return g.neighbors(p.b) == VertexSet{p.a} && g.neighbors(p.a) == VertexSet{p.w, p.b};
}

/// The lexicographically first (w, a, b) forming a pendant P3, if any.
inline std::optional<PendantP3> find_pendant_p3(const Graph& g) {
    std::optional<PendantP3> best;
    for (int b = 0; b < g.order(); ++b) {
        if (g.degree(b) != 1) continue;
        const int a = g.neighbors(b).first();
        if (g.degree(a) != 2) continue;
        const int w = g.neighbors(a).without(b).first();
        PendantP3 cand{w, a, b};
        if (!best || std::tie(cand.w, cand.a, cand.b) < std::tie(best->w, best->a, best->b)) best = cand;
    }
    return best;
}

/// Every pendant P3 of g, in lexicographic (w, a, b) order.
inline std::vector<PendantP3> all_pendant_p3(const Graph& g) {
    std::vector<PendantP3> out;
    for (int b = 0; b < g.order(); ++b) {
        if (g.degree(b) != 1) continue;
        const int a = g.neighbors(b).first();
        if (g.degree(a) != 2) continue;
        out.push_back({g.neighbors(a).without(b).first(), a, b});
    }
    std::sort(out.begin(), out.end(),
              [](const PendantP3& x, const PendantP3& y) { return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b); });
    return out;
}

/// Removes w, a and b together. The multiplicity of -1 is unchanged by this
/// removal; that is the reading under which the reduction is applied
/// throughout the attachment analysis.
inline Graph strip_pendant_p3(const Graph& g, const PendantP3& p) {
    if (g.order() < 4) throw std::invalid_argument("strip_pendant_p3: graph needs at least 4 vertices");
    if (!is_pendant_p3(g, p)) throw std::invalid_argument("strip_pendant_p3: not a pendant P3");
    return remove_vertices(g, VertexSet{p.w, p.a, p.b});
}

/// Star-set test by deletion: |X| = m_G(mu) and mu is not an eigenvalue of G - X.
inline bool is_star_set(const Graph& g, int mu, VertexSet x) {
    if (!x.is_subset_of(g.vertices())) throw std::out_of_range("is_star_set: vertex out of range");
    return x.size() == multiplicity(g, mu) && multiplicity(remove_vertices(g, x), mu) == 0;
}

/// True iff every vertex outside `s` has a neighbour in `s`.
inline bool is_dominating_set(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw std::out_of_range("is_dominating_set: vertex out of range");
    VertexSet covered = s;
    for (int v : s) covered |= g.neighbors(v);
    return covered == g.vertices();
}

}  // namespace gspec

#endif  // GSPEC_REDUCTIONS_HPP
