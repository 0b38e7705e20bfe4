#ifndef GSPEC_EMBEDDING_HPP
#define GSPEC_EMBEDDING_HPP

#include <algorithm>
#include <vector>

#include "gspec/graph.hpp"

namespace gspec {

/// True iff `small` is isomorphic to an induced subgraph of `big` under a map
/// that sends path[i] to target[i] for every i. Backtracks over the remaining
/// vertices in breadth-first order from the path.
inline bool embeds_induced_along_path(const Graph& small, const PathWitness& path, const Graph& big,
                                      const PathWitness& target) {
    if (path.vertices.size() != target.vertices.size()) return false;
    if (small.order() > big.order()) return false;
    std::vector<int> image(small.order(), -1);
    VertexSet used;
    VertexSet mapped;
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        const int s = path.vertices[i];
        const int t = target.vertices[i];
        if (used.contains(t) || image[s] != -1) return false;
        image[s] = t;
        used = used.with(t);
        mapped = mapped.with(s);
    }
    for (int a : mapped)
        for (int b : mapped)
            if (a < b && small.adjacent(a, b) != big.adjacent(image[a], image[b])) return false;

    // remaining vertices, nearest to the mapped part first
    std::vector<int> order;
    VertexSet reached = mapped;
    VertexSet frontier = mapped;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= small.neighbors(v);
        next -= reached;
        for (int v : next) order.push_back(v);
        reached |= next;
        frontier = next;
    }
    for (int v : small.vertices() - reached) order.push_back(v);

    auto extend = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        const int v = order[k];
        VertexSet cand = big.vertices() - used;
        for (int u : mapped) {
            if (small.adjacent(u, v)) cand &= big.neighbors(image[u]);
            else cand -= big.neighbors(image[u]);
        }
        for (int c : cand) {
            image[v] = c;
            used = used.with(c);
            mapped = mapped.with(v);
            if (self(self, k + 1)) return true;
            mapped = mapped.without(v);
            used = used.without(c);
            image[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace gspec

#endif  // GSPEC_EMBEDDING_HPP
