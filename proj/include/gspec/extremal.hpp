#ifndef GSPEC_EXTREMAL_HPP
#define GSPEC_EXTREMAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gspec/canonical.hpp"
#include "gspec/exact_linalg.hpp"
#include "gspec/graph.hpp"
#include "gspec/reductions.hpp"

namespace gspec {

/// Graph with a designated spine v_1..v_{d+1} stored as vertices 0..d.
inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

/// Multiplicity of -1 on the spine P_{d+1}: 1 when d = 1 (mod 3), else 0.
inline int spine_multiplicity(int d) { return multiplicity(path_graph(d + 1), -1); }

inline constexpr int kExtremalMaxDiameter = 12;
inline constexpr int kExtremalMaxExtra = 10;

struct ExtremalSearchResult {
    int diameter = 0;
    int max_extra = 0;
    /// Maximal graphs; the spine is vertices 0..d in order.
    std::vector<Graph> maximal;
    /// Every state satisfying the final constraints, maximal or not.
    std::size_t final_states = 0;
    std::size_t states = 0;
    /// True when the extra-vertex cap was reached, so maximality is not certified.
    bool truncated = false;
};

namespace detail {

// Neighbourhoods a new vertex may have on the spine without shortening it:
// nothing, or a subset of a window v_i..v_{i+2} containing v_i.
inline std::vector<VertexSet> spine_windows(int d) {
    std::vector<VertexSet> out{VertexSet()};
    for (int i = 0; i <= d; ++i) {
        out.push_back(VertexSet{i});
        if (i + 1 <= d) out.push_back(VertexSet{i, i + 1});
        if (i + 2 <= d) {
            out.push_back(VertexSet{i, i + 2});
            out.push_back(VertexSet{i, i + 1, i + 2});
        }
    }
    return out;
}

inline bool creates_twin(const Graph& g, int w) {
    const VertexSet nw = g.closed_neighborhood(w);
    for (int u : g.neighbors(w))
        if (g.closed_neighborhood(u) == nw) return true;
    return false;
}

}  // namespace detail

/// Searches for every maximal C-canonical graph that contains the spine P_{d+1}
/// as a diametral path, has diameter d and satisfies m(-1) = n - d - 1.
///
/// States grow one vertex at a time, the new vertex taking any nonempty
/// neighbourhood that keeps the spine geodesic. A state is kept only if
///   * it has no closed twins (twins in an induced subgraph containing the spine
///     propagate to the whole graph under the rank-gap hypothesis),
///   * m(-1) >= n' - d - 1 - slack, slack = m_{P_{d+1}}(-1); a vertex raises the
///     multiplicity by at most one, so weaker states cannot reach equality.
/// States are merged by their spine-relative canonical key. A final state is
/// maximal when no final state is reachable from it.
inline ExtremalSearchResult extremal_search_detailed(int d, int max_extra = kExtremalMaxExtra) {
    if (d < 2 || d > kExtremalMaxDiameter)
        throw std::invalid_argument("extremal_search: d must be in 2.." + std::to_string(kExtremalMaxDiameter));
    if (max_extra < 0 || max_extra > kExtremalMaxExtra)
        throw std::invalid_argument("extremal_search: max_extra must be in 0.." + std::to_string(kExtremalMaxExtra));

    struct State {
        Graph g;
        int mult = 0;
        bool final = false;
        std::vector<std::size_t> children;
    };

    const Graph spine = path_graph(d + 1);
    const int slack = spine_multiplicity(d);
    std::vector<int> spine_order(d + 1);
    for (int i = 0; i <= d; ++i) spine_order[i] = i;
    const auto windows = detail::spine_windows(d);

    auto is_final = [d](const Graph& g, int mult) {
        return mult == g.order() - d - 1 && diameter(g) == d;
    };

    std::vector<State> states;
    states.push_back({spine, slack, is_final(spine, slack), {}});
    std::vector<std::size_t> level{0};

    for (int extra = 0; extra < max_extra && !level.empty(); ++extra) {
        std::unordered_map<std::string, std::size_t> seen;
        std::vector<std::size_t> next_level;
        for (std::size_t sid : level) {
            const Graph base = states[sid].g;
            const int n = base.order();
            const int threshold = n + 1 - d - 1 - slack;
            const int added = n - (d + 1);
            for (VertexSet window : windows) {
                for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << added); ++sub) {
                    const VertexSet nbrs = window | VertexSet(sub << (d + 1));
                    if (nbrs.empty()) continue;
                    const Graph child = base.with_vertex(nbrs);
                    if (distance(child, 0, d) != d) continue;
                    if (detail::creates_twin(child, n)) continue;
                    const int mult = multiplicity(child, -1);
                    if (mult < threshold) continue;
                    std::string key = spine_key(child, spine_order);
                    auto [it, inserted] = seen.try_emplace(std::move(key), states.size());
                    if (inserted) {
                        states.push_back({child, mult, is_final(child, mult), {}});
                        next_level.push_back(it->second);
                    }
                    states[sid].children.push_back(it->second);
                }
            }
        }
        level = std::move(next_level);
    }

    ExtremalSearchResult res;
    res.diameter = d;
    res.max_extra = max_extra;
    res.states = states.size();
    res.truncated = !level.empty() && states[level.front()].g.order() - (d + 1) == max_extra;

    // children always have larger index, so a reverse sweep sees them first
    std::vector<bool> reaches_final(states.size(), false);
    for (std::size_t i = states.size(); i-- > 0;) {
        for (std::size_t c : states[i].children)
            if (states[c].final || reaches_final[c]) reaches_final[i] = true;
    }
    std::unordered_map<std::string, bool> emitted;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!states[i].final) continue;
        ++res.final_states;
        if (reaches_final[i]) continue;
        if (emitted.try_emplace(iso_key(states[i].g).bytes, true).second) res.maximal.push_back(states[i].g);
    }
    return res;
}

inline std::vector<Graph> extremal_search(int d, int max_extra) { return extremal_search_detailed(d, max_extra).maximal; }

}  // namespace gspec

#endif  // GSPEC_EXTREMAL_HPP
