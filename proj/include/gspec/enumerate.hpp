#ifndef GSPEC_ENUMERATE_HPP
#define GSPEC_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gspec/canonical.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"

namespace gspec {

inline constexpr int kEnumerateMaxOrder = 9;

/// One canonical representative per isomorphism class of connected graphs of
/// each order 1..n_max. Order n is grown from order n - 1 by adding a vertex
/// with every nonempty neighbourhood: any connected graph has a non-cut
/// vertex, so every class is reached. Within an order, graphs are sorted by
/// iso_key and returned in their canonical labelling.
inline std::vector<std::vector<Graph>> enumerate_connected_by_order(int n_max) {
    if (n_max < 1 || n_max > kEnumerateMaxOrder)
        throw std::invalid_argument("enumerate_connected: n_max must be in 1.." + std::to_string(kEnumerateMaxOrder));
    std::vector<std::vector<Graph>> out;
    out.push_back({Graph::from_edges(1, {})});
    for (int n = 2; n <= n_max; ++n) {
        std::unordered_set<std::string> seen;
        std::vector<std::string> keys;
        for (const Graph& g : out.back()) {
            for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
                auto key = iso_key(g.with_vertex(VertexSet(nb))).bytes;
                if (seen.insert(key).second) keys.push_back(std::move(key));
            }
        }
        std::sort(keys.begin(), keys.end());
        std::vector<Graph> level;
        level.reserve(keys.size());
        for (const auto& k : keys) level.push_back(parse_graph6(k));
        out.push_back(std::move(level));
    }
    return out;
}

/// All orders concatenated, smallest order first.
inline std::vector<Graph> enumerate_connected(int n_max) {
    std::vector<Graph> all;
    for (auto& level : enumerate_connected_by_order(n_max))
        for (auto& g : level) all.push_back(std::move(g));
    return all;
}

}  // namespace gspec

#endif  // GSPEC_ENUMERATE_HPP
