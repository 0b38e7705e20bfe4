#ifndef GSPEC_CANONICAL_HPP
#define GSPEC_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"

namespace gspec {

/// Largest order accepted by iso_key. The canonical search is exponential in
/// the worst case; every graph the toolkit canonicalises is far below this.
inline constexpr int kIsoKeyMaxOrder = 32;

/// Canonical byte string of an isomorphism class: the graph6 encoding of the
/// canonically relabelled graph.
struct IsoKey {
    std::string bytes;

    auto operator<=>(const IsoKey&) const = default;
};

/// Result of canonical labelling: `position[v]` is the canonical index of v.
struct CanonicalForm {
    std::vector<int> position;
    Graph graph;
};

namespace detail {

using Certificate = std::vector<std::uint64_t>;

// Equitable refinement of an ordered partition given as a cell index per
// vertex. Cells split by (old cell, neighbour counts per cell); new cells are
// ordered by that signature, so the result depends only on the graph structure
// and the input order of cells.
inline void refine(const Graph& g, std::vector<int>& cell_of) {
    const int n = g.order();
    int cells = n == 0 ? 0 : *std::max_element(cell_of.begin(), cell_of.end()) + 1;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].assign(cells + 1, 0);
            sig[v][0] = cell_of[v];
            for (int u : g.neighbors(v)) ++sig[v][1 + cell_of[u]];
        }
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        int next = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++next;
            cell_of[order[i]] = next;
        }
        if (next + 1 == cells) return;
        cells = next + 1;
    }
}

inline bool are_twins(const Graph& g, int u, int v) {
    return g.neighbors(u).without(v) == g.neighbors(v).without(u);
}

struct CanonicalSearch {
    const Graph& g;
    Certificate best;
    std::vector<int> best_position;
    bool have_best = false;

    void leaf(const std::vector<int>& position) {
        const int n = g.order();
        Certificate cert(n, 0);
        for (int v = 0; v < n; ++v) {
            std::uint64_t row = 0;
            for (int u : g.neighbors(v)) row |= std::uint64_t{1} << position[u];
            cert[position[v]] = row;
        }
        if (!have_best || cert < best) {
            best = std::move(cert);
            best_position = position;
            have_best = true;
        }
    }

    void run(std::vector<int> cell_of) {
        refine(g, cell_of);
        const int n = g.order();
        std::vector<int> size(n, 0);
        for (int c : cell_of) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c) {
            if (size[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(cell_of);
            return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (cell_of[v] != target) continue;
            // a twin of an explored vertex spans an isomorphic subtree
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(g, u, v); })) continue;
            tried.push_back(v);
            std::vector<int> next(cell_of);
            for (int u = 0; u < n; ++u)
                if (next[u] > target || (next[u] == target && u != v)) ++next[u];
            run(std::move(next));
        }
    }
};

}  // namespace detail

/// Canonical labelling by equitable refinement and individualisation,
/// keeping the lexicographically smallest adjacency certificate. `colors`
/// (optional, one per vertex) restricts labellings to colour-preserving ones
/// and orders colour classes by colour value.
inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {}) {
    const int n = g.order();
    std::vector<int> cell_of(n, 0);
    if (!colors.empty()) {
        if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("canonical_form: colour count mismatch");
        std::vector<int> distinct(colors.begin(), colors.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            cell_of[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
    }
    if (n == 0) return {{}, g};
    detail::CanonicalSearch search{g, {}, {}, false};
    search.run(std::move(cell_of));
    return {search.best_position, relabel(g, search.best_position)};
}

inline IsoKey iso_key(const Graph& g) {
    if (g.order() > kIsoKeyMaxOrder)
        throw std::invalid_argument("iso_key: order " + std::to_string(g.order()) + " above supported " +
                                    std::to_string(kIsoKeyMaxOrder));
    return IsoKey{write_graph6(canonical_form(g).graph)};
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && iso_key(a) == iso_key(b);
}

/// Key of a graph together with a distinguished path (the spine), invariant
/// under relabelling of off-spine vertices and under reversing the spine.
inline std::string spine_key(const Graph& g, std::span<const int> spine) {
    const int n = g.order();
    const int len = static_cast<int>(spine.size());
    std::string best;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<int> colors(n, len);
        for (int i = 0; i < len; ++i) colors[spine[i]] = pass == 0 ? i : len - 1 - i;
        std::string key = write_graph6(canonical_form(g, colors).graph);
        if (pass == 0 || key < best) best = std::move(key);
    }
    return best;
}

}  // namespace gspec

template <>
struct std::hash<gspec::IsoKey> {
    std::size_t operator()(const gspec::IsoKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};

#endif  // GSPEC_CANONICAL_HPP
