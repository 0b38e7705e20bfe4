#ifndef GSPEC_FAMILIES_HPP
#define GSPEC_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gspec/canonical.hpp"
#include "gspec/exact_linalg.hpp"
#include "gspec/extremal.hpp"
#include "gspec/graph.hpp"
#include "gspec/reductions.hpp"

namespace gspec {

enum class GraphKind { path, cycle, complete, complete_bipartite };

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite_graph: sides must be nonempty");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

inline Graph standard_graph(GraphKind kind, std::span<const int> sizes) {
    auto want = [&](std::size_t k) {
        if (sizes.size() != k) throw std::invalid_argument("standard_graph: wrong number of size parameters");
    };
    switch (kind) {
        case GraphKind::path: want(1); return path_graph(sizes[0]);
        case GraphKind::cycle: want(1); return cycle_graph(sizes[0]);
        case GraphKind::complete: want(1); return complete_graph(sizes[0]);
        case GraphKind::complete_bipartite: want(2); return complete_bipartite_graph(sizes[0], sizes[1]);
    }
    throw std::invalid_argument("standard_graph: unknown kind");
}
inline Graph standard_graph(GraphKind kind, std::initializer_list<int> sizes) {
    return standard_graph(kind, std::span<const int>(sizes.begin(), sizes.size()));
}

/// Vertices hung on a spine v_1..v_{d+1}. Positions are 1-based spine indices.
/// Attached vertices are numbered in the order n1, n2, distance_two, and
/// `distance_two` / `extra_edges` refer to that numbering (0-based).
struct AttachmentProfile {
    int diameter = 0;
    std::vector<int> n1;                          // vertex adjacent to v_i only
    std::vector<int> n2;                          // vertex adjacent to v_m and v_{m+1}
    std::vector<std::vector<int>> distance_two;   // attached vertices each one is adjacent to
    std::vector<std::pair<int, int>> extra_edges; // among attached vertices

    int attached_count() const {
        return static_cast<int>(n1.size() + n2.size() + distance_two.size());
    }
};

class AssemblyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AssemblyChecks {
    bool require_diameter = true;
    bool require_c_canonical = true;
};

/// Builds the spine as vertices 0..d followed by the attached vertices. By
/// default rejects profiles that shorten the diameter or create closed twins.
inline Graph assemble(const AttachmentProfile& p, AssemblyChecks checks = {}) {
    const int d = p.diameter;
    if (d < 1) throw AssemblyError("assemble: diameter must be positive");
    Graph g = path_graph(d + 1);
    for (int i : p.n1) {
        if (i < 1 || i > d + 1) throw AssemblyError("assemble: N1 position " + std::to_string(i) + " out of range");
        g = g.with_vertex(VertexSet{i - 1});
    }
    for (int m : p.n2) {
        if (m < 1 || m > d) throw AssemblyError("assemble: N2 position " + std::to_string(m) + " out of range");
        g = g.with_vertex(VertexSet{m - 1, m});
    }
    const int first_attached = d + 1;
    for (const auto& nbrs : p.distance_two) {
        VertexSet s;
        for (int a : nbrs) {
            if (a < 0 || first_attached + a >= g.order())
                throw AssemblyError("assemble: distance-two neighbour must be an earlier attached vertex");
            s = s.with(first_attached + a);
        }
        if (s.empty()) throw AssemblyError("assemble: distance-two vertex without neighbours");
        g = g.with_vertex(s);
    }
    for (auto [a, b] : p.extra_edges) {
        const int u = first_attached + a;
        const int v = first_attached + b;
        if (a < 0 || b < 0 || u >= g.order() || v >= g.order() || a == b)
            throw AssemblyError("assemble: bad extra edge");
        if (!g.adjacent(u, v)) g = g.with_edge_toggled(u, v);
    }
    if (checks.require_diameter && diameter(g) != d)
        throw AssemblyError("assemble: attachments change the diameter");
    if (checks.require_c_canonical && !is_c_canonical(g))
        throw AssemblyError("assemble: attachments create closed twins");
    return g;
}

/// How the vertices off a spine sit relative to it.
struct AttachmentSummary {
    std::vector<int> n1;        // one spine neighbour
    std::vector<int> n2;        // two consecutive spine neighbours
    std::vector<int> n2_gap;    // spine neighbours v_i, v_{i+2}
    std::vector<int> n3;        // three consecutive spine neighbours
    std::vector<int> distance_two;
    std::vector<int> farther;   // distance >= 3, or spine neighbourhoods of other shapes

    /// First spine position (1-based) of the attachment of vertex v, or 0.
    std::map<int, int> position;
};

inline AttachmentSummary summarize_attachments(const Graph& g, const PathWitness& spine) {
    AttachmentSummary s;
    const VertexSet on_spine = spine.as_set();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < spine.vertices.size(); ++i) pos[spine.vertices[i]] = static_cast<int>(i);
    VertexSet adjacent_to_spine;
    for (int v = 0; v < g.order(); ++v) {
        if (on_spine.contains(v)) continue;
        const VertexSet sn = g.neighbors(v) & on_spine;
        if (sn.empty()) continue;
        adjacent_to_spine = adjacent_to_spine.with(v);
        std::vector<int> ps;
        for (int u : sn) ps.push_back(pos[u]);
        std::sort(ps.begin(), ps.end());
        s.position[v] = ps.front() + 1;
        if (ps.size() == 1) s.n1.push_back(v);
        else if (ps.size() == 2 && ps[1] == ps[0] + 1) s.n2.push_back(v);
        else if (ps.size() == 2 && ps[1] == ps[0] + 2) s.n2_gap.push_back(v);
        else if (ps.size() == 3 && ps[2] == ps[0] + 2) s.n3.push_back(v);
        else s.farther.push_back(v);
    }
    for (int v = 0; v < g.order(); ++v) {
        if (on_spine.contains(v) || adjacent_to_spine.contains(v)) continue;
        if (g.neighbors(v).intersects(adjacent_to_spine)) s.distance_two.push_back(v);
        else s.farther.push_back(v);
    }
    return s;
}

/// A reconstructed maximal extremal graph with its spine and parameters.
struct FamilyInstance {
    Graph graph;
    PathWitness spine;
    int diameter = 0;
    int multiplicity = 0;
    /// Attachment counts; see family_parameters.
    std::map<std::string, int> params;
    /// Diametral paths of `graph`, one orientation each.
    std::vector<PathWitness> diameter_paths;
};

/// Parameter record for an instance: attachment counts by kind, N2 counts by
/// residue of the attachment position, and the family parameter read off the
/// residue of d (t = |N2| for d = 2 mod 3; the N2 count beyond the fixed part
/// for d = 1 mod 3).
inline std::map<std::string, int> family_parameters(const Graph& g, const PathWitness& spine) {
    const auto s = summarize_attachments(g, spine);
    const int d = spine.length();
    std::map<std::string, int> p;
    p["attached"] = g.order() - (d + 1);
    p["n1"] = static_cast<int>(s.n1.size());
    p["n2"] = static_cast<int>(s.n2.size());
    p["n2_gap"] = static_cast<int>(s.n2_gap.size());
    p["n3"] = static_cast<int>(s.n3.size());
    p["distance_two"] = static_cast<int>(s.distance_two.size());
    p["farther"] = static_cast<int>(s.farther.size());
    int by_residue[3] = {0, 0, 0};
    for (int v : s.n2) ++by_residue[s.position.at(v) % 3];
    p["n2_residue0"] = by_residue[0];
    p["n2_residue1"] = by_residue[1];
    p["n2_residue2"] = by_residue[2];
    switch (d % 3) {
        case 2: p["t"] = p["n2"]; break;
        case 1: p["m"] = p["n2"]; break;
        default: break;
    }
    return p;
}

inline FamilyInstance make_family_instance(const Graph& g, int d) {
    FamilyInstance fi;
    fi.graph = g;
    fi.diameter = d;
    fi.spine.vertices.resize(d + 1);
    for (int i = 0; i <= d; ++i) fi.spine.vertices[i] = i;
    fi.multiplicity = multiplicity(g, -1);
    fi.params = family_parameters(g, fi.spine);
    for (auto& p : all_diameter_paths(g))
        if (p.vertices.front() < p.vertices.back()) fi.diameter_paths.push_back(std::move(p));
    return fi;
}

inline constexpr int kFamilyMinDiameter = 2;
inline constexpr int kFamilyMaxDiameter = kExtremalMaxDiameter;

/// Thread-safe cache of reconstructed maximal families, one entry per d.
class FamilyCatalog {
public:
    explicit FamilyCatalog(int max_extra = kExtremalMaxExtra) : max_extra_(max_extra) {}

    const std::vector<FamilyInstance>& get(int d) {
        if (d < kFamilyMinDiameter || d > kFamilyMaxDiameter)
            throw std::invalid_argument("maximal_family: d must be in " + std::to_string(kFamilyMinDiameter) + ".." +
                                        std::to_string(kFamilyMaxDiameter));
        std::call_once(slot(d).once, [&] {
            auto res = extremal_search_detailed(d, max_extra_);
            if (res.truncated)
                throw std::runtime_error("maximal_family: search truncated at max_extra for d = " + std::to_string(d));
            std::vector<FamilyInstance> out;
            for (const Graph& g : res.maximal) out.push_back(make_family_instance(g, d));
            slot(d).instances = std::move(out);
        });
        return slot(d).instances;
    }

    /// The process-wide catalog.
    static FamilyCatalog& shared() {
        static FamilyCatalog catalog;
        return catalog;
    }

private:
    struct Slot {
        std::once_flag once;
        std::vector<FamilyInstance> instances;
    };
    Slot& slot(int d) { return slots_[d]; }

    int max_extra_;
    std::array<Slot, kFamilyMaxDiameter + 1> slots_;
};

inline const std::vector<FamilyInstance>& maximal_family(int d) { return FamilyCatalog::shared().get(d); }

}  // namespace gspec

#endif  // GSPEC_FAMILIES_HPP
