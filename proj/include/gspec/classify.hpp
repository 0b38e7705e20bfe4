#ifndef GSPEC_CLASSIFY_HPP
#define GSPEC_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspec/embedding.hpp"
#include "gspec/exact_linalg.hpp"
#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/reductions.hpp"

namespace gspec {

/// Per-graph verdict on the equality m(-1) = n - d - 1 and family membership.
struct ClassificationReport {
    std::string graph6;
    int n = 0;
    int d = 0;
    int m = 0;
    bool equality = false;
    int d_mod3 = 0;
    /// m_{P_{d+1}}(-1) for the diameter path.
    int m_path = 0;
    int canonical_n = 0;
    bool membership = false;
    std::optional<std::string> discrepancy;

    bool operator==(const ClassificationReport&) const = default;
};

/// Vertices off `path` with exactly one neighbour on it.
inline VertexSet single_attachments(const Graph& g, const PathWitness& path) {
    const VertexSet on = path.as_set();
    VertexSet out;
    for (int v : g.vertices() - on)
        if ((g.neighbors(v) & on).size() == 1) out = out.with(v);
    return out;
}

/// True iff some diametral path of g has a vertex with a single neighbour on it.
inline bool has_single_attachment(const Graph& g) {
    for (const PathWitness& q : all_diameter_paths(g))
        if (!single_attachments(g, q).empty()) return true;
    return false;
}

/// Membership of a C-canonical graph in the reconstructed families for its
/// diameter d: some diametral path Q of g maps onto a diametral path of a
/// maximal instance by an induced embedding of g. When d = 1 (mod 3) the
/// containment of the path must be strict, so the bare path is not a member.
inline bool family_membership(const Graph& canonical, FamilyCatalog& catalog) {
    const int d = diameter(canonical);
    if (d < kFamilyMinDiameter) return false;
    if (d % 3 == 1 && canonical.order() == d + 1) return false;
    const auto& family = catalog.get(d);
    for (const PathWitness& q : all_diameter_paths(canonical)) {
        for (const FamilyInstance& fi : family)
            for (const PathWitness& r : fi.diameter_paths)
                if (embeds_induced_along_path(canonical, q, fi.graph, r)) return true;
    }
    return false;
}

inline ClassificationReport classify(const Graph& g, FamilyCatalog& catalog = FamilyCatalog::shared()) {
    if (!is_connected(g)) throw std::invalid_argument("classify: graph is not connected");
    ClassificationReport r;
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.d = diameter(g);
    r.m = multiplicity(g, -1);
    r.equality = r.m == r.n - r.d - 1;
    r.d_mod3 = r.d % 3;
    r.m_path = spine_multiplicity(r.d);
    const Graph c = canonical_graph(g);
    r.canonical_n = c.order();

    std::vector<std::string> notes;
    if (r.d <= 1) {
        notes.emplace_back("complete graph");
    } else {
        r.membership = family_membership(c, catalog);
    }
    if (r.m_path == 0 && r.m > r.n - r.d - 1) notes.emplace_back("upper bound exceeded");
    if (r.m == r.n - r.d) notes.emplace_back("m = n-d");
    if (r.d >= 2 && r.equality && !r.membership) notes.emplace_back("equality without membership");
    if (r.d >= 2 && !r.equality && r.membership) notes.emplace_back("membership without equality");
    if (r.d % 3 == 1 && r.equality && !has_single_attachment(c)) notes.emplace_back("N1 empty");
    if (!notes.empty()) {
        std::string joined;
        for (const auto& s : notes) joined += (joined.empty() ? "" : "; ") + s;
        r.discrepancy = joined;
    }
    return r;
}

inline nlohmann::ordered_json to_json(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["d"] = r.d;
    j["m"] = r.m;
    j["equality"] = r.equality;
    j["membership"] = r.membership;
    j["canonical_n"] = r.canonical_n;
    j["path_case"] = {{"d_mod3", r.d_mod3}, {"m_path", r.m_path}};
    j["discrepancy"] = r.discrepancy ? nlohmann::ordered_json(*r.discrepancy) : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace gspec

#endif  // GSPEC_CLASSIFY_HPP
