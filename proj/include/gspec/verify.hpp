#ifndef GSPEC_VERIFY_HPP
#define GSPEC_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspec/canonical.hpp"
#include "gspec/classify.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/exact_linalg.hpp"
#include "gspec/extremal.hpp"
#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/parallel.hpp"
#include "gspec/reductions.hpp"

namespace gspec {

inline constexpr int kVerifyMaxOrder = 8;
inline constexpr int kPathRuleMaxLength = 300;

/// Outcome of one property over a corpus.
struct CheckTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    /// graph6 of every violating graph, sorted.
    std::vector<std::string> violating;
};

struct LemmaSuiteReport {
    int n_max = 0;
    std::size_t graphs = 0;
    std::vector<CheckTally> checks;

    std::size_t total_violations() const {
        std::size_t t = 0;
        for (const auto& c : checks) t += c.violations;
        return t;
    }
    bool ok() const { return total_violations() == 0; }
    const CheckTally& check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("no check named " + name);
    }
};

namespace detail {

enum LemmaCheck : std::size_t {
    kDualOracle,
    kInterlacing,
    kCharPolyTraces,
    kRankMonotonicity,
    kRhoClassCliques,
    kTwinDrop,
    kDiameterPreservation,
    kEqualityEquivalence,
    kPendantStrip,
    kPropagationClosed,
    kPropagationOpen,
    kDomination,
    kHereditaryEquality,
    kUpperBound,
    kLemmaCheckCount
};

inline constexpr std::array<const char*, kLemmaCheckCount> kLemmaCheckNames = {
    "dual_oracle",          "interlacing",          "char_poly_traces",   "rank_monotonicity", "rho_class_cliques",
    "twin_drop",            "diameter_preservation", "equality_equivalence", "pendant_p3_strip", "propagation_closed",
    "propagation_open",     "domination",           "hereditary_equality", "upper_bound",
};

struct GraphTally {
    std::array<std::size_t, kLemmaCheckCount> checked{};
    std::array<bool, kLemmaCheckCount> violated{};

    void record(LemmaCheck c, bool holds) {
        ++checked[c];
        if (!holds) violated[c] = true;
    }
};

inline int triangle_count(const Graph& g) {
    int t = 0;
    for (auto [u, v] : g.edges()) t += (g.neighbors(u) & g.neighbors(v)).size();
    return t / 3;
}

// Subsets H of V(g) that contain the vertex set of some diametral path.
inline std::vector<VertexSet> path_supersets(const Graph& g) {
    std::set<std::uint64_t> spines;
    for (const auto& p : all_diameter_paths(g)) spines.insert(p.as_set().bits());
    std::set<std::uint64_t> out;
    for (std::uint64_t s : spines) {
        const VertexSet rest = g.vertices() - VertexSet(s);
        const std::vector<int> free = rest.to_vector();
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free.size()); ++sub) {
            VertexSet h(s);
            for (std::size_t k = 0; k < free.size(); ++k)
                if (sub >> k & 1) h = h.with(free[k]);
            out.insert(h.bits());
        }
    }
    std::vector<VertexSet> res;
    for (std::uint64_t b : out) res.emplace_back(b);
    return res;
}

inline GraphTally check_lemmas(const Graph& g) {
    GraphTally t;
    const int n = g.order();
    const bool complete = g.edge_count() == n * (n - 1) / 2;

    const CharPoly cp = char_poly(g);
    for (int mu = -2; mu <= 2; ++mu) {
        const int m = multiplicity(g, mu);
        t.record(kDualOracle, m == multiplicity_from_charpoly(cp, mu));
        for (int v = 0; v < n; ++v) {
            const int mv = multiplicity(remove_vertices(g, VertexSet{v}), mu);
            t.record(kInterlacing, m - mv <= 1 && mv - m <= 1);
        }
    }

    const auto& c = cp.coeffs;
    bool traces = c[n] == 1;
    if (n >= 1) traces = traces && c[n - 1] == 0;
    if (n >= 2) traces = traces && c[n - 2] == -g.edge_count();
    if (n >= 3) traces = traces && c[n - 3] == -2 * triangle_count(g);
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i)) a(i, j) = 1;
    traces = traces && c[0] == (n % 2 == 0 ? determinant(a) : BigInt(-determinant(a)));
    t.record(kCharPolyTraces, traces);

    const int m = multiplicity(g, -1);
    const int rank_g = n - m;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const Graph h = induced_subgraph(g, VertexSet(s));
        t.record(kRankMonotonicity, rank_a_plus_i(h) <= rank_g);
    }

    const RhoPartition rho = rho_partition(g);
    for (VertexSet cls : rho.classes) {
        bool clique = true;
        for (int u : cls)
            if (!(cls.without(u)).is_subset_of(g.neighbors(u))) clique = false;
        t.record(kRhoClassCliques, clique);
        for (int u : cls)
            for (int v : cls)
                if (u < v) {
                    t.record(kTwinDrop, m == multiplicity(remove_vertices(g, VertexSet{u}), -1) + 1);
                    t.record(kTwinDrop, m == multiplicity(remove_vertices(g, VertexSet{v}), -1) + 1);
                }
    }

    for (const PendantP3& p : all_pendant_p3(g))
        if (n >= 4) t.record(kPendantStrip, m == multiplicity(strip_pendant_p3(g, p), -1));

    if (!is_connected(g)) return t;
    const int d = diameter(g);
    const bool equality = m == n - d - 1;
    if (!complete) {
        const Graph gc = canonical_graph(g);
        const int dc = diameter(gc);
        t.record(kDiameterPreservation, dc == d && dc >= 1);
        const bool eq_c = multiplicity(gc, -1) == gc.order() - dc - 1;
        t.record(kEqualityEquivalence, equality == eq_c);
    }

    const bool path_avoids = spine_multiplicity(d) == 0;
    if (path_avoids) t.record(kUpperBound, m <= n - d - 1);
    if (equality && path_avoids) {
        for (const auto& p : all_diameter_paths(g)) t.record(kDomination, is_dominating_set(g, p.as_set()));
    }

    for (VertexSet hs : path_supersets(g)) {
        const Graph h = induced_subgraph(g, hs);
        if (equality && path_avoids) t.record(kHereditaryEquality, multiplicity(h, -1) == hs.size() - d - 1);
        if (rank_a_plus_i(h) < rank_g - 1) continue;
        const VertexSet outside = g.vertices() - hs;
        for (int v : outside) {
            const VertexSet nv = g.neighbors(v) & hs;
            for (int x : nv) {
                if (nv == (g.closed_neighborhood(x) & hs))
                    t.record(kPropagationClosed, g.closed_neighborhood(v) == g.closed_neighborhood(x));
            }
            for (int u : g.neighbors(v) & outside) {
                if (u < v && nv == (g.neighbors(u) & hs))
                    t.record(kPropagationOpen, g.closed_neighborhood(v) == g.closed_neighborhood(u));
            }
        }
    }
    return t;
}

}  // namespace detail

/// Runs every lemma-level property over all connected graphs of order at most
/// n_max, plus the path rule on P_1..P_300.
inline LemmaSuiteReport verify_lemma_suite(int n_max, int jobs = 1) {
    if (n_max < 1 || n_max > kVerifyMaxOrder)
        throw std::invalid_argument("verify_lemma_suite: n_max must be in 1.." + std::to_string(kVerifyMaxOrder));
    const std::vector<Graph> graphs = enumerate_connected(n_max);
    const auto tallies = parallel_map(graphs, jobs, [](const Graph& g) { return detail::check_lemmas(g); });

    LemmaSuiteReport rep;
    rep.n_max = n_max;
    rep.graphs = graphs.size();
    CheckTally path{"path_rule"};
    for (int k = 1; k <= kPathRuleMaxLength; ++k) {
        ++path.checked;
        if (path_multiplicity(k, -1) != (k % 3 == 2 ? 1 : 0)) {
            ++path.violations;
            path.violating.push_back("P_" + std::to_string(k));
        }
    }
    rep.checks.push_back(std::move(path));
    for (std::size_t c = 0; c < detail::kLemmaCheckCount; ++c) {
        CheckTally ct{detail::kLemmaCheckNames[c]};
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            ct.checked += tallies[i].checked[c];
            if (tallies[i].violated[c]) {
                ++ct.violations;
                ct.violating.push_back(write_graph6(graphs[i]));
            }
        }
        std::sort(ct.violating.begin(), ct.violating.end());
        rep.checks.push_back(std::move(ct));
    }
    return rep;
}

inline nlohmann::ordered_json to_json(const CheckTally& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["checked"] = c.checked;
    j["violations"] = c.violations;
    j["violating"] = c.violating;
    return j;
}

inline nlohmann::ordered_json to_json(const LemmaSuiteReport& r) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["graphs"] = r.graphs;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    j["violations"] = r.total_violations();
    j["ok"] = r.ok();
    return j;
}

/// Counts for the graphs of one order n whose diameter has residue d_mod3.
struct TheoremBucket {
    int n = 0;
    int d_mod3 = 0;
    std::size_t graphs = 0;
    std::size_t equality = 0;
    std::size_t membership = 0;
};

struct TheoremReport {
    int n_max = 0;
    std::size_t graphs = 0;
    /// Complete graphs, which have no diameter path of length 2 or more.
    std::size_t complete = 0;
    std::vector<TheoremBucket> buckets;
    CheckTally upper_bound{"upper_bound"};
    CheckTally equivalence{"equality_iff_membership"};
    CheckTally single_attachment{"n1_nonempty_strict"};
    /// Per-graph reports in enumeration order, complete graphs included.
    std::vector<ClassificationReport> reports;

    bool ok() const { return upper_bound.violations + equivalence.violations + single_attachment.violations == 0; }
};

namespace detail {

struct TheoremVerdict {
    ClassificationReport report;
    bool complete = false;
    bool upper_bound_checked = false;
    bool upper_bound_holds = true;
    bool strict_checked = false;
    bool strict_holds = true;
};

inline TheoremVerdict judge(const Graph& g, FamilyCatalog& catalog) {
    TheoremVerdict v;
    v.report = classify(g, catalog);
    const auto& r = v.report;
    v.complete = r.d <= 1;
    if (v.complete) return v;
    if (r.m_path == 0) {
        v.upper_bound_checked = true;
        v.upper_bound_holds = r.m <= r.n - r.d - 1;
    }
    if (r.d % 3 == 1 && r.equality) {
        const Graph c = canonical_graph(g);
        v.strict_checked = true;
        v.strict_holds = c.order() > r.d + 1 && has_single_attachment(c);
    }
    return v;
}

}  // namespace detail

/// Classifies every connected graph of order at most n_max and checks the
/// upper bound, equality iff membership, and for d = 1 (mod 3) the presence
/// of a single-neighbour vertex on the canonical graph. Ordering of every
/// list in the report is independent of `jobs`.
inline TheoremReport verify_theorem(int n_max, int jobs = 1, FamilyCatalog& catalog = FamilyCatalog::shared()) {
    if (n_max < 1 || n_max > kVerifyMaxOrder)
        throw std::invalid_argument("verify_theorem: n_max must be in 1.." + std::to_string(kVerifyMaxOrder));
    const std::vector<Graph> graphs = enumerate_connected(n_max);
    // fill the family cache up front so workers only read it
    for (int d = kFamilyMinDiameter; d <= std::min(n_max - 1, kFamilyMaxDiameter); ++d) catalog.get(d);
    const auto verdicts = parallel_map(graphs, jobs, [&](const Graph& g) { return detail::judge(g, catalog); });

    TheoremReport rep;
    rep.n_max = n_max;
    rep.graphs = graphs.size();
    std::map<std::pair<int, int>, TheoremBucket> buckets;
    auto flag = [](CheckTally& t, bool checked, bool holds, const std::string& g6) {
        if (!checked) return;
        ++t.checked;
        if (!holds) {
            ++t.violations;
            t.violating.push_back(g6);
        }
    };
    for (const auto& v : verdicts) {
        const auto& r = v.report;
        if (v.complete) {
            ++rep.complete;
            continue;
        }
        auto& b = buckets[{r.n, r.d_mod3}];
        b.n = r.n;
        b.d_mod3 = r.d_mod3;
        ++b.graphs;
        b.equality += r.equality;
        b.membership += r.membership;
        flag(rep.upper_bound, v.upper_bound_checked, v.upper_bound_holds, r.graph6);
        flag(rep.equivalence, true, r.equality == r.membership, r.graph6);
        flag(rep.single_attachment, v.strict_checked, v.strict_holds, r.graph6);
    }
    for (auto& [k, b] : buckets) rep.buckets.push_back(b);
    rep.reports.reserve(verdicts.size());
    for (const auto& v : verdicts) rep.reports.push_back(v.report);
    for (CheckTally* t : {&rep.upper_bound, &rep.equivalence, &rep.single_attachment})
        std::sort(t->violating.begin(), t->violating.end());
    return rep;
}

inline nlohmann::ordered_json to_json(const TheoremReport& r) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["graphs"] = r.graphs;
    j["complete"] = r.complete;
    j["buckets"] = nlohmann::ordered_json::array();
    for (const auto& b : r.buckets)
        j["buckets"].push_back({{"n", b.n}, {"d_mod3", b.d_mod3}, {"graphs", b.graphs}, {"equality", b.equality},
                                {"membership", b.membership}});
    j["checks"] = {to_json(r.upper_bound), to_json(r.equivalence), to_json(r.single_attachment)};
    j["ok"] = r.ok();
    return j;
}

}  // namespace gspec

#endif  // GSPEC_VERIFY_HPP
