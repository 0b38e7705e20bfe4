#ifndef GSPEC_CLAIMS_HPP
#define GSPEC_CLAIMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspec/exact_linalg.hpp"
#include "gspec/extremal.hpp"
#include "gspec/graph.hpp"

namespace gspec {

/// One spine configuration P + (attached vertices) and its multiplicity at -1.
struct ClaimTableRow {
    std::string configuration;
    int computed_m = 0;
    /// Value the attachment analysis gives for this configuration, if it gives one.
    std::optional<int> cited_m;
    /// Value implied by the statement being proved, where it differs from the
    /// reading of its proof.
    std::optional<int> statement_expected;
    std::string rationale;

    bool agree() const { return !cited_m || *cited_m == computed_m; }
    bool statement_conflict() const { return statement_expected && statement_expected != cited_m; }
};

namespace detail {

// A vertex hung on the spine: 1-based spine neighbours and 0-based indices of
// earlier attached vertices.
struct Hang {
    std::vector<int> spine;
    std::vector<int> extra;
};

// P_{d+1} plus the given vertices, or nothing if the spine stops being a
// diametral path.
inline std::optional<Graph> hang_on_spine(int d, const std::vector<Hang>& hangs) {
    Graph g = path_graph(d + 1);
    for (const Hang& h : hangs) {
        VertexSet s;
        for (int p : h.spine) {
            if (p < 1 || p > d + 1) return std::nullopt;
            s = s.with(p - 1);
        }
        for (int e : h.extra) s = s.with(d + 1 + e);
        g = g.with_vertex(s);
    }
    if (distance(g, 0, d) != d || diameter(g) != d) return std::nullopt;
    return g;
}

class TableBuilder {
public:
    explicit TableBuilder(int d) : d_(d) {}

    void add(const std::string& what, const std::vector<Hang>& hangs, std::optional<int> expected,
             std::string rationale, std::optional<int> statement = std::nullopt) {
        const auto g = hang_on_spine(d_, hangs);
        if (!g) return;
        ClaimTableRow r;
        r.configuration = "d=" + std::to_string(d_) + ", " + what;
        r.computed_m = multiplicity(*g, -1);
        r.cited_m = expected;
        r.statement_expected = statement;
        r.rationale = std::move(rationale);
        rows_.push_back(std::move(r));
    }

    std::vector<ClaimTableRow> take() { return std::move(rows_); }

private:
    int d_;
    std::vector<ClaimTableRow> rows_;
};

inline std::string at(const char* name, int p) { return std::string(name) + "~v" + std::to_string(p); }
inline std::string at2(const char* name, int p) {
    return std::string(name) + "~v" + std::to_string(p) + ",v" + std::to_string(p + 1);
}
inline int mod3(int x) { return ((x % 3) + 3) % 3; }

inline void rows_d_mod3_2(int d, TableBuilder& t) {
    for (int i = 2; i <= d; ++i)
        t.add("N1 " + at("x", i), {{{i}, {}}}, 0, "single spine neighbour leaves m(P+x) = 0");
    for (int i = 1; i + 2 <= d + 1; ++i)
        t.add("gap u~v" + std::to_string(i) + ",v" + std::to_string(i + 2), {{{i, i + 2}, {}}}, 0,
              "neighbours two apart on the spine give m(P+u) = 0");
    for (int m = 1; m <= d; ++m) {
        const int r = mod3(m);
        t.add("N2 at m=" + std::to_string(m), {{{m, m + 1}, {}}}, r == 0 ? 0 : 1,
              r == 0 ? "strip to P_2 minus a vertex: m(P+u) = 0" : "m(P+u) = 1 for m = 1, 2 mod 3",
              r == 2 ? 0 : 1);
    }
    for (int m = 1; m <= d; ++m) {
        for (int h = m + 1; h <= d; ++h) {
            const int rm = mod3(m);
            const int rh = mod3(h);
            if (rm == 0 || rh == 0) continue;
            const std::string base = at2("u", m) + ", " + at2("v", h);
            if (rm == 1 && h == m + 1)
                t.add(base + ", u~v", {{{m, m + 1}, {}}, {{h, h + 1}, {0}}}, 1, "adjacent pair, m = 1 mod 3");
            if (rm == 2 && h == m + 2)
                t.add(base + ", u~v", {{{m, m + 1}, {}}, {{h, h + 1}, {0}}}, 0, "adjacent pair, m = 2 mod 3");
            const int expected = (rm == 2 && rh == 1) ? 0 : 2;
            t.add(base, {{{m, m + 1}, {}}, {{h, h + 1}, {}}}, expected,
                  "non-adjacent pair with residues " + std::to_string(rm) + "," + std::to_string(rh));
        }
    }
}

inline void rows_d_mod3_0(int d, TableBuilder& t) {
    for (int i = 2; i <= d; ++i)
        t.add("N1 " + at("x", i), {{{i}, {}}}, mod3(i) == 1 ? 1 : 0, "single spine neighbour, position mod 3");
    for (int m = 1; m <= d + 1; m += 3) {
        for (int h = m + 3; h <= d + 1; h += 3) {
            const std::string base = "N1 " + at("x", m) + ", " + at("y", h);
            t.add(base, {{{m}, {}}, {{h}, {}}}, 0, "non-adjacent pair strips to P_3");
            t.add(base + ", x~y", {{{m}, {}}, {{h}, {0}}}, 2, "adjacent pair closes a C_6");
        }
    }
    for (int i = 1; i + 2 <= d + 1; ++i)
        t.add("gap u~v" + std::to_string(i) + ",v" + std::to_string(i + 2), {{{i, i + 2}, {}}}, 0,
              "neighbours two apart, as in the d = 2 mod 3 case");
    for (int m = 1; m <= d; ++m)
        t.add("N2 at m=" + std::to_string(m), {{{m, m + 1}, {}}}, mod3(m) == 2 ? 0 : 1,
              mod3(m) == 2 ? "m = 2 mod 3 gives m(P+u) = 0" : "strips to P_2");
    for (int a = 1; 3 * a + 1 <= d; ++a) {
        for (int b = 0; 3 * b + 2 <= d + 1; ++b) {
            const std::string base = at2("u", 3 * a) + ", " + at2("v", 3 * b + 1);
            if (b >= a) t.add(base, {{{3 * a, 3 * a + 1}, {}}, {{3 * b + 1, 3 * b + 2}, {}}}, 0, "non-adjacent, v after u");
            if (b == a - 1)
                t.add(base + ", u~v", {{{3 * a, 3 * a + 1}, {}}, {{3 * b + 1, 3 * b + 2}, {0}}}, 0, "adjacent, v before u");
        }
    }
    for (int i = 1; i <= d + 1; i += 3) {
        for (int j = 1; j <= d; ++j) {
            if (mod3(j) == 2) continue;
            const std::string base = "N1 " + at("x", i) + ", " + at2("u", j);
            if (j > i) t.add(base, {{{i}, {}}, {{j, j + 1}, {}}}, mod3(j) == 1 ? 0 : 2, "x before u, not adjacent");
            if (j < i - 1) t.add(base, {{{i}, {}}, {{j, j + 1}, {}}}, mod3(j) == 1 ? 2 : 0, "mirror: u before x, not adjacent");
            if (j == i) t.add(base + ", x~u", {{{i}, {}}, {{j, j + 1}, {0}}}, 2, "x~u over the same spine vertex closes a C_3");
            if (j == i + 2) t.add(base + ", x~u", {{{i}, {}}, {{j, j + 1}, {0}}}, 0, "x~u two positions later");
            if (j == i - 1) t.add(base + ", x~u", {{{i}, {}}, {{j, j + 1}, {0}}}, 2, "mirror: x~u closing a C_3");
            if (j == i - 3) t.add(base + ", x~u", {{{i}, {}}, {{j, j + 1}, {0}}}, 0, "mirror: x~u two positions earlier");
        }
    }
    for (int i = 1; i + 3 <= d + 1; i += 3) {
        // x, y adjacent over distance three; u between x and v_i, v_{i+1}; v between y and v_{i+2}, v_{i+3}
        t.add("N1 " + at("x", i) + ", " + at("y", i + 3) + ", x~y, " + at2("u", i) + ", u~x, " + at2("v", i + 2) +
                  ", v~y",
              {{{i}, {}}, {{i + 3}, {0}}, {{i, i + 1}, {0}}, {{i + 2, i + 3}, {1}}}, 4,
              "two C_3 on a C_6: 2 + m(C_6)");
    }
}

inline void rows_d_mod3_1(int d, TableBuilder& t) {
    for (int i = 3; i <= d; i += 3)
        t.add("chain " + at("x", i) + ", y~x, z~y", {{{i}, {}}, {{}, {0}}, {{}, {1}}}, 1,
              "a vertex at distance three strips back to P");
    for (int i = 2; i <= d; ++i)
        t.add("N1 " + at("x", i), {{{i}, {}}}, mod3(i) == 0 ? 1 : 0, "single spine neighbour, position mod 3");
    for (int a = 3; a <= d; a += 3) {
        t.add("N1 " + at("x", a) + ", " + at("y", a), {{{a}, {}}, {{a}, {}}}, 1, "two non-adjacent vertices on one spine vertex");
        for (int b = a + 3; b <= d; b += 3)
            t.add("N1 " + at("x", a) + ", " + at("y", b), {{{a}, {}}, {{b}, {}}}, 1, "non-adjacent pair strips to P_2");
    }
    for (int m = 1; m <= d; ++m)
        t.add("N2 at m=" + std::to_string(m), {{{m, m + 1}, {}}}, mod3(m) == 1 ? 2 : 0,
              mod3(m) == 1 ? "strips to C_3" : "m = 0, 2 mod 3 gives m(P+u) = 0");
    for (int i = 1; i + 2 <= d + 1; ++i)
        t.add("gap u~v" + std::to_string(i) + ",v" + std::to_string(i + 2), {{{i, i + 2}, {}}}, std::nullopt,
              "not covered by the attachment analysis for this residue");
    for (int a = 0; 3 * a + 5 <= d + 1; ++a) {
        const int p = 3 * a + 1;
        const int q = p + 3;
        t.add(at2("u", p) + ", " + at2("v", q) + ", u~v", {{{p, p + 1}, {}}, {{q, q + 1}, {0}}}, 1,
              "adjacent N2 pair one period apart");
    }
    for (int c = 1; 3 * c <= d; ++c) {
        for (int b = 0; 3 * b + 2 <= d + 1; ++b) {
            const int i = 3 * c;
            const int j = 3 * b + 1;
            t.add("N1 " + at("x", i) + ", " + at2("u", j) + ", x~u", {{{i}, {}}, {{j, j + 1}, {0}}}, 1,
                  "N1 vertex adjacent to an N2 vertex");
        }
    }
    for (int i = 3; i <= d; i += 3) {
        t.add("N1 " + at("x", i) + ", z~x", {{{i}, {}}, {{}, {0}}}, 2, "distance-two vertex on an N1 vertex");
        t.add("N1 " + at("x", i) + ", z~x, w~x", {{{i}, {}}, {{}, {0}}, {{}, {0}}}, 1,
              "two non-adjacent distance-two vertices on one N1 vertex");
    }
    for (int m = 1; m <= d; m += 3)
        t.add(at2("u", m) + ", z~u", {{{m, m + 1}, {}}, {{}, {0}}}, 1, "distance-two vertex on an N2 vertex");
    for (int i = 3; i + 3 <= d; i += 3) {
        const std::string base = "N1 " + at("x", i) + ", " + at("y", i + 3) + ", x~y";
        t.add(base + ", z~x", {{{i}, {}}, {{i + 3}, {0}}, {{}, {0}}}, 1, "distance-two vertex on x only");
        t.add(base + ", z~x,y", {{{i}, {}}, {{i + 3}, {0}}, {{}, {0, 1}}}, 3, "distance-two vertex on both: 1 + m(C_3)");
        t.add(base + ", z~x,y, w~x,y", {{{i}, {}}, {{i + 3}, {0}}, {{}, {0, 1}}, {{}, {0, 1}}}, 2,
              "two non-adjacent distance-two vertices on both");
    }
}

}  // namespace detail

inline constexpr int kClaimTableMinDiameter = 2;
inline constexpr int kClaimTableMaxDiameter = 8;

/// Exact multiplicities of the spine configurations used in the attachment
/// analysis for diameter d, each paired with the value that analysis gives.
/// Configurations that shorten the spine are left out.
inline std::vector<ClaimTableRow> attachment_table(int d) {
    if (d < kClaimTableMinDiameter || d > kClaimTableMaxDiameter)
        throw std::invalid_argument("attachment_table: d must be in " + std::to_string(kClaimTableMinDiameter) + ".." +
                                    std::to_string(kClaimTableMaxDiameter));
    detail::TableBuilder t(d);
    switch (d % 3) {
        case 2: detail::rows_d_mod3_2(d, t); break;
        case 0: detail::rows_d_mod3_0(d, t); break;
        default: detail::rows_d_mod3_1(d, t); break;
    }
    return t.take();
}

inline nlohmann::ordered_json to_json(const ClaimTableRow& r) {
    nlohmann::ordered_json j;
    j["configuration"] = r.configuration;
    j["computed_m"] = r.computed_m;
    j["cited_m"] = r.cited_m ? nlohmann::ordered_json(*r.cited_m) : nlohmann::ordered_json(nullptr);
    j["agree"] = r.agree();
    if (r.statement_expected) {
        j["statement_expected"] = *r.statement_expected;
        j["statement_conflict"] = r.statement_conflict();
    }
    j["rationale"] = r.rationale;
    return j;
}

/// CSV line with columns configuration, computed_m, cited_m, agree.
inline std::string to_csv(const ClaimTableRow& r) {
    std::string cfg = "\"";
    for (char c : r.configuration) {
        if (c == '"') cfg += '"';
        cfg += c;
    }
    cfg += '"';
    return cfg + "," + std::to_string(r.computed_m) + "," + (r.cited_m ? std::to_string(*r.cited_m) : "") +
           "," + (r.agree() ? "true" : "false");
}

inline constexpr const char* kClaimCsvHeader = "configuration,computed_m,cited_m,agree";

}  // namespace gspec

#endif  // GSPEC_CLAIMS_HPP
