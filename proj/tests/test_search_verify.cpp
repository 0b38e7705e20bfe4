#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gspec/canonical.hpp"
#include "gspec/claims.hpp"
#include "gspec/classify.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/extremal.hpp"
#include "gspec/graph6.hpp"
#include "gspec/parallel.hpp"
#include "gspec/verify.hpp"
#include "oracles.hpp"

using namespace gspec;

namespace {

Graph bowtie() { return build_graph(5, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}); }

const ClaimTableRow& row(const std::vector<ClaimTableRow>& rows, const std::string& configuration) {
    for (const auto& r : rows)
        if (r.configuration == configuration) return r;
    throw std::out_of_range("no row " + configuration);
}

}  // namespace

TEST(Enumerate, CountsMatchBurnsideCounting) {
    const auto by_order = enumerate_connected_by_order(8);
    const auto expected = oracle::connected_counts(8);
    ASSERT_EQ(by_order.size(), 8u);
    const std::size_t published[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(by_order[n - 1].size(), published[n - 1]);
        EXPECT_EQ(oracle::Big(by_order[n - 1].size()), expected[n]) << "n=" << n;
    }
}

TEST(Enumerate, ClassesMatchBruteForceUpToSix) {
    const auto by_order = enumerate_connected_by_order(6);
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> codes;
        for (const Graph& g : by_order[n - 1]) {
            ASSERT_EQ(g.order(), n);
            ASSERT_TRUE(oracle::bfs_connected(g));
            codes.insert(oracle::brute_canonical_code(g));
        }
        EXPECT_EQ(codes.size(), by_order[n - 1].size()) << "duplicate class at n=" << n;
        EXPECT_EQ(codes, oracle::brute_connected_classes(n)) << "n=" << n;
    }
}

TEST(Enumerate, StreamIsSortedAndStable) {
    const auto a = enumerate_connected(7);
    const auto b = enumerate_connected(7);
    ASSERT_EQ(a.size(), 1u + 1 + 2 + 6 + 21 + 112 + 853);
    EXPECT_EQ(a, b);
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i - 1].order() != a[i].order()) {
            EXPECT_LT(a[i - 1].order(), a[i].order());
            continue;
        }
        EXPECT_LT(iso_key(a[i - 1]), iso_key(a[i]));
    }
    EXPECT_THROW(enumerate_connected(kEnumerateMaxOrder + 1), std::invalid_argument);
}

TEST(Classify, Examples) {
    const auto bt = classify(bowtie());
    EXPECT_EQ(bt.n, 5);
    EXPECT_EQ(bt.d, 2);
    EXPECT_EQ(bt.m, 2);
    EXPECT_TRUE(bt.equality);
    EXPECT_EQ(bt.canonical_n, 3);
    EXPECT_TRUE(bt.membership);
    EXPECT_EQ(bt.discrepancy, std::nullopt);

    const auto star = classify(complete_bipartite_graph(1, 3));
    EXPECT_EQ(star.n, 4);
    EXPECT_EQ(star.d, 2);
    EXPECT_EQ(star.m, 0);
    EXPECT_FALSE(star.equality);

    const auto p5 = classify(path_graph(5));
    EXPECT_EQ(p5.d, 4);
    EXPECT_EQ(p5.m, 1);
    EXPECT_EQ(p5.m_path, 1);
    EXPECT_FALSE(p5.equality);
    EXPECT_FALSE(p5.membership);
    EXPECT_EQ(p5.discrepancy, "m = n-d");

    const auto px = classify(path_graph(5).with_vertex(VertexSet{2}));
    EXPECT_EQ(px.n, 6);
    EXPECT_EQ(px.d, 4);
    EXPECT_EQ(px.m, 1);
    EXPECT_TRUE(px.equality);
    EXPECT_TRUE(px.membership);
    EXPECT_EQ(px.discrepancy, std::nullopt);
}

TEST(Classify, CompleteAndDisconnectedGraphs) {
    const auto k4 = classify(complete_graph(4));
    EXPECT_EQ(k4.d, 1);
    EXPECT_FALSE(k4.membership);
    ASSERT_TRUE(k4.discrepancy);
    EXPECT_NE(k4.discrepancy->find("complete graph"), std::string::npos);
    EXPECT_THROW(classify(build_graph(2, {})), std::invalid_argument);
}

TEST(Classify, JsonCarriesEveryField) {
    const auto j = to_json(classify(bowtie()));
    EXPECT_EQ(j["graph6"], write_graph6(bowtie()));
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["m"], 2);
    EXPECT_EQ(j["equality"], true);
    EXPECT_EQ(j["membership"], true);
    EXPECT_EQ(j["canonical_n"], 3);
    EXPECT_EQ(j["path_case"]["d_mod3"], 2);
    EXPECT_EQ(j["path_case"]["m_path"], 0);
    EXPECT_TRUE(j["discrepancy"].is_null());
}

TEST(Classify, MultiplicityAgreesWithRationalOracle) {
    for (const Graph& g : enumerate_connected(6)) {
        const auto r = classify(g);
        ASSERT_EQ(r.m, oracle::rational_multiplicity(g, -1));
        ASSERT_EQ(r.d, oracle::fw_diameter(g));
    }
}

TEST(AttachmentTable, Examples) {
    const auto t5 = attachment_table(5);
    const auto& first = row(t5, "d=5, N2 at m=1");
    EXPECT_EQ(first.computed_m, 1);
    EXPECT_TRUE(first.agree());
    const auto& third = row(t5, "d=5, N2 at m=3");
    EXPECT_EQ(third.computed_m, 0);
    EXPECT_TRUE(third.agree());

    const auto& cycle = row(attachment_table(6), "d=6, N1 x~v4, y~v7, x~y");
    EXPECT_EQ(cycle.computed_m, 2);
    EXPECT_EQ(cycle.cited_m, 2);
}

TEST(AttachmentTable, RowsMatchRebuiltGraphs) {
    // the same configuration assembled by hand and measured by the rational oracle
    const Graph n2 = path_graph(6).with_vertex(VertexSet{0, 1});
    EXPECT_EQ(oracle::rational_multiplicity(n2, -1), row(attachment_table(5), "d=5, N2 at m=1").computed_m);
    Graph c6 = path_graph(7).with_vertex(VertexSet{3});
    c6 = c6.with_vertex(VertexSet{6, 7});
    EXPECT_EQ(oracle::rational_multiplicity(c6, -1), 2);
}

TEST(AttachmentTable, ResidueStatementConflictIsFlagged) {
    // N2 at a position = 2 mod 3: the statement allows only residues 0 and 1,
    // the proof finds the configuration satisfies the condition
    const auto& r = row(attachment_table(5), "d=5, N2 at m=2");
    EXPECT_EQ(r.computed_m, 1);
    EXPECT_EQ(r.cited_m, 1);
    EXPECT_EQ(r.statement_expected, 0);
    EXPECT_TRUE(r.statement_conflict());
    EXPECT_TRUE(r.agree());
}

TEST(AttachmentTable, OnlyAdjacentResidueOnePairsDisagree) {
    // u on v_m, v_{m+1} and v on v_{m+1}, v_{m+2} with u ~ v is a fan on four
    // spine vertices; its -1 eigenspace is trivial
    const Graph fan = path_graph(6).with_vertex(VertexSet{0, 1}).with_vertex(VertexSet{1, 2, 6});
    EXPECT_EQ(oracle::rational_multiplicity(fan, -1), 0);
    std::vector<std::string> disagree;
    for (int d = kClaimTableMinDiameter; d <= kClaimTableMaxDiameter; ++d)
        for (const auto& r : attachment_table(d)) {
            ASSERT_FALSE(r.configuration.empty());
            if (!r.agree()) disagree.push_back(r.configuration);
        }
    const std::vector<std::string> expected = {
        "d=2, u~v1,v2, v~v2,v3, u~v", "d=5, u~v1,v2, v~v2,v3, u~v", "d=5, u~v4,v5, v~v5,v6, u~v",
        "d=8, u~v1,v2, v~v2,v3, u~v", "d=8, u~v4,v5, v~v5,v6, u~v", "d=8, u~v7,v8, v~v8,v9, u~v",
    };
    EXPECT_EQ(disagree, expected);
}

TEST(AttachmentTable, RangeChecked) {
    EXPECT_THROW(attachment_table(1), std::invalid_argument);
    EXPECT_THROW(attachment_table(9), std::invalid_argument);
    EXPECT_EQ(to_csv(row(attachment_table(5), "d=5, N2 at m=3")), "\"d=5, N2 at m=3\",0,0,true");
}

TEST(ExtremalSearch, DiameterTwo) {
    const auto res = extremal_search(2, kExtremalMaxExtra);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0], path_graph(3));
}

TEST(ExtremalSearch, DiameterFiveAddsOneToMultiplicityPerVertex) {
    const auto res = extremal_search_detailed(5, 4);
    EXPECT_FALSE(res.truncated);
    ASSERT_FALSE(res.maximal.empty());
    for (const Graph& g : res.maximal) {
        EXPECT_EQ(oracle::rational_multiplicity(g, -1), g.order() - 6);
        EXPECT_EQ(oracle::fw_diameter(g), 5);
    }
}

TEST(ExtremalSearch, DiameterFourHasAnInstanceWithoutSingleAttachments) {
    const auto res = extremal_search(4, 5);
    ASSERT_FALSE(res.empty());
    bool found = false;
    for (const Graph& g : res) {
        EXPECT_EQ(oracle::rational_multiplicity(g, -1), g.order() - 5);
        PathWitness spine;
        for (int i = 0; i <= 4; ++i) spine.vertices.push_back(i);
        found |= single_attachments(g, spine).empty();
    }
    EXPECT_TRUE(found);
}

TEST(LemmaSuite, NoViolationsUpToSix) {
    const auto rep = verify_lemma_suite(6);
    EXPECT_EQ(rep.graphs, 1u + 1 + 2 + 6 + 21 + 112);
    for (const auto& c : rep.checks) EXPECT_EQ(c.violations, 0u) << c.name;
    for (const char* name : {"twin_drop", "interlacing", "diameter_preservation", "path_rule"})
        EXPECT_GT(rep.check(name).checked, 0u) << name;
    EXPECT_TRUE(rep.ok());
    EXPECT_THROW(rep.check("nonexistent"), std::out_of_range);
}

TEST(LemmaSuite, JobsDoNotChangeTheReport) {
    EXPECT_EQ(to_json(verify_lemma_suite(5, 1)).dump(), to_json(verify_lemma_suite(5, 3)).dump());
}

TEST(Theorem, BowtieIsAnEqualityGraphOfOrderFive) {
    const auto rep = verify_theorem(5);
    bool seen = false;
    for (const auto& r : rep.reports)
        if (are_isomorphic(parse_graph6(r.graph6), bowtie())) {
            seen = true;
            EXPECT_TRUE(r.equality);
            EXPECT_TRUE(r.membership);
        }
    EXPECT_TRUE(seen);
    const auto it = std::find_if(rep.buckets.begin(), rep.buckets.end(),
                                 [](const TheoremBucket& b) { return b.n == 5 && b.d_mod3 == 2; });
    ASSERT_NE(it, rep.buckets.end());
    EXPECT_GE(it->equality, 1u);
    EXPECT_TRUE(rep.ok());
}

TEST(Theorem, OrderFourEqualityGraphsReduceToPaths) {
    const auto rep = verify_theorem(4);
    std::size_t equality = 0;
    for (const auto& r : rep.reports) {
        if (r.d <= 1 || !r.equality) continue;
        ++equality;
        const Graph c = canonical_graph(parse_graph6(r.graph6));
        EXPECT_TRUE(are_isomorphic(c, path_graph(c.order()))) << r.graph6;
        EXPECT_TRUE(r.membership);
    }
    // P3, P4, the paw and the diamond
    EXPECT_EQ(equality, 4u);
    EXPECT_EQ(rep.graphs, 1u + 1 + 2 + 6);
    EXPECT_EQ(rep.complete, 4u);
}

TEST(Theorem, UpToSevenBoundAndEquivalenceHold) {
    const auto rep = verify_theorem(7);
    EXPECT_EQ(rep.upper_bound.violations, 0u);
    EXPECT_GT(rep.upper_bound.checked, 0u);
    EXPECT_EQ(rep.equivalence.violations, 0u);
    // Every equality graph with d = 1 mod 3 and no single-neighbour vertex has
    // P5 plus one vertex on v_i, v_{i+2} as its canonical graph.
    const Graph gap = path_graph(5).with_vertex(VertexSet{1, 3});
    EXPECT_GT(rep.single_attachment.violations, 0u);
    for (const auto& g6 : rep.single_attachment.violating)
        EXPECT_TRUE(are_isomorphic(canonical_graph(parse_graph6(g6)), gap)) << g6;
}

TEST(Theorem, JobsDoNotChangeTheReport) {
    const auto a = verify_theorem(6, 1);
    const auto b = verify_theorem(6, 4);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(a.reports, b.reports);
}

TEST(ParallelMap, KeepsInputOrderAndRethrows) {
    std::vector<int> in(1000);
    for (int i = 0; i < 1000; ++i) in[i] = i;
    const auto out = parallel_map(in, 4, [](int x) { return x * x; });
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(out[i], i * i);
    EXPECT_THROW(parallel_map(in, 4,
                              [](int x) {
                                  if (x == 500) throw std::runtime_error("boom");
                                  return x;
                              }),
                 std::runtime_error);
}
