#include <gtest/gtest.h>

#include "gspec/canonical.hpp"
#include "gspec/families.hpp"
#include "gspec/graph6.hpp"
#include "gspec/reductions.hpp"
#include "oracles.hpp"

using namespace gspec;

TEST(StandardGraph, Examples) {
    const Graph p5 = standard_graph(GraphKind::path, {5});
    EXPECT_EQ(p5.order(), 5);
    EXPECT_EQ(p5.edge_count(), 4);
    EXPECT_EQ(oracle::fw_diameter(p5), 4);

    const Graph star = standard_graph(GraphKind::complete_bipartite, {1, 3});
    EXPECT_EQ(star.edge_count(), 3);
    EXPECT_EQ(star.degree(0), 3);

    const Graph c6 = standard_graph(GraphKind::cycle, {6});
    EXPECT_EQ(c6.edge_count(), 6);
    for (int v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2);
    EXPECT_EQ(oracle::rational_multiplicity(c6, -1), 2);

    EXPECT_EQ(standard_graph(GraphKind::complete, {4}).edge_count(), 6);
    EXPECT_THROW(standard_graph(GraphKind::complete_bipartite, {3}), std::invalid_argument);
}

TEST(Assemble, ExamplesFromTheAttachmentAnalysis) {
    // u on v1, v2 duplicates N[v1]; only the relaxed build accepts it
    AttachmentProfile end{.diameter = 5, .n2 = {1}};
    EXPECT_THROW(assemble(end), AssemblyError);
    const Graph relaxed = assemble(end, {.require_diameter = true, .require_c_canonical = false});
    EXPECT_EQ(relaxed.order(), 7);
    EXPECT_EQ(oracle::rational_multiplicity(relaxed, -1), 1);

    const Graph mid = assemble({.diameter = 5, .n2 = {3}});
    EXPECT_EQ(oracle::rational_multiplicity(mid, -1), 0);

    const Graph x = assemble({.diameter = 4, .n1 = {3}});
    EXPECT_EQ(x.order(), 6);
    EXPECT_EQ(oracle::fw_diameter(x), 4);
    EXPECT_EQ(oracle::rational_multiplicity(x, -1), 1);
}

TEST(Assemble, RejectsShortcutsAndBadPositions) {
    // x on v1, y on v5 and x ~ y give a path of length 3 between the ends
    EXPECT_THROW(assemble({.diameter = 4, .n1 = {1, 5}, .extra_edges = {{0, 1}}}), AssemblyError);
    EXPECT_THROW(assemble({.diameter = 4, .n1 = {6}}), AssemblyError);
    EXPECT_THROW(assemble({.diameter = 4, .n2 = {5}}), AssemblyError);
    EXPECT_THROW(assemble({.diameter = 4, .distance_two = {{0}}}), AssemblyError);
    EXPECT_THROW(assemble({.diameter = 0}), AssemblyError);
}

TEST(Assemble, IsLabelDeterministic) {
    const AttachmentProfile p{.diameter = 7, .n1 = {3, 6}, .n2 = {4}, .distance_two = {{0}}, .extra_edges = {{0, 1}}};
    const Graph a = assemble(p, {.require_diameter = false, .require_c_canonical = false});
    const Graph b = assemble(p, {.require_diameter = false, .require_c_canonical = false});
    EXPECT_EQ(write_graph6(a), write_graph6(b));
    for (int i = 0; i < 7; ++i) EXPECT_TRUE(a.adjacent(i, i + 1));
    EXPECT_TRUE(a.adjacent(8, 2));
    EXPECT_TRUE(a.adjacent(10, 3) && a.adjacent(10, 4));
    EXPECT_TRUE(a.adjacent(11, 8));
    EXPECT_TRUE(a.adjacent(8, 9));
}

TEST(MaximalFamily, DiameterTwoIsThePathAlone) {
    const auto& f = maximal_family(2);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].graph, path_graph(3));
    EXPECT_EQ(f[0].multiplicity, 0);
}

TEST(MaximalFamily, EveryInstanceMeetsTheBoundWithEquality) {
    for (int d = kFamilyMinDiameter; d <= 8; ++d) {
        for (const FamilyInstance& fi : maximal_family(d)) {
            const Graph& g = fi.graph;
            const int n = g.order();
            EXPECT_EQ(oracle::fw_diameter(g), d);
            EXPECT_EQ(oracle::rational_multiplicity(g, -1), n - d - 1) << write_graph6(g);
            EXPECT_EQ(fi.multiplicity, n - d - 1);
            EXPECT_EQ(fi.params.at("attached"), n - d - 1);
            EXPECT_TRUE(is_c_canonical(g));
            for (int i = 0; i < d; ++i) EXPECT_TRUE(g.adjacent(i, i + 1));
        }
    }
}

TEST(MaximalFamily, ResidueTwoMultiplicityCountsAttachedVertices) {
    for (int d : {2, 5, 8})
        for (const FamilyInstance& fi : maximal_family(d)) {
            EXPECT_EQ(fi.multiplicity, fi.graph.order() - (d + 1));
            EXPECT_EQ(fi.params.at("t"), fi.params.at("n2"));
        }
    const auto& f5 = maximal_family(5);
    ASSERT_FALSE(f5.empty());
    for (const FamilyInstance& fi : f5) EXPECT_EQ(fi.params.at("t"), fi.multiplicity);
}

TEST(MaximalFamily, ResidueOneInstances) {
    const auto& f4 = maximal_family(4);
    ASSERT_FALSE(f4.empty());
    bool without_single = false;
    for (const FamilyInstance& fi : f4) {
        const auto s = summarize_attachments(fi.graph, fi.spine);
        EXPECT_LE(s.n1.size(), 2u);
        if (s.n1.size() == 2) EXPECT_TRUE(fi.graph.adjacent(s.n1[0], s.n1[1]));
        EXPECT_LE(s.distance_two.size(), 1u);
        without_single |= s.n1.empty();
    }
    // P5 plus one vertex on v_i and v_{i+2} reaches the bound with no
    // single-neighbour attachment at all
    EXPECT_TRUE(without_single);
    const Graph gap = path_graph(5).with_vertex(VertexSet{1, 3});
    EXPECT_EQ(oracle::rational_multiplicity(gap, -1), 1);
    EXPECT_EQ(oracle::fw_diameter(gap), 4);
    EXPECT_TRUE(is_c_canonical(gap));
}

TEST(MaximalFamily, InstancesArePairwiseNonIsomorphicAndDeterministic) {
    for (int d = kFamilyMinDiameter; d <= 8; ++d) {
        const auto& f = maximal_family(d);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) EXPECT_FALSE(are_isomorphic(f[i].graph, f[j].graph));
    }
    FamilyCatalog fresh;
    const auto& again = fresh.get(6);
    const auto& cached = maximal_family(6);
    ASSERT_EQ(again.size(), cached.size());
    for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(write_graph6(again[i].graph), write_graph6(cached[i].graph));
}

TEST(MaximalFamily, RangeChecked) {
    EXPECT_THROW(maximal_family(1), std::invalid_argument);
    EXPECT_THROW(maximal_family(kFamilyMaxDiameter + 1), std::invalid_argument);
}

TEST(SummarizeAttachments, SortsVerticesByShape) {
    Graph g = path_graph(7);
    g = g.with_vertex(VertexSet{2});           // 7: N1
    g = g.with_vertex(VertexSet{3, 4});        // 8: N2
    g = g.with_vertex(VertexSet{1, 3});        // 9: gap
    g = g.with_vertex(VertexSet{7});           // 10: distance two
    PathWitness spine;
    for (int i = 0; i < 7; ++i) spine.vertices.push_back(i);
    const auto s = summarize_attachments(g, spine);
    EXPECT_EQ(s.n1, std::vector<int>{7});
    EXPECT_EQ(s.n2, std::vector<int>{8});
    EXPECT_EQ(s.n2_gap, std::vector<int>{9});
    EXPECT_EQ(s.distance_two, std::vector<int>{10});
    EXPECT_EQ(s.position.at(8), 4);
}
