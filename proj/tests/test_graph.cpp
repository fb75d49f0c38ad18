#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <factorlab/constructions.hpp>
#include <factorlab/graph.hpp>
#include <factorlab/graph6.hpp>
#include <factorlab/random.hpp>

using namespace factorlab;

namespace {

std::vector<int> component_sizes(const std::vector<VertexSet>& parts)
{
    std::vector<int> sizes;
    for (const auto& p : parts)
        sizes.push_back(p.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST(Complete, DegenerateSingleVertex)
{
    const Graph g = complete(1);
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.size(), 0);
}

TEST(Complete, EdgeCountAndRegularity)
{
    const Graph k4 = complete(4);
    EXPECT_EQ(k4.size(), 6);
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(k4.degree(v), 3);
    const Graph k10 = complete(10);
    EXPECT_EQ(k10.degrees(), std::vector<int>(10, 9));
}

TEST(Complete, ZeroVerticesIsAnError)
{
    try {
        complete(0);
        FAIL() << "expected EmptyGraph";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyGraph);
    }
}

TEST(Builder, RejectsLoopsAndTooManyVertices)
{
    GraphBuilder b(3);
    EXPECT_THROW(b.add_edge(1, 1), Error);
    EXPECT_THROW(b.add_edge(0, 3), Error);
    EXPECT_TRUE(b.add_edge(0, 1));
    EXPECT_FALSE(b.add_edge(1, 0));
    EXPECT_EQ(b.build().size(), 1);
    EXPECT_THROW(GraphBuilder(max_vertices + 1), Error);
}

TEST(DisjointUnion, Examples)
{
    const Graph two = disjoint_union(complete(1), complete(1));
    EXPECT_EQ(two.order(), 2);
    EXPECT_EQ(two.size(), 0);

    const Graph g = disjoint_union(complete(3), complete(2));
    EXPECT_EQ(g.size(), 4);
    EXPECT_TRUE(g.adjacent(3, 4));
    EXPECT_FALSE(g.adjacent(2, 3));

    Graph indep = complete(1);
    for (int i = 0; i < 4; ++i)
        indep = disjoint_union(indep, complete(1));
    EXPECT_EQ(indep.order(), 5);
    EXPECT_EQ(indep.size(), 0);
}

TEST(Join, Examples)
{
    const Graph s = join(complete(1), edgeless(6));
    EXPECT_EQ(s.degree(0), 6);
    EXPECT_EQ(s, star(7));

    EXPECT_EQ(join(complete(2), complete(3)), complete(5));
}

TEST(Join, BaseOfGnaMatchesConstruction)
{
    // K_{a-1} v (K_{n-2a-1} u (a+1)K_1) is g_na without w.
    const int n = 13, a = 3;
    Graph indep = edgeless(a + 1);
    const Graph base = join(complete(a - 1), disjoint_union(complete(n - 2 * a - 1), indep));
    const auto c = g_na(n, a);
    const auto without_w = delete_set(c.graph, c.block("w")).graph;
    EXPECT_EQ(base, without_w);
}

TEST(Join, EdgeCountIsAdditivePlusProduct)
{
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g1 = gnp(static_cast<int>(rng.between(0, 12)), rng.uniform(), rng);
        const Graph g2 = gnp(static_cast<int>(rng.between(0, 12)), rng.uniform(), rng);
        const Graph j = join(g1, g2);
        EXPECT_EQ(j.size(), g1.size() + g2.size() + static_cast<std::int64_t>(g1.order()) * g2.order());
        EXPECT_TRUE(is_well_formed(j));
    }
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement(complete(6)), edgeless(6));
    EXPECT_EQ(complement(edgeless(5)), complete(5));
    const Graph c4c = complement(cycle(4));
    EXPECT_EQ(c4c.size(), 2);
    EXPECT_EQ(component_sizes(components(c4c)), (std::vector<int>{2, 2}));
}

TEST(Complement, IsAnInvolutionAndSplitsKn)
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.between(1, 30));
        const Graph g = gnp(n, rng.uniform(), rng);
        const Graph c = complement(g);
        EXPECT_EQ(complement(c), g);
        EXPECT_EQ(g.size() + c.size(), static_cast<std::int64_t>(n) * (n - 1) / 2);
    }
}

TEST(DeleteSet, Examples)
{
    const auto k4 = delete_set(complete(5), VertexSet(5, {0}));
    EXPECT_EQ(k4.graph, complete(4));
    EXPECT_EQ(k4.labels, (std::vector<int>{1, 2, 3, 4}));

    const Graph c6 = cycle(6);
    EXPECT_EQ(delete_set(c6, VertexSet(6)).graph, c6);
}

TEST(DeleteSet, GnaMinusIndependentBlock)
{
    // Removing the independent block leaves K_{n-a-2} and the isolated w.
    for (int a = 2; a <= 5; ++a)
        for (int n = 2 * a + 3; n <= 30; ++n) {
            const auto c = g_na(n, a);
            const auto rest = delete_set(c.graph, c.block("indep"));
            const auto parts = components(rest.graph);
            ASSERT_EQ(parts.size(), 2u);
            EXPECT_EQ(component_sizes(parts), (std::vector<int>{1, n - a - 2}));
            for (const auto& p : parts)
                EXPECT_EQ(edges_within(rest.graph, p), static_cast<std::int64_t>(p.size()) * (p.size() - 1) / 2);
        }
}

TEST(DeleteSet, LabelMapIsInjective)
{
    Rng rng(3);
    const Graph g = gnp(20, 0.4, rng);
    VertexSet drop(20, {1, 5, 6, 19});
    const auto sub = delete_set(g, drop);
    std::set<int> seen(sub.labels.begin(), sub.labels.end());
    EXPECT_EQ(seen.size(), sub.labels.size());
    for (int i = 0; i < sub.graph.order(); ++i)
        for (int j = 0; j < sub.graph.order(); ++j)
            EXPECT_EQ(sub.graph.adjacent(i, j), g.adjacent(sub.labels[i], sub.labels[j]));
}

TEST(Components, Examples)
{
    EXPECT_EQ(component_sizes(components(complete(5))), (std::vector<int>{5}));
    const Graph g = disjoint_union(complete(3), edgeless(2));
    EXPECT_EQ(component_sizes(components(g)), (std::vector<int>{1, 1, 3}));
}

TEST(Components, PartsArePairwiseNonAdjacentAndConnected)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.between(1, 40));
        const Graph g = gnp(n, 0.05 + 0.1 * rng.uniform(), rng);
        const auto parts = components(g);
        VertexSet all(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            EXPECT_FALSE(all.intersects(parts[i]));
            all |= parts[i];
            EXPECT_TRUE(is_connected(induced(g, parts[i]).graph));
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                EXPECT_EQ(edges_between(g, parts[i], parts[j]), 0);
        }
        EXPECT_EQ(all.size(), n);
    }
}

TEST(EdgesBetween, Examples)
{
    EXPECT_EQ(edges_between(complete(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})), 4);
    const Graph c5 = cycle(5);
    EXPECT_EQ(edges_between(c5, VertexSet(5, {0, 2}), VertexSet(5)), 0);
}

TEST(EdgesBetween, AddedVertexSeesWholeIndependentBlock)
{
    for (int a = 2; a <= 6; ++a) {
        const auto c = g_na(2 * a + 6, a);
        EXPECT_EQ(edges_between(c.graph, c.block("w"), c.block("indep")), a + 1);
    }
}

TEST(EdgesBetween, OverlappingSetsAreRejected)
{
    try {
        edges_between(complete(4), VertexSet(4, {0, 1}), VertexSet(4, {1, 2}));
        FAIL() << "expected NonDisjoint";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonDisjoint);
    }
}

TEST(Degrees, MinDegreeAndConnectivity)
{
    for (int n = 2; n <= 12; ++n)
        EXPECT_EQ(min_degree(complete(n)), n - 1);
    EXPECT_FALSE(is_connected(edgeless(2)));
    EXPECT_TRUE(is_connected(complete(1)));
    EXPECT_TRUE(is_connected(path(9)));
    EXPECT_EQ(degree(star(6), 0), 5);
}

TEST(Degrees, GnaMinimumDegreeIsA)
{
    for (int a = 2; a <= 6; ++a)
        for (int n = 2 * a + 3; n <= 40; ++n)
            EXPECT_EQ(min_degree(g_na(n, a).graph), a) << "n=" << n << " a=" << a;
}

TEST(Graph, WellFormedAfterEveryBuilderOperation)
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.between(1, 70));
        const Graph g = gnp(n, rng.uniform(), rng);
        EXPECT_TRUE(is_well_formed(g));
        std::int64_t sum = 0;
        for (int d : g.degrees())
            sum += d;
        EXPECT_EQ(sum, 2 * g.size());
        EXPECT_TRUE(is_well_formed(complement(g)));
    }
}

TEST(Graph, LargeOrdersUseSeveralWords)
{
    const Graph g = cycle(4096);
    EXPECT_EQ(g.size(), 4096);
    EXPECT_TRUE(g.adjacent(4095, 0));
    EXPECT_TRUE(is_connected(g));
}

// ------------------------------------------------------------------ graph6

TEST(Graph6, KnownEncodings)
{
    // Reference strings from the graph6 format description and nauty output.
    EXPECT_EQ(to_graph6(edgeless(0)), "?");
    EXPECT_EQ(to_graph6(complete(1)), "@");
    EXPECT_EQ(to_graph6(complete(2)), "A_");
    EXPECT_EQ(to_graph6(complete(4)), "C~");
    EXPECT_EQ(to_graph6(cycle(5)), "Dhc");
    EXPECT_EQ(to_graph6(path(4)), "Ch");
    EXPECT_EQ(to_graph6(star(4)), "Cs");
    EXPECT_EQ(to_graph6(complete(5)), "D~{");
}

TEST(Graph6, LongSizeField)
{
    const Graph g = path(100);
    const std::string text = to_graph6(g);
    ASSERT_GE(text.size(), 4u);
    EXPECT_EQ(text.substr(0, 4), std::string("~?@c"));
    EXPECT_EQ(from_graph6(text), g);
}

TEST(Graph6, RoundTripsRandomGraphsAndConstructions)
{
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.between(0, 130));
        const Graph g = gnp(n, rng.uniform(), rng);
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
    for (int a = 2; a <= 5; ++a)
        for (int n = 2 * a + 3; n <= 70; n += 7) {
            const Graph g = g_na(n, a).graph;
            EXPECT_EQ(from_graph6(to_graph6(g)), g);
        }
}

TEST(Graph6, CorpusLinesRoundTripBitExactly)
{
    std::ifstream in(FACTORLAB_CORPUS);
    ASSERT_TRUE(in.good());
    const auto records = read_graph6(in);
    EXPECT_EQ(records.size(), 12113u);
    for (const auto& r : records)
        ASSERT_EQ(to_graph6(r.graph), r.text) << "line " << r.line;
}

TEST(Graph6, HeaderIsAccepted)
{
    EXPECT_EQ(from_graph6(">>graph6<<C~"), complete(4));
}

TEST(Graph6, MalformedInputReportsLineNumber)
{
    std::istringstream in("C~\n\nC~~~~~\n");
    try {
        read_graph6(in);
        FAIL() << "expected a parse error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Graph6Parse);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Graph6, RejectsBadBytesPaddingAndSparse6)
{
    EXPECT_THROW(from_graph6(""), Error);
    EXPECT_THROW(from_graph6("C"), Error);    // truncated
    EXPECT_THROW(from_graph6("C~~"), Error);  // trailing data
    EXPECT_THROW(from_graph6("C\x20"), Error); // byte below 63
    EXPECT_THROW(from_graph6("A`"), Error);   // nonzero padding bit
    EXPECT_THROW(from_graph6(":Fa@x^"), Error);
}
