#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "chroma4/dimacs.hpp"
#include "chroma4/graph.hpp"
#include "oracles.hpp"

using namespace chroma4;

TEST(Graph, NeighborsExamples)
{
    const Graph p3 = named::path(3);
    EXPECT_EQ(neighbors(p3, 1), (VertexSet{0, 2}));
    const Graph iso(3, {{0, 1}});
    EXPECT_TRUE(neighbors(iso, 2).empty());
    const Graph k4 = named::complete(4);
    for (Vertex v = 0; v < 4; ++v)
        EXPECT_EQ(neighbors(k4, v), VertexSet::range(4) - VertexSet{v});
}

TEST(Graph, SetNeighborsExamples)
{
    EXPECT_EQ(set_neighbors(named::path(4), {1, 2}), (VertexSet{0, 3}));
    const Graph k5 = named::complete(5);
    EXPECT_TRUE(set_neighbors(k5, k5.vertices()).empty());
    EXPECT_EQ(set_neighbors(named::cycle(5), {0}), (VertexSet{1, 4}));
}

TEST(Graph, InducedExamples)
{
    const auto p = induced(named::cycle(5), {1, 2, 3});
    EXPECT_EQ(p.graph, named::path(3));
    EXPECT_EQ(p.to_parent, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(induced(named::complete(5), {0, 2, 3, 4}).graph, named::complete(4));
    EXPECT_EQ(induced(named::complete(5), {}).graph.size(), 0);
}

TEST(Graph, ComplementExamples)
{
    const Graph a = complement(named::cycle(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != j)
                EXPECT_EQ(a.adjacent(i, j), std::abs(i - j) >= 2 && std::abs(i - j) <= 5);
    EXPECT_EQ(a, named::antihole(7));
    EXPECT_EQ(complement(named::complete(3)).edge_count(), 0);
    // P4 is self-complementary: 1-3-0-2 is a path in the complement.
    const Graph cp4 = complement(named::path(4));
    EXPECT_EQ(cp4.edge_count(), 3);
    EXPECT_TRUE(cp4.adjacent(1, 3) && cp4.adjacent(3, 0) && cp4.adjacent(0, 2));
}

TEST(Graph, ContractExamples)
{
    // a-c-b with a=0, b=1, c=2
    const Graph p3(3, {{0, 2}, {2, 1}});
    const auto c = contract_set(p3, {0, 1});
    EXPECT_EQ(c.graph, named::complete(2));

    const Graph k4 = named::complete(4);
    const auto same = contract_set(k4, {2});
    EXPECT_EQ(same.graph.edge_count(), 6);

    const Graph c4 = named::cycle(4);
    const auto q = contract_set(c4, {0, 2});
    ASSERT_EQ(q.graph.size(), 3);
    const Vertex s = q.merged;
    EXPECT_EQ(s, 2);
    EXPECT_TRUE(q.graph.adjacent(s, q.to_child[1]));
    EXPECT_TRUE(q.graph.adjacent(s, q.to_child[3]));
    EXPECT_FALSE(q.graph.adjacent(q.to_child[1], q.to_child[3]));
}

TEST(Graph, ComponentsExamples)
{
    const Graph two(4, {{0, 1}, {2, 3}});
    const auto cs = components(two, two.vertices());
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].size(), 2);
    EXPECT_EQ(cs[1].size(), 2);
    EXPECT_EQ(components(named::cycle(6), named::cycle(6).vertices()).size(), 1u);
    EXPECT_TRUE(components(two, {}).empty());
}

TEST(Graph, IsProperExamples)
{
    const Graph k2 = named::complete(2);
    const auto bad = is_proper(k2, Coloring(std::vector<Color>{1, 1}), true);
    EXPECT_FALSE(bad.proper);
    ASSERT_TRUE(bad.bad_edge);
    EXPECT_EQ(*bad.bad_edge, (std::pair<Vertex, Vertex>{0, 1}));

    EXPECT_TRUE(is_proper(named::complete(4), Coloring(std::vector<Color>{1, 2, 3, 4}), true).proper);
    EXPECT_TRUE(is_proper(named::antihole(7), Coloring(std::vector<Color>{1, 2, 2, 3, 3, 4, 4}), true).proper);

    const auto partial = is_proper(k2, Coloring(std::vector<Color>{1, 0}), true);
    EXPECT_FALSE(partial.proper);
    EXPECT_EQ(partial.uncolored, 1);
    EXPECT_TRUE(is_proper(k2, Coloring(std::vector<Color>{1, 0}), false).proper);
    EXPECT_FALSE(is_proper(k2, Coloring(std::vector<Color>{1, 5}), false).proper);
}

TEST(Graph, RejectsLoopsAndRange)
{
    EXPECT_THROW(Graph(3, {{1, 1}}), UsageError);
    EXPECT_THROW(Graph(3, {{0, 3}}), UsageError);
    EXPECT_THROW(check_vertex(named::path(2), 2), UsageError);
}

TEST(Graph, RandomInvariants)
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = ref::random_graph(n, 0.1 + 0.05 * (t % 15), rng);
        for (Vertex u = 0; u < n; ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            for (Vertex v = 0; v < n; ++v)
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
        const Graph cc = complement(complement(g));
        EXPECT_EQ(cc, g);
        EXPECT_EQ(g.edge_count() + complement(g).edge_count(), n * (n - 1) / 2);

        VertexSet covered;
        int total = 0;
        for (const auto & comp : components(g, g.vertices())) {
            EXPECT_FALSE(comp.intersects(covered));
            covered |= comp;
            total += comp.size();
            EXPECT_TRUE(set_neighbors(g, comp).empty());
        }
        EXPECT_EQ(total, n);

        VertexSet half;
        for (Vertex v = 0; v < n; v += 2)
            half.insert(v);
        const auto sub = induced(g, half);
        for (Vertex a = 0; a < sub.graph.size(); ++a)
            for (Vertex b = 0; b < sub.graph.size(); ++b)
                EXPECT_EQ(sub.graph.adjacent(a, b), a != b && g.adjacent(sub.to_parent[a], sub.to_parent[b]));

        if (n >= 2) {
            const VertexSet s{0, 1};
            const auto c = contract_set(g, s);
            EXPECT_EQ(c.graph.size(), n - 1);
            for (Vertex v = 2; v < n; ++v)
                EXPECT_EQ(c.graph.adjacent(c.merged, c.to_child[v]), g.adjacent(0, v) || g.adjacent(1, v));
        }
    }
}

TEST(Dimacs, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Graph g = ref::random_graph(1 + static_cast<int>(rng() % 15), 0.4, rng);
        std::istringstream in(dimacs::to_string(g, "round trip"));
        EXPECT_EQ(dimacs::read_graph(in), g);
    }
}

TEST(Dimacs, ParseErrors)
{
    auto parse = [](const std::string & s) {
        std::istringstream in(s);
        return dimacs::read_graph(in);
    };
    EXPECT_NO_THROW(parse("c hi\np edge 3 1\ne 1 2\n"));
    EXPECT_THROW(parse("e 1 2\n"), ParseError);
    EXPECT_THROW(parse("p edge 3 1\ne 1 4\n"), ParseError);
    EXPECT_THROW(parse("p edge 3 1\ne 2 2\n"), ParseError);
    EXPECT_THROW(parse("p edge 3 1\nx\n"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("p edge 3 1\np edge 3 1\n"), ParseError);
    try {
        parse("p edge 2 1\n\ne 1 9\n");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Dimacs, ColoringRoundTrip)
{
    const Coloring c(std::vector<Color>{1, 2, 3, 4, 1});
    std::ostringstream out;
    dimacs::write_coloring(out, c);
    std::istringstream in(out.str());
    EXPECT_EQ(dimacs::read_coloring(in, 5), c);
}
