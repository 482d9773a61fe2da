#include <gtest/gtest.h>

#include "chroma4/dimacs.hpp"
#include "chroma4/oracle.hpp"
#include "chroma4/phase1.hpp"
#include "chroma4/pipeline.hpp"
#include "oracles.hpp"

using namespace chroma4;

namespace {

Graph k5_pendant()
{
    auto e = named::complete(5).edges();
    e.push_back({4, 5});
    return Graph(6, e);
}

Graph x3_graph()
{
    auto e = named::antihole(7).edges();
    for (int i = 1; i <= 5; ++i) {
        e.push_back({i, 7});
        e.push_back({i, 8});
    }
    e.insert(e.end(), {{7, 9}, {8, 9}, {9, 10}});
    return Graph(11, e);
}

} // namespace

TEST(Phase1, StepK5Pendant)
{
    const auto out = clean_step(k5_pendant());
    EXPECT_EQ(out.kind, Phase1Outcome::Kind::not_colorable);
    EXPECT_EQ(out.report.verdict, CleanVerdict::has_k5);
    EXPECT_EQ(out.report.witness.size(), 5u);
}

TEST(Phase1, StepBareAntihole)
{
    const auto out = clean_step(named::antihole(7));
    EXPECT_EQ(out.kind, Phase1Outcome::Kind::clean);
    EXPECT_FALSE(out.record);
}

TEST(Phase1, StepX3Reduces)
{
    const Graph g = x3_graph();
    const auto out = clean_step(g);
    ASSERT_EQ(out.kind, Phase1Outcome::Kind::reduced);
    EXPECT_EQ(out.graph.size(), g.size() - 1);
    ASSERT_TRUE(out.partition);
    EXPECT_EQ(out.partition->rule, "x3");
    EXPECT_EQ(ref::k_colorable(out.graph, 4), ref::k_colorable(g, 4));
    EXPECT_TRUE(ref::free_p6_c5(out.graph));
}

TEST(Phase1, LoopExamples)
{
    const auto bare = clean_loop(named::antihole(7));
    EXPECT_EQ(bare.outcome.kind, Phase1Outcome::Kind::clean);
    EXPECT_TRUE(bare.journal.empty());

    const auto k5 = clean_loop(named::complete(5));
    EXPECT_EQ(k5.outcome.kind, Phase1Outcome::Kind::not_colorable);
    EXPECT_TRUE(k5.journal.empty());

    const auto x3 = clean_loop(x3_graph());
    EXPECT_EQ(x3.outcome.kind, Phase1Outcome::Kind::clean);
    EXPECT_EQ(x3.journal.size(), 1u);
}

TEST(Phase1, LoopTwoContractions)
{
    // Two x3 gadgets glued at a vertex.
    const Graph g = dimacs::read_graph_file(CHROMA4_TEST_DATA "/two_contractions.col");
    ASSERT_TRUE(ref::free_p6_c5(g));
    const auto r = clean_loop(g);
    EXPECT_EQ(r.outcome.kind, Phase1Outcome::Kind::clean);
    ASSERT_EQ(r.journal.size(), 2u);
    EXPECT_EQ(check_clean(r.outcome.graph).verdict, CleanVerdict::clean);
    EXPECT_EQ(r.outcome.graph.size(), g.size() - 2);

    auto c = dsatur_color(r.outcome.graph, 4);
    ASSERT_TRUE(c);
    EXPECT_TRUE(is_proper(g, expand(*c, r.journal), true).proper);
}

TEST(Phase1, RejectionsAreRealOnGeneratedGraphs)
{
    for (const char * preset : {"dirty", "hubs", "antihole7", "c9bar"}) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            oracle::GenSpec s;
            s.preset = preset;
            s.seed = seed;
            s.n = 11 + static_cast<int>(seed % 4);
            const Graph g = oracle::generate_free(s);
            const auto r = clean_loop(g);
            const bool col = ref::k_colorable(g, 4);
            if (r.outcome.kind == Phase1Outcome::Kind::not_colorable)
                EXPECT_FALSE(col) << preset << " " << seed;
            else
                EXPECT_EQ(ref::k_colorable(r.outcome.graph, 4), col) << preset << " " << seed;
            for (const auto & step : r.steps)
                EXPECT_TRUE(ref::free_p6_c5(step.graph)) << preset << " " << seed;
        }
    }
}
