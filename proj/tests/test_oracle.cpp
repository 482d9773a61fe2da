#include <gtest/gtest.h>

#include "chroma4/dimacs.hpp"
#include "chroma4/oracle.hpp"
#include "chroma4/pipeline.hpp"
#include "oracles.hpp"

using namespace chroma4;

TEST(Oracle, BruteKnownValues)
{
    EXPECT_FALSE(oracle::brute_k_colorable(named::complete(5), 4));
    EXPECT_FALSE(oracle::brute_k_colorable(named::antihole(7), 3));
    const auto c = oracle::brute_k_colorable(named::antihole(7), 4);
    ASSERT_TRUE(c);
    EXPECT_TRUE(is_proper(named::antihole(7), *c, true).proper);
    EXPECT_FALSE(oracle::brute_k_colorable(named::antihole(9), 4));
    EXPECT_THROW((void)oracle::brute_k_colorable(named::empty(oracle::kBruteCap + 1), 4), UsageError);
}

TEST(Oracle, BruteMatchesReference)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const Graph g = ref::random_graph(1 + static_cast<int>(rng() % 11), 0.5, rng);
        for (int k = 2; k <= 4; ++k)
            EXPECT_EQ(oracle::brute_k_colorable(g, k).has_value(), ref::k_colorable(g, k));
    }
}

TEST(Oracle, PresetsAreFreeAndConnected)
{
    for (const auto & preset : oracle::presets()) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            oracle::GenSpec s;
            s.preset = preset;
            s.seed = seed;
            s.n = std::max(preset == "dirty" ? 11 : 7, 8 + static_cast<int>(seed % 9));
            const Graph g = oracle::generate_free(s);
            EXPECT_TRUE(is_connected(g)) << preset;
            EXPECT_TRUE(ref::free_p6_c5(g)) << preset << " " << seed;
        }
    }
}

TEST(Oracle, C7Preset)
{
    oracle::GenSpec s;
    s.preset = "c7bar";
    s.n = 7;
    EXPECT_EQ(oracle::generate_free(s), named::antihole(7));
}

TEST(Oracle, Deterministic)
{
    for (const auto & preset : oracle::presets()) {
        oracle::GenSpec s;
        s.preset = preset;
        s.seed = 77;
        s.n = 13;
        EXPECT_EQ(dimacs::to_string(oracle::generate_free(s)), dimacs::to_string(oracle::generate_free(s)));
    }
    const auto a = oracle::build_corpus(20, 10, 7, 12, 3);
    const auto b = oracle::build_corpus(20, 10, 7, 12, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].graph, b[i].graph);
    }
}

TEST(Oracle, RepairModes)
{
    for (auto mode : {oracle::Repair::chord, oracle::Repair::deletion, oracle::Repair::resample}) {
        oracle::GenSpec s;
        s.repair = mode;
        // Resampling only keeps graphs that are free as drawn.
        s.n = mode == oracle::Repair::resample ? 8 : 12;
        s.p = 0.3;
        s.max_attempts = 5000;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            s.seed = seed;
            EXPECT_TRUE(ref::free_p6_c5(oracle::generate_free(s)));
        }
    }
}

TEST(Oracle, SeededCorpusHasAntiholes)
{
    const auto corpus = oracle::build_corpus(50, 50, 8, 14, 9);
    int with = 0;
    for (const auto & item : corpus)
        with += ref::has_antihole(item.graph, 7);
    EXPECT_GE(with, 50);
}

TEST(Oracle, SmallCorpusNoMismatch)
{
    std::vector<oracle::CorpusItem> corpus{
        {"k4", named::complete(4)}, {"c7bar", named::antihole(7)}, {"c9bar", named::antihole(9)}};
    const auto rep = oracle::differential_run(corpus, oracle::solver_decider());
    EXPECT_EQ(rep.mismatches, 0);
    EXPECT_EQ(rep.errors, 0);
    ASSERT_EQ(rep.records.size(), 3u);
    EXPECT_TRUE(rep.records[1].oracle);
    EXPECT_FALSE(rep.records[2].oracle);
}

TEST(Oracle, InjectedBugDetected)
{
    const auto corpus = oracle::build_corpus(30, 10, 7, 10, 5);
    const auto buggy = [](const Graph & g) { return solve(g).colorable && g.edge_count() % 7 != 3; };
    const auto rep = oracle::differential_run(corpus, buggy);
    EXPECT_GT(rep.mismatches, 0);
    for (const auto & r : rep.records)
        if (r.status == "mismatch")
            EXPECT_FALSE(r.reproducer.empty());
    const auto throwing = [](const Graph &) -> bool { throw ContractError("test", "boom"); };
    EXPECT_EQ(oracle::differential_run(corpus, throwing).errors, static_cast<int>(corpus.size()));
}

TEST(Oracle, EmptyCorpus)
{
    const auto rep = oracle::differential_run({}, oracle::solver_decider());
    EXPECT_TRUE(rep.records.empty());
    EXPECT_EQ(rep.mismatches, 0);
}

TEST(Oracle, JobsDoNotChangeReport)
{
    const auto corpus = oracle::build_corpus(40, 20, 7, 12, 6);
    EXPECT_EQ(oracle::differential_run(corpus, oracle::solver_decider(), 1).text(),
              oracle::differential_run(corpus, oracle::solver_decider(), 4).text());
}
