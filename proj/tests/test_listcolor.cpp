#include <gtest/gtest.h>

#include <random>

#include "chroma4/listcolor.hpp"
#include "oracles.hpp"

using namespace chroma4;

namespace {

ListAssignment random_lists(int n, ColorSet palette, std::mt19937_64 & rng)
{
    const auto cols = palette.to_vector();
    ListAssignment l(static_cast<std::size_t>(n));
    for (auto & s : l)
        for (Color c : cols)
            if (rng() % 4 != 0)
                s.insert(c);
    return l;
}

} // namespace

TEST(ListColor, TriangleUsesPalette)
{
    const ColorSet pal{2, 3, 4};
    const auto c = list_color_3(named::complete(3), ListAssignment(3, pal), pal);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->used(), pal);
    EXPECT_TRUE(is_proper(named::complete(3), *c, true).proper);
}

TEST(ListColor, K4NotThreeColorable)
{
    const ColorSet pal{1, 2, 4};
    EXPECT_FALSE(list_color_3(named::complete(4), ListAssignment(4, pal), pal));
}

TEST(ListColor, Cycles)
{
    const ColorSet pal{1, 3};
    EXPECT_TRUE(list_color_2(named::cycle(6), ListAssignment(6, pal), pal));
    EXPECT_FALSE(list_color_2(named::cycle(7), ListAssignment(7, pal), pal));
}

TEST(ListColor, ForcedPath)
{
    const ListAssignment l{ColorSet{1}, ColorSet{1, 2}, ColorSet{1}};
    const auto c = list_color_2(named::path(3), l, ColorSet{1, 2});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, Coloring(std::vector<Color>{1, 2, 1}));
}

TEST(ListColor, RejectsBadPalettes)
{
    EXPECT_THROW((void)list_color_3(named::path(2), ListAssignment(2, ColorSet::all()), ColorSet::all()), UsageError);
    EXPECT_THROW((void)list_color_3(named::path(2), ListAssignment(2, ColorSet{1, 4}), ColorSet{1, 2, 3}), UsageError);
}

TEST(ListColor, ThreeMatchesBruteForce)
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = ref::random_graph(n, 0.15 + 0.05 * (t % 8), rng);
        ColorSet pal = ColorSet::all();
        pal.erase(static_cast<Color>(1 + rng() % 4));
        const auto l = random_lists(n, pal, rng);
        const auto got = list_color_3(g, l, pal);
        ASSERT_EQ(got.has_value(), ref::list_colorable(g, l)) << t;
        if (got)
            EXPECT_TRUE(respects_lists(g, *got, l));
    }
}

TEST(ListColor, TwoMatchesBruteForce)
{
    std::mt19937_64 rng(10);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = ref::random_graph(n, 0.05 + 0.03 * (t % 8), rng);
        const Color a = static_cast<Color>(1 + rng() % 4);
        Color b = static_cast<Color>(1 + rng() % 4);
        if (b == a)
            b = static_cast<Color>(a % 4 + 1);
        const ColorSet pal{a, b};
        const auto l = random_lists(n, pal, rng);
        const auto got = list_color_2(g, l, pal);
        ASSERT_EQ(got.has_value(), ref::list_colorable(g, l)) << t;
        if (got)
            EXPECT_TRUE(respects_lists(g, *got, l));
    }
}

TEST(ListColor, ExactFourColors)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = ref::random_graph(n, 0.4, rng);
        const auto l = random_lists(n, ColorSet::all(), rng);
        const auto got = list_color_exact(g, l);
        ASSERT_EQ(got.has_value(), ref::list_colorable(g, l)) << t;
        if (got)
            EXPECT_TRUE(respects_lists(g, *got, l));
    }
}
