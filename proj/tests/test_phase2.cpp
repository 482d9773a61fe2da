#include <gtest/gtest.h>

#include <random>

#include "chroma4/oracle.hpp"
#include "chroma4/phase2.hpp"
#include "chroma4/pipeline.hpp"
#include "oracles.hpp"

using namespace chroma4;

namespace {

Graph antihole_plus(const std::vector<std::vector<int>> & attach, const std::vector<std::pair<int, int>> & extra = {})
{
    auto e = named::antihole(7).edges();
    for (std::size_t k = 0; k < attach.size(); ++k)
        for (int i : attach[k])
            e.push_back({i, 7 + static_cast<int>(k)});
    for (auto p : extra)
        e.push_back(p);
    return Graph(7 + static_cast<int>(attach.size()), e);
}

const Antihole kC{0, 1, 2, 3, 4, 5, 6};

ColorState blank_state(int n, VertexSet domain)
{
    ColorState st;
    st.domain = domain;
    st.lists.assign(static_cast<std::size_t>(n), ColorSet::all());
    st.q1.assign(static_cast<std::size_t>(n), ColorSet{});
    st.base = Coloring(n);
    return st;
}

} // namespace

TEST(Phase2, BuildREmpty)
{
    EXPECT_TRUE(build_R(classify_attachment(named::antihole(7), kC)).empty());
}

TEST(Phase2, BuildRSingle)
{
    // 7 sees v1 v2 v3, 8 hangs off 7.
    const Graph g = antihole_plus({{1, 2, 3}, {}}, {{7, 8}});
    ASSERT_TRUE(ref::free_p6_c5(g));
    EXPECT_EQ(build_R(classify_attachment(g, kC)), (VertexSet{7}));
}

TEST(Phase2, BuildRPrefersMissingFourth)
{
    // Both 7 and 8 qualify for position 1; 8 also sees v4.
    const Graph a = antihole_plus({{1, 2, 3}, {1, 2, 3, 4}, {}}, {{7, 9}, {8, 9}, {7, 8}});
    ASSERT_TRUE(ref::free_p6_c5(a));
    EXPECT_EQ(build_R(classify_attachment(a, kC)), (VertexSet{7}));
    const Graph b = antihole_plus({{1, 2, 3, 4}, {1, 2, 3}, {}}, {{7, 9}, {8, 9}, {7, 8}});
    ASSERT_TRUE(ref::free_p6_c5(b));
    EXPECT_EQ(build_R(classify_attachment(b, kC)), (VertexSet{8}));
}

TEST(Phase2, BareAntiholeBaseColorings)
{
    const Graph g = named::antihole(7);
    const auto ctx = classify_attachment(g, kC);
    const auto bases = enumerate_base_colorings(g, ctx, {});
    // One singleton class and three pairs of consecutive vertices: 7 rotations.
    EXPECT_EQ(bases.size(), 7u);
    int count = 0;
    // Independent count: proper 4-colorings with colors in first-use order.
    std::vector<Color> c(7, 0);
    std::function<void(int, Color)> go = [&](int v, Color hi) {
        if (v == 7) {
            ++count;
            return;
        }
        for (Color x = 1; x <= std::min<Color>(4, hi + 1); ++x) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && c[u] == x)
                    ok = false;
            if (ok) {
                c[v] = x;
                go(v + 1, std::max(hi, x));
            }
        }
    };
    go(0, 0);
    EXPECT_EQ(count, 7);
    for (const auto & b : bases)
        EXPECT_TRUE(is_proper(g, b, true).proper);
}

TEST(Phase2, BaseColoringsAvoidSeedNeighbors)
{
    const Graph g = antihole_plus({{1, 2, 3}, {}}, {{7, 8}});
    const auto ctx = classify_attachment(g, kC);
    const auto bases = enumerate_base_colorings(g, ctx, {7});
    EXPECT_FALSE(bases.empty());
    for (const auto & b : bases)
        for (int i : {1, 2, 3})
            EXPECT_NE(b[7], b[i]);
}

TEST(Phase2, BaseColoringsEmptyOnK5)
{
    // Two adjacent vertices on the triangle v1 v3 v5.
    const Graph g = antihole_plus({{1, 3, 5}, {1, 3, 5}}, {{7, 8}});
    const auto ctx = classify_attachment(g, kC);
    EXPECT_TRUE(enumerate_base_colorings(g, ctx, {7, 8}).empty());
}

TEST(Phase2, PropagateExamples)
{
    ListAssignment l{ColorSet{1}, ColorSet{1, 2}};
    propagate(named::path(2), l);
    EXPECT_EQ(l[1], ColorSet{2});

    ListAssignment chain{ColorSet{1}, ColorSet{1, 2}, ColorSet{2, 3}, ColorSet{3, 4}};
    propagate(named::path(4), chain);
    EXPECT_EQ(chain[1], ColorSet{2});
    EXPECT_EQ(chain[2], ColorSet{3});
    EXPECT_EQ(chain[3], ColorSet{4});

    ListAssignment tri{ColorSet{1}, ColorSet{1}, ColorSet{2, 3, 4}};
    propagate(named::complete(3), tri);
    EXPECT_TRUE(tri[0].empty() || tri[1].empty());
}

TEST(Phase2, Q1Examples)
{
    // 0 sees the triangle 1 2 3.
    const Graph k4 = named::complete(4);
    ColorState st = blank_state(4, {0});
    compute_Q1(k4, st);
    EXPECT_FALSE(st.q1[0].contains(4));
    EXPECT_TRUE(st.q1[0].empty());

    // 0 sees a K4.
    const Graph k5 = named::complete(5);
    ColorState s5 = blank_state(5, {0});
    compute_Q1(k5, s5);
    EXPECT_EQ(s5.q1[0], ColorSet::all());

    // A neighbor with an empty list.
    ColorState se = blank_state(2, {0});
    se.lists[1] = ColorSet{};
    compute_Q1(named::path(2), se);
    EXPECT_EQ(se.q1[0], ColorSet::all());
}

TEST(Phase2, Q2Examples)
{
    // u=0, v=1 with no common neighbor.
    ColorState a = blank_state(3, {0, 1});
    compute_Q2(named::path(3), a);
    EXPECT_TRUE(a.q2.empty() || !a.q2.count({0, 1}));

    // Common neighborhood a triangle: 0 and 1 both see 2 3 4.
    std::vector<std::pair<Vertex, Vertex>> e{{2, 3}, {3, 4}, {2, 4}};
    for (Vertex w : {2, 3, 4}) {
        e.push_back({0, w});
        e.push_back({1, w});
    }
    const Graph tri(5, e);
    ColorState b = blank_state(5, {0, 1});
    compute_Q2(tri, b);
    for (Color i = 1; i <= 4; ++i)
        for (Color j = 1; j <= 4; ++j)
            if (i != j)
                EXPECT_TRUE(b.q2_forbids(0, 1, i, j));

    // Common neighbor 2 with list {1}.
    const Graph star(3, {{0, 2}, {1, 2}});
    ColorState c = blank_state(3, {0, 1});
    c.lists[2] = ColorSet{1};
    compute_Q2(star, c);
    EXPECT_TRUE(c.q2_forbids(0, 1, 1, 2));
    EXPECT_TRUE(c.q2_forbids(1, 0, 2, 1));
    EXPECT_FALSE(c.q2_forbids(0, 1, 3, 4));
    EXPECT_FALSE(c.q2_forbids(0, 1, 2, 3));
}

TEST(Phase2, Step6BareAntihole)
{
    const Graph g = named::antihole(7);
    const auto ctx = classify_attachment(g, kC);
    for (const auto & base : enumerate_base_colorings(g, ctx, {})) {
        ColorState st = initial_state(g, ctx, {}, base);
        propagate(g, st.lists);
        compute_Q1(g, st);
        compute_Q2(g, st);
        const auto good = solve_step6(g, st);
        ASSERT_TRUE(good);
        for (Vertex v = 0; v < 7; ++v)
            EXPECT_EQ((*good)[v], base[v]);
        EXPECT_TRUE(step6_conditions_hold(g, st, *good));
    }
}

TEST(Phase2, Step6EmptyListAndForbiddenPair)
{
    const Graph g(3, {{0, 2}, {1, 2}});
    ColorState st = blank_state(3, {0, 1});
    st.lists[0] = ColorSet{1};
    st.lists[1] = ColorSet{2};
    EXPECT_TRUE(solve_step6(g, st));
    st.q2[{0, 1}] = pair_bit(1, 2);
    EXPECT_FALSE(solve_step6(g, st));

    ColorState empty = blank_state(3, {0, 1});
    empty.lists[0] = ColorSet{};
    empty.lists[1] = ColorSet{2};
    EXPECT_FALSE(solve_step6(g, empty));

    ColorState wide = blank_state(3, {0, 1});
    EXPECT_THROW((void)solve_step6(g, wide), ContractError);
}

TEST(Phase2, Step6AgreesWithEnumeration)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 400; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = ref::random_graph(n, 0.4, rng);
        ColorState st = blank_state(n, VertexSet::range(n));
        for (Vertex v = 0; v < n; ++v) {
            ColorSet l;
            l.insert(static_cast<Color>(1 + rng() % 4));
            if (rng() & 1)
                l.insert(static_cast<Color>(1 + rng() % 4));
            st.lists[static_cast<std::size_t>(v)] = l;
            if (rng() % 5 == 0)
                st.q1[static_cast<std::size_t>(v)] = ColorSet::only(l.first());
        }
        for (int k = 0; k < 3; ++k) {
            const Vertex u = static_cast<Vertex>(rng() % n);
            const Vertex v = static_cast<Vertex>(rng() % n);
            if (u < v)
                st.q2[{u, v}] |= pair_bit(static_cast<Color>(1 + rng() % 4), static_cast<Color>(1 + rng() % 4));
        }
        bool any = false;
        Coloring c(n);
        std::function<void(int)> go = [&](int v) {
            if (any)
                return;
            if (v == n) {
                any = step6_conditions_hold(g, st, c);
                return;
            }
            for (Color x : st.lists[static_cast<std::size_t>(v)].to_vector()) {
                c.set(v, x);
                go(v + 1);
            }
        };
        go(0);
        const auto got = solve_step6(g, st);
        ASSERT_EQ(got.has_value(), any) << t;
        if (got)
            EXPECT_TRUE(step6_conditions_hold(g, st, *got));
    }
}

TEST(Phase2, ExtendWithNothingLeft)
{
    const Graph g = named::antihole(7);
    const auto ctx = classify_attachment(g, kC);
    const auto base = enumerate_base_colorings(g, ctx, {}).front();
    ColorState st = initial_state(g, ctx, {}, base);
    compute_Q1(g, st);
    compute_Q2(g, st);
    const auto good = solve_step6(g, st);
    ASSERT_TRUE(good);
    ExtensionTrace tr;
    EXPECT_EQ(extend_good_coloring(g, ctx, st, *good, &tr), *good);
    EXPECT_EQ(tr.one_color + tr.two_color + tr.singletons, 0);
}

TEST(Phase2, NiceStar)
{
    const Graph star(3, {{0, 1}, {0, 2}});
    const Coloring partial(std::vector<Color>{0, 1, 2});
    EXPECT_EQ(nice_violation(star, partial), "");
    const Coloring full = nice_complete(star, partial);
    EXPECT_TRUE(is_proper(star, full, true).proper);
    EXPECT_EQ(full[1], full[2]);
    EXPECT_LE(full[0], 2);
}

TEST(Phase2, NiceIdentityAndViolations)
{
    const Graph p = named::path(3);
    const Coloring total(std::vector<Color>{1, 2, 1});
    EXPECT_EQ(nice_complete(p, total), total);

    EXPECT_EQ(nice_violation(named::path(2), Coloring(2)), "N1");
    EXPECT_THROW((void)nice_complete(named::path(2), Coloring(2)), NiceColoringViolation);

    // Center 0 sees edges 1-2 (colors 1,2) and 3-4 (colors 3,4).
    const Graph bad(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
    const Coloring c(std::vector<Color>{0, 1, 2, 3, 4});
    EXPECT_EQ(nice_violation(bad, c), "N2");
    EXPECT_THROW((void)nice_complete(bad, c), NiceColoringViolation);
}

TEST(Phase2, NiceFuzz)
{
    std::mt19937_64 rng(31);
    int tried = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        oracle::GenSpec s;
        s.preset = seed % 2 ? "random" : "antihole7";
        s.seed = seed;
        s.n = 7 + static_cast<int>(seed % 8);
        const Graph g = oracle::generate_free(s);
        const auto col = oracle::brute_k_colorable(g, 4);
        if (!col)
            continue;
        Coloring partial = *col;
        VertexSet removed;
        for (Vertex v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0 && !g.row(v).intersects(removed)) {
                removed.insert(v);
                partial.set(v, kUncolored);
            }
        if (!nice_violation(g, partial).empty())
            continue;
        ++tried;
        const Coloring full = nice_complete(g, partial);
        EXPECT_TRUE(is_proper(g, full, true).proper) << seed;
    }
    EXPECT_GT(tried, 100);
}

TEST(Phase2, SolveBareAntihole)
{
    const Graph g = named::antihole(7);
    const auto r = phase2_solve(g, kC);
    ASSERT_TRUE(r.coloring);
    EXPECT_TRUE(is_proper(g, *r.coloring, true).proper);
    EXPECT_EQ(r.coloring->used(), ColorSet::all());
    EXPECT_EQ(r.stats.r_size, 0);
}

TEST(Phase2, RejectsNonAntihole)
{
    EXPECT_THROW((void)phase2_solve(named::antihole(9), kC), ContractError);
}

TEST(Phase2, AtomsMatchOracle)
{
    int atoms = 0, one_color = 0;
    for (const char * preset : {"antihole7", "hubs", "x3", "dirty"}) {
        for (std::uint64_t seed = 1; seed <= 150; ++seed) {
            oracle::GenSpec s;
            s.preset = preset;
            s.seed = seed;
            s.n = 11 + static_cast<int>(seed % 4);
            const Graph g = oracle::generate_free(s);
            const auto r = solve(g);
            for (const auto & comp : r.components) {
                const Graph & clean = comp.phase1.outcome.graph;
                for (const auto & a : comp.atoms) {
                    if (!a.antihole)
                        continue;
                    const Graph ag = induced(clean, a.vertices).graph;
                    const auto p = phase2_solve(ag, *a.antihole);
                    ++atoms;
                    ASSERT_EQ(p.coloring.has_value(), ref::k_colorable(ag, 4)) << preset << " " << seed;
                    if (p.coloring) {
                        EXPECT_TRUE(is_proper(ag, *p.coloring, true).proper);
                        EXPECT_TRUE(p.stats.cross_checked);
                        one_color += p.stats.extension.one_color > 0;
                    }
                    EXPECT_LE(p.stats.r_size, 7);
                    EXPECT_EQ(p.stats.z2_violations, 0);
                }
            }
        }
    }
    EXPECT_GT(atoms, 200);
    EXPECT_GT(one_color, 0);
}
