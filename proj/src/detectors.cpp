#include "chroma4/detectors.hpp"

#include <algorithm>
#include <bit>

namespace chroma4 {

namespace {

    VertexSet closed_row(const Graph & g, Vertex v) { return g.row(v) | VertexSet{v}; }

    struct PathSearch {
        const Graph & g;
        int k;
        Witness path;
        std::optional<Witness> found;

        // blocked: closed neighborhoods of every path vertex except the last.
        void extend(const VertexSet & blocked)
        {
            if (static_cast<int>(path.size()) == k) {
                found = path;
                return;
            }
            Vertex last = path.back();
            VertexSet cands = g.row(last) - blocked;
            VertexSet next_blocked = blocked | closed_row(g, last);
            for (Vertex w : cands) {
                path.push_back(w);
                extend(next_blocked);
                path.pop_back();
                if (found)
                    return;
            }
        }
    };

    struct CycleSearch {
        const Graph & g;
        int k;
        const std::function<bool(const Witness &)> & fn;
        Witness path;
        VertexSet allowed;
        bool stop = false;

        // inner: closed neighborhoods of path[1..size-2].
        void extend(const VertexSet & inner)
        {
            const int d = static_cast<int>(path.size());
            const Vertex v0 = path.front();
            const Vertex last = path.back();
            if (d == k) {
                if (!fn(path))
                    stop = true;
                return;
            }
            VertexSet cands = g.row(last) & allowed;
            if (d == 1) {
                // nothing else to exclude
            }
            else if (d < k - 1) {
                cands -= inner;
                cands -= closed_row(g, v0);
            }
            else {
                cands &= g.row(v0);
                cands -= inner;
            }
            VertexSet next_inner = d >= 2 ? inner | closed_row(g, last) : inner;
            for (Vertex w : cands) {
                if (d == k - 1 && w < path[1])
                    continue;
                path.push_back(w);
                extend(next_inner);
                path.pop_back();
                if (stop)
                    return;
            }
        }
    };

    bool induces_path_order(const Graph & g, const Witness & w, bool closed)
    {
        const int k = static_cast<int>(w.size());
        VertexSet seen;
        for (Vertex v : w) {
            if (v < 0 || v >= g.size() || seen.contains(v))
                return false;
            seen.insert(v);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool consecutive = j == i + 1 || (closed && i == 0 && j == k - 1);
                if (g.adjacent(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]) != consecutive)
                    return false;
            }
        return true;
    }

    std::vector<cmask::Mask> build_triangles()
    {
        std::vector<cmask::Mask> out;
        auto adj = [](int i, int j) {
            int d = std::abs(i - j);
            return d >= 2 && d <= 5;
        };
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                for (int l = j + 1; l < 7; ++l)
                    if (adj(i, j) && adj(j, l) && adj(i, l))
                        out.push_back(static_cast<cmask::Mask>(cmask::at(i) | cmask::at(j) | cmask::at(l)));
        return out;
    }

} // namespace

std::optional<Witness> find_induced_path(const Graph & g, int k)
{
    if (k < 1)
        throw UsageError("path length must be at least 1");
    PathSearch search{g, k, {}, std::nullopt};
    for (Vertex v = 0; v < g.size() && !search.found; ++v) {
        search.path = {v};
        search.extend(VertexSet{});
    }
    return search.found;
}

void for_each_induced_cycle(const Graph & g, int k, const std::function<bool(const Witness &)> & fn)
{
    if (k < 3)
        throw UsageError("cycle length must be at least 3");
    for (Vertex v0 = 0; v0 < g.size(); ++v0) {
        CycleSearch search{g, k, fn, {v0}, g.vertices() - VertexSet::range(v0 + 1)};
        search.extend(VertexSet{});
        if (search.stop)
            return;
    }
}

std::optional<Witness> find_induced_cycle(const Graph & g, int k)
{
    std::optional<Witness> out;
    for_each_induced_cycle(g, k, [&](const Witness & w) {
        out = w;
        return false;
    });
    return out;
}

std::optional<VertexSet> find_clique(const Graph & g, int k)
{
    if (k < 1)
        throw UsageError("clique size must be at least 1");
    std::optional<VertexSet> found;
    std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet cur, VertexSet cands) {
        if (cur.size() == k) {
            found = cur;
            return;
        }
        if (cur.size() + cands.size() < k)
            return;
        for (Vertex v : cands) {
            VertexSet next = cur;
            next.insert(v);
            grow(next, cands & g.row(v) & (g.vertices() - VertexSet::range(v + 1)));
            if (found)
                return;
        }
    };
    grow(VertexSet{}, g.vertices());
    return found;
}

std::optional<Witness> find_antihole(const Graph & g, int k)
{
    if (k < 5)
        throw UsageError("antihole size must be at least 5");
    return find_induced_cycle(complement(g), k);
}

bool verify_induced_path(const Graph & g, const Witness & w) { return !w.empty() && induces_path_order(g, w, false); }

bool verify_induced_cycle(const Graph & g, const Witness & w)
{
    return w.size() >= 3 && induces_path_order(g, w, true);
}

bool verify_antihole(const Graph & g, const Witness & w)
{
    return w.size() >= 5 && induces_path_order(complement(g), w, true);
}

std::optional<ForbiddenWitness> find_forbidden(const Graph & g)
{
    if (auto p = find_induced_path(g, 6))
        return ForbiddenWitness{"P6", *p};
    if (auto c = find_induced_cycle(g, 5))
        return ForbiddenWitness{"C5", *c};
    return std::nullopt;
}

std::vector<Antihole> enumerate_antiholes7(const Graph & g)
{
    std::vector<Antihole> out;
    for_each_induced_cycle(complement(g), 7, [&](const Witness & w) {
        Antihole a{};
        std::copy(w.begin(), w.end(), a.begin());
        out.push_back(a);
        return true;
    });
    return out;
}

std::optional<Antihole> find_antihole7(const Graph & g)
{
    auto w = find_antihole(g, 7);
    if (!w)
        return std::nullopt;
    Antihole a{};
    std::copy(w->begin(), w->end(), a.begin());
    return a;
}

namespace cmask {
    Mask run(int i, int len)
    {
        Mask m = 0;
        for (int t = 0; t < len; ++t)
            m |= at(i + t);
        return m;
    }

    bool is_run(Mask m, int len)
    {
        if (len == 7)
            return m == kFull;
        for (int i = 0; i < 7; ++i)
            if (m == run(i, len))
                return true;
        return false;
    }

    bool has_run(Mask m, int len)
    {
        for (int i = 0; i < 7; ++i)
            if ((m & run(i, len)) == run(i, len))
                return true;
        return false;
    }

    bool has_triangle(Mask m)
    {
        static const std::vector<Mask> triangles = build_triangles();
        return std::any_of(triangles.begin(), triangles.end(), [m](Mask t) { return (m & t) == t; });
    }

    int count(Mask m) { return std::popcount(static_cast<unsigned>(m)); }
}

AntiholeContext classify_attachment(const Graph & g, const Antihole & c)
{
    if (!verify_antihole(g, Witness(c.begin(), c.end())))
        throw ContractError("antihole", "tuple does not induce a 7-antihole");

    AntiholeContext ctx;
    ctx.c = c;
    for (Vertex v : c)
        ctx.cset.insert(v);
    ctx.on_c.assign(static_cast<std::size_t>(g.size()), 0);
    for (int i = 0; i < 7; ++i)
        for (Vertex u : g.row(c[static_cast<std::size_t>(i)]))
            ctx.on_c[static_cast<std::size_t>(u)] |= cmask::at(i);

    ctx.x = set_neighbors(g, ctx.cset);
    ctx.y = g.vertices() - ctx.cset - ctx.x;
    for (Vertex u : ctx.x) {
        cmask::Mask m = ctx.mask(u);
        if (cmask::count(m) == 1) {
            ctx.z.insert(u);
            ctx.z_at[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(m)))].insert(u);
        }
        else if (cmask::has_triangle(m)) {
            ctx.big.insert(u);
        }
        else {
            ctx.small.insert(u);
        }
    }
    VertexSet yz = ctx.y | ctx.z;
    for (Vertex u : ctx.small)
        if (g.row(u).intersects(yz))
            ctx.s.insert(u);
    return ctx;
}

std::vector<Lemma1Violation> assert_lemma1(const Graph & g, const AntiholeContext & ctx)
{
    using cmask::at;
    std::vector<Lemma1Violation> out;
    auto report = [&](std::string prop, Witness w) { out.push_back({std::move(prop), std::move(w)}); };
    const VertexSet yz = ctx.y | ctx.z;

    auto leaf_index = [&](Vertex u) {
        for (int l = 0; l < 7; ++l)
            if (ctx.z_at[static_cast<std::size_t>(l)].contains(u))
                return l;
        return -1;
    };

    for (Vertex x : ctx.x) {
        const cmask::Mask m = ctx.mask(x);
        auto has = [&](int i) { return (m & at(i)) != 0; };

        // (1)
        for (int i = 0; i < 7; ++i)
            if (has(i) && has(i + 1) && !has(i - 1) && !has(i + 2))
                report("1", {x, ctx.v(i), ctx.v(i + 1)});

        // (2)
        if (!ctx.big.contains(x)) {
            bool ok = cmask::is_run(m, 3) || cmask::is_run(m, 4);
            for (int i = 0; i < 7 && !ok; ++i)
                if (!has(i - 1) && !has(i + 2) && (has(i) != has(i + 1)))
                    ok = true;
            if (!ok)
                report("2", {x});
        }

        // (3.x): x outside Z_l with a neighbor u in Y u Z_l.
        const int x_leaf = leaf_index(x);
        for (Vertex u : g.row(x) & yz) {
            const int u_leaf = leaf_index(u);
            if (u_leaf >= 0 && u_leaf == x_leaf)
                continue;
            if (ctx.z.contains(x))
                report("3.1", {x, u});
            for (int i = 0; i < 7; ++i) {
                if (has(i) && !has(i - 1) && !has(i + 1) && !has(i + 2)) {
                    bool ok = u_leaf >= 0 && (u_leaf == i || u_leaf == (i + 1) % 7 || u_leaf == (i + 2) % 7);
                    if (!ok)
                        report("3.2", {x, u, ctx.v(i)});
                }
            }
            // Mixed on an edge uv inside Y u Z_l for an admissible l.
            VertexSet side = ctx.y;
            if (u_leaf >= 0)
                side |= ctx.z_at[static_cast<std::size_t>(u_leaf)];
            else
                side |= x_leaf >= 0 ? ctx.z - ctx.z_at[static_cast<std::size_t>(x_leaf)] : ctx.z;
            for (Vertex v : (g.row(u) & side) - g.row(x) - VertexSet{x})
                if (!cmask::has_run(m, 5))
                    report("3.3", {x, u, v});
        }
    }

    for (Vertex x : ctx.small) {
        if (!g.row(x).intersects(yz))
            continue;
        const cmask::Mask m = ctx.mask(x);
        auto has = [&](int i) { return (m & at(i)) != 0; };
        // (4.1)
        if (!(cmask::is_run(m, 3) || cmask::is_run(m, 4)))
            report("4.1", {x});
        for (int j = 0; j < 7; ++j) {
            if (has(j))
                continue;
            const VertexSet & zj = ctx.z_at[static_cast<std::size_t>(j)];
            // (4.2.1)
            if (g.row(x).intersects(zj) && !(has(j + 2) && has(j + 3) && has(j - 3) && has(j - 2)))
                report("4.2.1", {x, ctx.v(j), (g.row(x) & zj).first()});
            // (4.2.2)
            if (!zj.empty() && (has(j - 1) || has(j + 1)))
                report("4.2.2", {x, ctx.v(j), zj.first()});
        }
    }

    // (5)
    for (Vertex a : ctx.s)
        for (Vertex b : ctx.s) {
            if (b <= a || g.adjacent(a, b))
                continue;
            const cmask::Mask ma = ctx.mask(a);
            const cmask::Mask mb = ctx.mask(b);
            if ((ma & mb) != ma && (ma & mb) != mb)
                report("5", {a, b});
        }
    return out;
}

std::string to_string(CleanVerdict v)
{
    switch (v) {
    case CleanVerdict::clean: return "clean";
    case CleanVerdict::has_k5: return "K5";
    case CleanVerdict::has_antihole9: return "antihole9";
    case CleanVerdict::violates_c1: return "C1";
    case CleanVerdict::violates_c2: return "C2";
    case CleanVerdict::dirty: return "dirty";
    }
    return "?";
}

CleanReport check_antihole_clean(const Graph & g, const Antihole & c)
{
    CleanReport report;
    const AntiholeContext ctx = classify_attachment(g, c);
    report.antihole = c;

    for (Vertex u : ctx.x)
        if (ctx.mask(u) == cmask::kFull) {
            report.verdict = CleanVerdict::violates_c1;
            report.witness = {u};
            return report;
        }

    std::vector<Vertex> six;
    for (Vertex u : ctx.x)
        if (cmask::count(ctx.mask(u)) == 6)
            six.push_back(u);
    for (std::size_t i = 0; i < six.size(); ++i)
        for (std::size_t j = i + 1; j < six.size(); ++j)
            if (ctx.mask(six[i]) != ctx.mask(six[j])) {
                report.verdict = CleanVerdict::violates_c2;
                report.witness = {six[i], six[j]};
                return report;
            }

    const auto comps = components(g, ctx.y);
    for (const VertexSet & k : comps) {
        if (is_clique(g, set_neighbors(g, k)))
            continue;
        VertexSet common = g.vertices();
        for (Vertex v : k)
            common &= g.row(v);
        if (!common.empty())
            continue;
        report.verdict = CleanVerdict::dirty;
        report.component = k;
        return report;
    }
    report.verdict = CleanVerdict::clean;
    report.checked.push_back({c, static_cast<int>(comps.size())});
    return report;
}

CleanReport check_clean(const Graph & g)
{
    CleanReport report;
    if (auto k5 = find_clique(g, 5)) {
        report.verdict = CleanVerdict::has_k5;
        report.witness = k5->to_vector();
        return report;
    }
    if (auto a9 = find_antihole(g, 9)) {
        report.verdict = CleanVerdict::has_antihole9;
        report.witness = *a9;
        return report;
    }

    for (const Antihole & c : enumerate_antiholes7(g)) {
        CleanReport one = check_antihole_clean(g, c);
        if (one.verdict != CleanVerdict::clean) {
            one.checked = std::move(report.checked);
            return one;
        }
        report.checked.push_back(one.checked.front());
    }
    report.verdict = CleanVerdict::clean;
    report.antihole = {};
    return report;
}

bool verify_clean_witness(const Graph & g, const CleanReport & r)
{
    const Witness c(r.antihole.begin(), r.antihole.end());
    auto mask_of = [&](Vertex u) {
        cmask::Mask m = 0;
        for (int i = 0; i < 7; ++i)
            if (g.adjacent(u, r.antihole[static_cast<std::size_t>(i)]))
                m |= cmask::at(i);
        return m;
    };
    switch (r.verdict) {
    case CleanVerdict::clean: return true;
    case CleanVerdict::has_k5: return r.witness.size() == 5 && is_clique(g, VertexSet::from(r.witness));
    case CleanVerdict::has_antihole9: return r.witness.size() == 9 && verify_antihole(g, r.witness);
    case CleanVerdict::violates_c1:
        return verify_antihole(g, c) && r.witness.size() == 1 && mask_of(r.witness[0]) == cmask::kFull;
    case CleanVerdict::violates_c2:
        return verify_antihole(g, c) && r.witness.size() == 2 && cmask::count(mask_of(r.witness[0])) == 6 &&
               cmask::count(mask_of(r.witness[1])) == 6 && mask_of(r.witness[0]) != mask_of(r.witness[1]);
    case CleanVerdict::dirty: {
        if (!verify_antihole(g, c) || r.component.empty())
            return false;
        const VertexSet cset = VertexSet::from(c);
        const VertexSet rest = g.vertices() - cset - set_neighbors(g, cset);
        if (!r.component.subset_of(rest))
            return false;
        auto comps = components(g, rest);
        if (std::find(comps.begin(), comps.end(), r.component) == comps.end())
            return false;
        VertexSet common = g.vertices();
        for (Vertex v : r.component)
            common &= g.row(v);
        return !is_clique(g, set_neighbors(g, r.component)) && common.empty();
    }
    }
    return false;
}

void check_detector_size(const Graph & g, bool force)
{
    if (!force && g.size() > kDetectorCeiling)
        throw UsageError("graph has " + std::to_string(g.size()) + " vertices; structural searches are capped at " +
                         std::to_string(kDetectorCeiling) + " (use --force)");
}

} // namespace chroma4
