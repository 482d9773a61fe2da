#include "chroma4/phase2.hpp"

#include <deque>

#include "chroma4/twosat.hpp"

namespace chroma4 {

bool ColorState::q2_forbids(Vertex u, Vertex v, Color i, Color j) const
{
    if (u > v) {
        std::swap(u, v);
        std::swap(i, j);
    }
    auto it = q2.find({u, v});
    return it != q2.end() && (it->second & pair_bit(i, j)) != 0;
}

VertexSet build_R(const AntiholeContext & ctx)
{
    VertexSet r;
    for (int i = 0; i < 7; ++i) {
        const cmask::Mask need = cmask::run(i, 3);
        Vertex pick = -1;
        for (Vertex u : ctx.s) {
            const cmask::Mask m = ctx.mask(u);
            if ((m & need) != need || (m & cmask::at(i - 1)))
                continue;
            if (pick < 0 || ((ctx.mask(pick) & cmask::at(i + 3)) && !(m & cmask::at(i + 3))))
                pick = u;
        }
        if (pick >= 0)
            r.insert(pick);
    }
    return r;
}

void for_each_base_coloring(const Graph & g, const AntiholeContext & ctx, const VertexSet & r,
                            const std::function<bool(const Coloring &)> & fn)
{
    std::vector<Vertex> order(ctx.c.begin(), ctx.c.end());
    for (Vertex u : r)
        order.push_back(u);
    Coloring c(g.size());
    bool stop = false;

    std::function<void(std::size_t, Color)> go = [&](std::size_t k, Color highest) {
        if (stop)
            return;
        if (k == order.size()) {
            if (!fn(c))
                stop = true;
            return;
        }
        const Vertex v = order[k];
        const Color limit = std::min<Color>(4, static_cast<Color>(highest + 1));
        for (Color col = 1; col <= limit && !stop; ++col) {
            bool clash = false;
            for (std::size_t p = 0; p < k; ++p)
                if (c[order[p]] == col && g.adjacent(v, order[p])) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            c.set(v, col);
            go(k + 1, std::max(highest, col));
            c.set(v, kUncolored);
        }
    };
    go(0, 0);
}

std::vector<Coloring> enumerate_base_colorings(const Graph & g, const AntiholeContext & ctx, const VertexSet & r)
{
    std::vector<Coloring> out;
    for_each_base_coloring(g, ctx, r, [&](const Coloring & c) {
        out.push_back(c);
        return true;
    });
    return out;
}

ColorState initial_state(const Graph & g, const AntiholeContext & ctx, const VertexSet & r, const Coloring & base)
{
    ColorState st;
    st.r = r;
    st.base = base;
    st.domain = ctx.cset | (ctx.x - ctx.z);
    st.lists.assign(static_cast<std::size_t>(g.size()), ColorSet::all());
    for (Vertex v : ctx.cset | r)
        st.lists[static_cast<std::size_t>(v)] = ColorSet::only(base[v]);
    st.q1.assign(static_cast<std::size_t>(g.size()), ColorSet{});
    return st;
}

void propagate(const Graph & g, ListAssignment & lists)
{
    std::vector<bool> pushed(static_cast<std::size_t>(g.size()), false);
    std::deque<Vertex> work;
    for (Vertex v = 0; v < g.size(); ++v)
        if (lists[static_cast<std::size_t>(v)].size() == 1) {
            pushed[static_cast<std::size_t>(v)] = true;
            work.push_back(v);
        }
    while (!work.empty()) {
        const Vertex v = work.front();
        work.pop_front();
        const ColorSet lv = lists[static_cast<std::size_t>(v)];
        if (lv.size() != 1)
            continue;
        const Color i = lv.first();
        for (Vertex u : g.row(v)) {
            ColorSet & lu = lists[static_cast<std::size_t>(u)];
            if (!lu.contains(i))
                continue;
            lu.erase(i);
            if (lu.size() == 1 && !pushed[static_cast<std::size_t>(u)]) {
                pushed[static_cast<std::size_t>(u)] = true;
                work.push_back(u);
            }
        }
    }
}

namespace {

    ListAssignment restricted_lists(const InducedSubgraph & sub, const ListAssignment & lists, ColorSet drop)
    {
        ListAssignment out;
        out.reserve(sub.to_parent.size());
        for (Vertex p : sub.to_parent)
            out.push_back(lists[static_cast<std::size_t>(p)] - drop);
        return out;
    }

    bool has_empty(const ListAssignment & lists)
    {
        for (ColorSet l : lists)
            if (l.empty())
                return true;
        return false;
    }

    // A coloring of N(x) from the Step 4 test, in parent ids.
    std::optional<Coloring> neighborhood_3(const Graph & g, const ListAssignment & lists, Vertex x, Color i)
    {
        const InducedSubgraph sub = induced(g, g.row(x));
        const ListAssignment l = restricted_lists(sub, lists, ColorSet::only(i));
        if (has_empty(l))
            return std::nullopt;
        auto sol = list_color_3(sub.graph, l, ColorSet::all() - ColorSet::only(i));
        if (!sol)
            return std::nullopt;
        Coloring out(g.size());
        for (std::size_t k = 0; k < sub.to_parent.size(); ++k)
            out.set(sub.to_parent[k], (*sol)[static_cast<Vertex>(k)]);
        return out;
    }

    // A coloring of N(x) n N(y) from the Step 5 test, in parent ids.
    std::optional<Coloring> common_2(const Graph & g, const ListAssignment & lists, Vertex x, Vertex y, Color i,
                                     Color j)
    {
        const ColorSet drop = ColorSet::only(i) | ColorSet::only(j);
        const InducedSubgraph sub = induced(g, g.row(x) & g.row(y));
        const ListAssignment l = restricted_lists(sub, lists, drop);
        auto sol = list_color_2(sub.graph, l, ColorSet::all() - drop);
        if (!sol)
            return std::nullopt;
        Coloring out(g.size());
        for (std::size_t k = 0; k < sub.to_parent.size(); ++k)
            out.set(sub.to_parent[k], (*sol)[static_cast<Vertex>(k)]);
        return out;
    }

} // namespace

void compute_Q1(const Graph & g, ColorState & st)
{
    for (Vertex v : st.domain) {
        ColorSet q;
        for (Color i : st.lists[static_cast<std::size_t>(v)].to_vector())
            if (!neighborhood_3(g, st.lists, v, i))
                q.insert(i);
        st.q1[static_cast<std::size_t>(v)] = q;
    }
}

void compute_Q2(const Graph & g, ColorState & st)
{
    st.q2.clear();
    for (Vertex u : st.domain)
        for (Vertex v : st.domain) {
            if (v <= u)
                continue;
            const ColorSet lu = st.lists[static_cast<std::size_t>(u)];
            const ColorSet lv = st.lists[static_cast<std::size_t>(v)];
            if ((g.row(u) & g.row(v)).empty())
                continue;
            // The test depends only on the unordered pair {i, j}.
            std::map<std::uint16_t, bool> feasible;
            std::uint16_t bits = 0;
            for (Color i : lu.to_vector())
                for (Color j : lv.to_vector()) {
                    if (i == j)
                        continue;
                    const auto key = static_cast<std::uint16_t>(ColorSet::only(i).mask() | ColorSet::only(j).mask());
                    auto it = feasible.find(key);
                    if (it == feasible.end())
                        it = feasible.emplace(key, common_2(g, st.lists, u, v, i, j).has_value()).first;
                    if (!it->second)
                        bits |= pair_bit(i, j);
                }
            if (bits)
                st.q2[{u, v}] = bits;
        }
}

bool step6_conditions_hold(const Graph & g, const ColorState & st, const Coloring & c)
{
    for (Vertex u : st.domain) {
        const Color i = c[u];
        if (!st.lists[static_cast<std::size_t>(u)].contains(i) || st.q1[static_cast<std::size_t>(u)].contains(i))
            return false;
        for (Vertex v : st.domain) {
            if (v <= u)
                continue;
            if (g.adjacent(u, v) && c[u] == c[v])
                return false;
            if (st.q2_forbids(u, v, c[u], c[v]))
                return false;
        }
    }
    return true;
}

std::optional<Coloring> solve_step6(const Graph & g, const ColorState & st)
{
    const std::vector<Vertex> dv = st.domain.to_vector();
    std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t k = 0; k < dv.size(); ++k) {
        index[static_cast<std::size_t>(dv[k])] = static_cast<int>(k);
        const ColorSet l = st.lists[static_cast<std::size_t>(dv[k])];
        if (l.empty())
            return std::nullopt;
        if (l.size() > 2)
            throw ContractError("z2", "vertex " + std::to_string(dv[k]) + " has list " + l.str() + " at Step 6");
    }
    auto var = [&](Vertex x, Color i) { return 4 * index[static_cast<std::size_t>(x)] + (i - 1); };

    TwoSatInstance inst(4 * static_cast<int>(dv.size()));
    for (Vertex x : dv) {
        const auto l = st.lists[static_cast<std::size_t>(x)].to_vector();
        if (l.size() == 1)
            inst.add_unit(pos(var(x, l[0])));
        else
            inst.add_clause(pos(var(x, l[0])), pos(var(x, l[1])));
        for (Color i = 1; i <= 4; ++i)
            for (Color j = static_cast<Color>(i + 1); j <= 4; ++j)
                inst.add_clause(neg(var(x, i)), neg(var(x, j)));
        for (Color i : st.q1[static_cast<std::size_t>(x)].to_vector())
            inst.add_unit(neg(var(x, i)));
    }
    for (Vertex x : dv)
        for (Vertex y : g.row(x) & st.domain)
            if (x < y)
                for (Color i = 1; i <= 4; ++i)
                    inst.add_clause(neg(var(x, i)), neg(var(y, i)));
    for (const auto & [key, bits] : st.q2)
        for (Color i = 1; i <= 4; ++i)
            for (Color j = 1; j <= 4; ++j)
                if (bits & pair_bit(i, j))
                    inst.add_clause(neg(var(key.first, i)), neg(var(key.second, j)));

    auto model = solve_2sat(inst);
    if (!model)
        return std::nullopt;
    Coloring c(g.size());
    for (Vertex x : dv)
        for (Color i = 1; i <= 4; ++i)
            if ((*model)[static_cast<std::size_t>(var(x, i))]) {
                c.set(x, i);
                break;
            }
    if (!step6_conditions_hold(g, st, c))
        throw ContractError("step6", "2SAT model violates the Step 6 conditions");
    return c;
}

std::string nice_violation(const Graph & g, const Coloring & partial)
{
    VertexSet open;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!partial.colored(v))
            open.insert(v);
    if (!is_independent(g, open))
        return "N1";
    for (Vertex y : open) {
        VertexSet u, w;
        for (Vertex a : g.row(y))
            (partial[a] <= 2 ? u : w).insert(a);
        if (!is_independent(g, u) && !is_independent(g, w))
            return "N2";
    }
    return {};
}

Coloring nice_complete(const Graph & g, const Coloring & partial)
{
    if (auto bad = nice_violation(g, partial); !bad.empty())
        throw NiceColoringViolation(bad, "partial coloring is not nice");
    if (!is_proper(g, partial, false).proper)
        throw NiceColoringViolation("proper", "partial coloring has a monochromatic edge");

    Coloring c = partial;
    for (Vertex y = 0; y < g.size(); ++y) {
        if (c.colored(y))
            continue;
        VertexSet low, high;
        for (Vertex a : g.row(y))
            (c[a] <= 2 ? low : high).insert(a);
        Color a = 1, b = 2;
        VertexSet side = low;
        if (!is_independent(g, low)) {
            if (!is_independent(g, high))
                throw NiceColoringViolation("N2", "neighborhood of " + std::to_string(y) + " lost its split");
            a = 3;
            b = 4;
            side = high;
        }
        VertexSet u1, u2;
        for (Vertex v : side)
            (c[v] == a ? u1 : u2).insert(v);
        if (u1.empty()) {
            c.set(y, a);
            continue;
        }
        if (u2.empty()) {
            c.set(y, b);
            continue;
        }
        VertexSet v12;
        for (Vertex v = 0; v < g.size(); ++v)
            if (c[v] == a || c[v] == b)
                v12.insert(v);
        VertexSet d;
        for (const VertexSet & comp : components(g, v12))
            if (comp.intersects(u1))
                d |= comp;
        if (d.intersects(u2))
            throw InputNotFreeError("two-colored path between the color classes around " + std::to_string(y) +
                                    " (an induced P6 or C5)");
        for (Vertex v : d)
            c.set(v, c[v] == a ? b : a);
        c.set(y, a);
    }
    if (!is_proper(g, c, true).proper)
        throw ContractError("nice", "completion is not a proper coloring");
    return c;
}

Coloring extend_good_coloring(const Graph & g, const AntiholeContext & ctx, const ColorState & st,
                              const Coloring & good, ExtensionTrace * trace)
{
    ExtensionTrace local;
    ExtensionTrace & tr = trace ? *trace : local;
    tr = {};
    Coloring c = good;
    const VertexSet yz = ctx.y | ctx.z;

    VertexSet splus;
    for (Vertex v : ctx.s)
        if (st.lists[static_cast<std::size_t>(v)].size() == 2)
            splus.insert(v);

    for (const VertexSet & k : components(g, yz)) {
        const VertexSet aplus = set_neighbors(g, k) & splus;
        Vertex x = -1;
        if (!aplus.empty())
            x = aplus.first();
        else if (k.subset_of(ctx.z)) {
            for (int l = 0; l < 7; ++l)
                if (k.intersects(ctx.z_at[static_cast<std::size_t>(l)]))
                    x = ctx.v(l);
        }
        else {
            for (Vertex u : ctx.x - ctx.z)
                if (k.subset_of(g.row(u))) {
                    x = u;
                    break;
                }
            if (x < 0)
                throw ContractError("c3", "no vertex of X - Z is complete to a component of Y");
        }
        if (!k.subset_of(g.row(x)))
            throw ContractError("y1", "chosen vertex " + std::to_string(x) + " is not complete to its component");

        const Color cx = c[x];
        const ColorSet used = c.colors_on(aplus);
        std::optional<Coloring> part;
        if (used.size() <= 1) {
            part = neighborhood_3(g, st.lists, x, cx);
            if (!part)
                throw ContractError("step4", "neighborhood of " + std::to_string(x) + " has no list 3-coloring");
            ++tr.one_color;
        }
        else if (used.size() == 2) {
            Vertex y = -1;
            for (Vertex v : aplus)
                if (c[v] != cx) {
                    y = v;
                    break;
                }
            part = common_2(g, st.lists, x, y, cx, c[y]);
            if (!part)
                throw ContractError("step5", "common neighborhood of " + std::to_string(x) + "," + std::to_string(y) +
                                                 " has no list 2-coloring");
            ++tr.two_color;
        }
        else
            continue;
        for (Vertex v : k)
            c.set(v, (*part)[v]);
    }

    VertexSet open;
    for (Vertex v : yz)
        if (!c.colored(v))
            open.insert(v);

    if (open.empty())
        tr.route = ExtensionRoute::total;
    else {
        for (const VertexSet & k : components(g, open))
            if (k.size() > 1)
                throw ContractError("z7", "uncolored component with " + std::to_string(k.size()) + " vertices");
        tr.singletons = open.size();

        bool nested = true;
        ColorSet all_lists;
        for (Vertex u : splus) {
            const ColorSet lu = st.lists[static_cast<std::size_t>(u)];
            all_lists = all_lists | lu;
            for (Vertex v : splus) {
                const ColorSet lv = st.lists[static_cast<std::size_t>(v)];
                if (lu != lv && !(lu & lv).empty())
                    nested = false;
            }
        }
        if (nested) {
            c = nice_complete(g, c);
            tr.route = ExtensionRoute::nice;
        }
        else {
            const ColorSet missing = ColorSet::all() - all_lists;
            if (missing.size() != 1)
                throw ContractError("z6", "lists of S+ cover " + all_lists.str());
            for (Vertex v : open)
                c.set(v, missing.first());
            tr.route = ExtensionRoute::color_missing;
        }
    }

    const ProperVerdict pv = is_proper(g, c, true);
    if (!pv.proper)
        throw ContractError("extend", "extended coloring is not proper");
    for (Vertex v : st.domain)
        if (c[v] != good[v])
            throw ContractError("extend", "extension changed the good coloring");
    return c;
}

std::optional<Coloring> extend_by_search(const Graph & g, const AntiholeContext & ctx, const ColorState &,
                                         const Coloring & good)
{
    Coloring c = good;
    for (const VertexSet & k : components(g, ctx.y | ctx.z)) {
        const InducedSubgraph sub = induced(g, k);
        ListAssignment lists;
        for (Vertex p : sub.to_parent)
            lists.push_back(ColorSet::all() - c.colors_on(g.row(p) - k));
        auto sol = list_color_exact(sub.graph, lists);
        if (!sol)
            return std::nullopt;
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            c.set(sub.to_parent[i], (*sol)[static_cast<Vertex>(i)]);
    }
    if (!is_proper(g, c, true).proper)
        return std::nullopt;
    return c;
}

Phase2Result phase2_solve(const Graph & g, const Antihole & c, const Phase2Options & opt)
{
    Phase2Result res;
    const AntiholeContext ctx = classify_attachment(g, c);
    const VertexSet r = build_R(ctx);
    res.stats.r_size = r.size();
    if (r.size() > 7)
        throw ContractError("R", "more than 7 seed vertices");

    const std::vector<Coloring> bases = enumerate_base_colorings(g, ctx, r);
    res.stats.base_colorings = static_cast<int>(bases.size());

    for (std::size_t idx = 0; idx < bases.size(); ++idx) {
        ++res.stats.base_tried;
        ColorState st = initial_state(g, ctx, r, bases[idx]);
        propagate(g, st.lists);

        std::optional<Coloring> good;
        bool empty_list = false;
        for (Vertex v : st.domain)
            if (st.lists[static_cast<std::size_t>(v)].empty())
                empty_list = true;
        if (!empty_list) {
            compute_Q1(g, st);
            compute_Q2(g, st);
            good = solve_step6(g, st);
        }
        if (opt.on_base)
            opt.on_base(static_cast<int>(idx), st, good);
        if (!good)
            continue;

        ++res.stats.z2_checks;
        for (Vertex v : ctx.big | ctx.cset | r)
            if (st.lists[static_cast<std::size_t>(v)] != ColorSet::only((*good)[v]))
                ++res.stats.z2_violations;
        for (Vertex v : ctx.x - ctx.z)
            if (st.lists[static_cast<std::size_t>(v)].size() > 2)
                ++res.stats.z2_violations;
        if (res.stats.z2_violations)
            throw ContractError("z2", "list bounds fail on the good-coloring run");

        res.stats.good_index = static_cast<int>(idx);
        Coloring full = extend_good_coloring(g, ctx, st, *good, &res.stats.extension);
        if (opt.cross_check) {
            if (!extend_by_search(g, ctx, st, *good))
                throw ContractError("extend", "component search cannot extend a good coloring");
            res.stats.cross_checked = true;
        }
        res.coloring = std::move(full);
        return res;
    }
    return res;
}

} // namespace chroma4
