#include "chroma4/cutsets.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace chroma4 {

MinimalOrdering mcs_m(const Graph & g)
{
    const int n = g.size();
    MinimalOrdering out;
    out.alpha.assign(static_cast<std::size_t>(n), -1);
    out.fill.assign(static_cast<std::size_t>(n), VertexSet{});
    out.generator.assign(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v)
        out.fill[static_cast<std::size_t>(v)] = g.row(v);

    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet unnumbered = g.vertices();
    int previous = -1;

    for (int i = n - 1; i >= 0; --i) {
        Vertex v = -1;
        for (Vertex u : unnumbered)
            if (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)])
                v = u;
        const int wv = weight[static_cast<std::size_t>(v)];
        if (wv <= previous)
            out.generator[static_cast<std::size_t>(v)] = true;
        previous = wv;
        out.alpha[static_cast<std::size_t>(v)] = i;
        unnumbered.erase(v);

        // reach[u]: smallest possible maximum interior weight over paths
        // v .. u whose interior is unnumbered (-1 for direct neighbors).
        std::vector<int> reach(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
        VertexSet done;
        for (Vertex u : g.row(v) & unnumbered)
            reach[static_cast<std::size_t>(u)] = -1;
        while (true) {
            Vertex best = -1;
            for (Vertex u : unnumbered - done)
                if (reach[static_cast<std::size_t>(u)] != std::numeric_limits<int>::max() &&
                    (best < 0 || reach[static_cast<std::size_t>(u)] < reach[static_cast<std::size_t>(best)]))
                    best = u;
            if (best < 0)
                break;
            done.insert(best);
            const int through = std::max(reach[static_cast<std::size_t>(best)], weight[static_cast<std::size_t>(best)]);
            for (Vertex u : (g.row(best) & unnumbered) - done)
                reach[static_cast<std::size_t>(u)] = std::min(reach[static_cast<std::size_t>(u)], through);
        }
        for (Vertex u : unnumbered) {
            if (reach[static_cast<std::size_t>(u)] < weight[static_cast<std::size_t>(u)]) {
                ++weight[static_cast<std::size_t>(u)];
                out.fill[static_cast<std::size_t>(u)].insert(v);
                out.fill[static_cast<std::size_t>(v)].insert(u);
            }
        }
    }
    return out;
}

DecompositionTree clique_cutset_decompose(const Graph & g)
{
    if (!is_connected(g))
        throw UsageError("clique-cutset decomposition needs a connected graph");

    const MinimalOrdering order = mcs_m(g);
    std::vector<Vertex> by_alpha(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v)
        by_alpha[static_cast<std::size_t>(order.alpha[static_cast<std::size_t>(v)])] = v;

    DecompositionTree tree;
    VertexSet remaining = g.vertices();
    for (Vertex x : by_alpha) {
        if (!order.generator[static_cast<std::size_t>(x)] || !remaining.contains(x))
            continue;
        VertexSet sep;
        for (Vertex u : order.fill[static_cast<std::size_t>(x)])
            if (order.alpha[static_cast<std::size_t>(u)] > order.alpha[static_cast<std::size_t>(x)])
                sep.insert(u);
        if (!is_clique(g, sep))
            continue;
        VertexSet comp;
        for (const VertexSet & c : components(g, remaining - sep))
            if (c.contains(x))
                comp = c;
        // A separator that does not split the remaining graph yields no atom.
        if ((remaining - sep - comp).empty())
            continue;
        tree.atoms.push_back(comp | sep);
        tree.separators.push_back(sep);
        remaining -= comp;
    }
    tree.atoms.push_back(remaining);
    tree.separators.emplace_back();

    tree.parent.assign(tree.atoms.size(), -1);
    for (std::size_t k = 0; k + 1 < tree.atoms.size(); ++k) {
        for (std::size_t j = k + 1; j < tree.atoms.size(); ++j)
            if (tree.separators[k].subset_of(tree.atoms[j])) {
                tree.parent[k] = static_cast<int>(j);
                break;
            }
        if (tree.parent[k] < 0)
            throw ContractError("decompose", "separator not contained in any later atom");
    }
    return tree;
}

std::optional<std::pair<Vertex, Vertex>> x2_violation(const Graph & g, const AntiholeContext & ctx, const VertexSet & s)
{
    for (Vertex a : s)
        for (Vertex b : s) {
            if (b <= a)
                continue;
            const auto ma = ctx.mask(a);
            const auto mb = ctx.mask(b);
            const bool nested = (ma & mb) == ma || (ma & mb) == mb;
            if (g.adjacent(a, b) == nested)
                return std::pair{a, b};
        }
    return std::nullopt;
}

ChromaticPartition find_chromatic_partition(const Graph & g, const AntiholeContext & ctx, const VertexSet & k)
{
    ChromaticPartition p;
    p.k = k;
    p.s = set_neighbors(g, k);
    if (p.s.empty() || !p.s.subset_of(ctx.x))
        throw ContractError("x1", "N(K) is empty or leaves N(C)");

    for (Vertex u : p.s)
        if (!cmask::has_run(ctx.mask(u), 5))
            throw ContractError("x1", "vertex " + std::to_string(u) + " lacks 5 consecutive antihole neighbors");
    if (auto bad = x2_violation(g, ctx, p.s))
        throw ContractError("x2", "pair " + std::to_string(bad->first) + "," + std::to_string(bad->second) +
                                      " breaks the adjacency/nesting dichotomy");

    Vertex six = -1;
    for (Vertex u : p.s)
        if (cmask::count(ctx.mask(u)) >= 6) {
            six = u;
            break;
        }

    if (six < 0) {
        p.rule = "x3";
        std::map<cmask::Mask, VertexSet> classes;
        for (Vertex u : p.s)
            classes[ctx.mask(u)].insert(u);
        for (const auto & [mask, part] : classes)
            p.parts.push_back(part);
    }
    else {
        p.rule = "x4";
        const cmask::Mask m6 = ctx.mask(six);
        if (m6 == cmask::kFull)
            throw ContractError("x4", "vertex complete to the antihole");
        const int missing = std::countr_zero(static_cast<unsigned>(cmask::kFull & ~m6));
        // Forced coloring after rotating the missing position to v0.
        static constexpr std::array<Color, 7> forced{1, 2, 2, 3, 3, 4, 4};
        auto color_at = [&](int pos) { return forced[static_cast<std::size_t>(((pos - missing) % 7 + 7) % 7)]; };
        std::array<VertexSet, 4> by_color;
        for (Vertex u : p.s) {
            ColorSet seen;
            for (int i = 0; i < 7; ++i)
                if (ctx.mask(u) & cmask::at(i))
                    seen.insert(color_at(i));
            const ColorSet absent = ColorSet::all() - seen;
            if (absent.empty())
                throw ContractError("x4", "vertex " + std::to_string(u) + " sees all four antihole colors");
            if (absent.size() > 1)
                throw ContractError("x1", "vertex " + std::to_string(u) + " misses two antihole colors");
            by_color[static_cast<std::size_t>(absent.first() - 1)].insert(u);
        }
        for (const VertexSet & part : by_color)
            if (!part.empty())
                p.parts.push_back(part);
    }

    std::sort(p.parts.begin(), p.parts.end(), [](const VertexSet & a, const VertexSet & b) { return a.first() < b.first(); });

    const VertexSet rest = g.vertices() - p.s;
    for (const VertexSet & comp : components(g, rest))
        if (comp.contains(ctx.c[0]))
            p.k_prime = comp;

    if (auto broken = check_partition(g, p); !broken.empty())
        throw ContractError(p.rule, broken);
    return p;
}

std::string check_partition(const Graph & g, const ChromaticPartition & p)
{
    VertexSet covered;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const VertexSet & a = p.parts[i];
        if (a.empty())
            return "empty part";
        if (covered.intersects(a))
            return "parts overlap";
        covered |= a;
        if (!is_independent(g, a))
            return "part " + std::to_string(i) + " is not independent";
        for (std::size_t j = i + 1; j < p.parts.size(); ++j)
            if (!is_complete_to(g, a, p.parts[j]))
                return "parts " + std::to_string(i) + " and " + std::to_string(j) + " are not complete";
    }
    if (covered != p.s)
        return "parts do not cover the cutset";

    const auto comps = components(g, g.vertices() - p.s);
    auto is_comp = [&](const VertexSet & c) { return std::find(comps.begin(), comps.end(), c) != comps.end(); };
    if (!is_comp(p.k) || !is_comp(p.k_prime) || p.k == p.k_prime)
        return "separator witness components are not two distinct components of G - S";
    for (Vertex u : p.s)
        if (!g.row(u).intersects(p.k) || !g.row(u).intersects(p.k_prime))
            return "vertex " + std::to_string(u) + " does not see both witness components";
    return {};
}

std::pair<Graph, ContractionRecord> contract_chromatic(const Graph & g, const ChromaticPartition & p)
{
    if (auto broken = check_partition(g, p); !broken.empty())
        throw ContractError("contract", broken);

    ContractionRecord rec;
    rec.parts = p.parts;
    rec.parent_size = g.size();
    rec.to_child.assign(static_cast<std::size_t>(g.size()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!p.s.contains(v))
            rec.to_child[static_cast<std::size_t>(v)] = next++;
    for (const VertexSet & part : p.parts) {
        rec.new_ids.push_back(next);
        for (Vertex v : part)
            rec.to_child[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    rec.child_size = next;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = rec.to_child[static_cast<std::size_t>(u)];
        Vertex b = rec.to_child[static_cast<std::size_t>(v)];
        if (a != b)
            edges.emplace_back(a, b);
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v = 0; v < g.size(); ++v)
            if (!p.s.contains(v))
                labels.push_back(g.label(v));
        for (const VertexSet & part : p.parts) {
            std::string l = "{";
            for (Vertex v : part)
                l += (l.size() > 1 ? "," : "") + g.label(v);
            labels.push_back(l + "}");
        }
    }
    Graph child(next, edges, std::move(labels));

    for (std::size_t i = 0; i < rec.new_ids.size(); ++i)
        for (std::size_t j = i + 1; j < rec.new_ids.size(); ++j)
            if (!child.adjacent(rec.new_ids[i], rec.new_ids[j]))
                throw ContractError("contract", "contracted parts are not pairwise adjacent");
    return {std::move(child), std::move(rec)};
}

Coloring expand_record(const Coloring & child, const ContractionRecord & rec)
{
    if (child.size() != rec.child_size)
        throw UsageError("coloring does not match the contracted graph");
    Coloring parent(rec.parent_size);
    for (Vertex v = 0; v < rec.parent_size; ++v)
        parent.set(v, child[rec.to_child[static_cast<std::size_t>(v)]]);
    return parent;
}

} // namespace chroma4
