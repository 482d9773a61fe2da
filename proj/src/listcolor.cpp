#include "chroma4/listcolor.hpp"

#include "chroma4/twosat.hpp"

namespace chroma4 {

namespace {

    struct Search {
        const Graph & g;

        // Assigns forced and dominated vertices until nothing changes.
        // Returns false on an emptied list.
        bool settle(ListAssignment & lists, Coloring & c) const
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (Vertex v = 0; v < g.size(); ++v) {
                    if (c.colored(v))
                        continue;
                    ColorSet l = lists[static_cast<std::size_t>(v)];
                    if (l.empty())
                        return false;
                    Color pick = kUncolored;
                    if (l.size() == 1) {
                        pick = l.first();
                    }
                    else {
                        ColorSet contested;
                        for (Vertex u : g.row(v))
                            if (!c.colored(u))
                                contested = contested | lists[static_cast<std::size_t>(u)];
                        pick = (l - contested).first();
                    }
                    if (pick == kUncolored)
                        continue;
                    c.set(v, pick);
                    lists[static_cast<std::size_t>(v)] = ColorSet::only(pick);
                    for (Vertex u : g.row(v))
                        if (!c.colored(u))
                            lists[static_cast<std::size_t>(u)].erase(pick);
                    changed = true;
                }
            }
            return true;
        }

        std::optional<Coloring> run(ListAssignment lists, Coloring c) const
        {
            if (!settle(lists, c))
                return std::nullopt;
            Vertex best = -1;
            for (Vertex v = 0; v < g.size(); ++v) {
                if (c.colored(v))
                    continue;
                if (best < 0)
                    best = v;
                else {
                    int lv = lists[static_cast<std::size_t>(v)].size();
                    int lb = lists[static_cast<std::size_t>(best)].size();
                    if (lv < lb || (lv == lb && g.degree(v) > g.degree(best)))
                        best = v;
                }
            }
            if (best < 0)
                return c;
            for (Color col : lists[static_cast<std::size_t>(best)].to_vector()) {
                ListAssignment next = lists;
                next[static_cast<std::size_t>(best)] = ColorSet::only(col);
                if (auto done = run(next, c))
                    return done;
            }
            return std::nullopt;
        }
    };

    void check_lists(const Graph & g, const ListAssignment & lists, ColorSet palette, int max_palette)
    {
        if (static_cast<int>(lists.size()) != g.size())
            throw UsageError("list assignment size does not match the graph");
        if (palette.size() > max_palette)
            throw UsageError("palette " + palette.str() + " has more than " + std::to_string(max_palette) + " colors");
        for (ColorSet l : lists)
            if (!l.subset_of(palette))
                throw UsageError("list " + l.str() + " is not inside palette " + palette.str());
    }

} // namespace

bool respects_lists(const Graph & g, const Coloring & c, const ListAssignment & lists)
{
    if (c.size() != g.size() || !is_proper(g, c, true).proper)
        return false;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!lists[static_cast<std::size_t>(v)].contains(c[v]))
            return false;
    return true;
}

std::optional<Coloring> list_color_exact(const Graph & g, const ListAssignment & lists)
{
    if (static_cast<int>(lists.size()) != g.size())
        throw UsageError("list assignment size does not match the graph");
    auto out = Search{g}.run(lists, Coloring(g.size()));
    if (out && !respects_lists(g, *out, lists))
        throw ContractError("listcolor", "search returned a coloring that breaks the lists");
    return out;
}

std::optional<Coloring> list_color_3(const Graph & g, const ListAssignment & lists, ColorSet palette)
{
    check_lists(g, lists, palette, 3);
    return list_color_exact(g, lists);
}

std::optional<Coloring> list_color_2(const Graph & g, const ListAssignment & lists, ColorSet palette)
{
    check_lists(g, lists, palette, 2);
    for (ColorSet l : lists)
        if (l.empty())
            return std::nullopt;
    if (g.size() == 0)
        return Coloring(0);

    // Variable true means the lower palette color. A one-color palette still
    // works: its single color is `low`, and any list is then {low}.
    const auto colors = palette.to_vector();
    const Color low = colors.front();
    const Color high = colors.back();

    TwoSatInstance inst(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        ColorSet l = lists[static_cast<std::size_t>(v)];
        if (l.size() == 1)
            inst.add_unit(l.contains(low) ? pos(v) : neg(v));
    }
    for (auto [u, v] : g.edges()) {
        inst.add_clause(neg(u), neg(v));
        inst.add_clause(pos(u), pos(v));
    }
    if (low == high)
        for (Vertex v = 0; v < g.size(); ++v)
            inst.add_unit(pos(v));

    auto model = solve_2sat(inst);
    if (!model)
        return std::nullopt;
    Coloring c(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        c.set(v, (*model)[static_cast<std::size_t>(v)] ? low : high);
    if (!respects_lists(g, c, lists))
        throw ContractError("listcolor", "2SAT model decodes to an invalid coloring");
    return c;
}

} // namespace chroma4
