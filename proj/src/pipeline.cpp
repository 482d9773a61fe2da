#include "chroma4/pipeline.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace chroma4 {

Coloring glue(const Coloring & parent, const Coloring & child, const VertexSet & separator)
{
    if (parent.size() != child.size())
        throw UsageError("glue needs colorings over the same vertex range");
    std::array<Color, 5> perm{0, 1, 2, 3, 4};
    do {
        bool fits = true;
        for (Vertex s : separator)
            if (!child.colored(s) || perm[child[s]] != parent[s]) {
                fits = false;
                break;
            }
        if (!fits)
            continue;
        Coloring out = parent;
        for (Vertex v = 0; v < child.size(); ++v) {
            if (!child.colored(v))
                continue;
            const Color mapped = perm[child[v]];
            if (out.colored(v) && out[v] != mapped)
                throw ContractError("glue", "atoms overlap outside the separator with different colors");
            out.set(v, mapped);
        }
        return out;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    throw ContractError("glue", "no color renaming matches the separator");
}

Coloring expand(const Coloring & c, const std::vector<ContractionRecord> & journal)
{
    Coloring out = c;
    for (auto it = journal.rbegin(); it != journal.rend(); ++it)
        out = expand_record(out, *it);
    return out;
}

std::optional<Coloring> dsatur_color(const Graph & g, int k)
{
    const int n = g.size();
    Coloring c(n);
    std::vector<ColorSet> seen(static_cast<std::size_t>(n));

    std::function<bool(int, Color)> go = [&](int done, Color highest) {
        if (done == n)
            return true;
        Vertex v = -1;
        for (Vertex u = 0; u < n; ++u) {
            if (c.colored(u))
                continue;
            if (v < 0)
                v = u;
            else {
                const int su = seen[static_cast<std::size_t>(u)].size();
                const int sv = seen[static_cast<std::size_t>(v)].size();
                if (su > sv || (su == sv && g.degree(u) > g.degree(v)))
                    v = u;
            }
        }
        const Color limit = static_cast<Color>(std::min(k, highest + 1));
        for (Color col = 1; col <= limit; ++col) {
            if (seen[static_cast<std::size_t>(v)].contains(col))
                continue;
            c.set(v, col);
            std::vector<Vertex> touched;
            for (Vertex u : g.row(v))
                if (!c.colored(u) && !seen[static_cast<std::size_t>(u)].contains(col)) {
                    seen[static_cast<std::size_t>(u)].insert(col);
                    touched.push_back(u);
                }
            if (go(done + 1, std::max(highest, col)))
                return true;
            for (Vertex u : touched)
                seen[static_cast<std::size_t>(u)].erase(col);
            c.set(v, kUncolored);
        }
        return false;
    };
    if (!go(0, 0))
        return std::nullopt;
    return c;
}

bool verify_evidence(const Evidence & e)
{
    const Graph & g = e.graph;
    if (e.kind == "K5")
        return e.witness.size() == 5 && is_clique(g, VertexSet::from(e.witness));
    if (e.kind == "9-antihole")
        return e.witness.size() == 9 && verify_antihole(g, e.witness);
    if (e.kind == "C1" || e.kind == "C2") {
        if (!e.antihole)
            return false;
        CleanReport r;
        r.verdict = e.kind == "C1" ? CleanVerdict::violates_c1 : CleanVerdict::violates_c2;
        r.antihole = *e.antihole;
        r.witness = e.witness;
        return verify_clean_witness(g, r);
    }
    if (e.kind == "phase2")
        return e.antihole && verify_antihole(g, Witness(e.antihole->begin(), e.antihole->end()));
    return false;
}

namespace {

    std::string evidence_kind(CleanVerdict v)
    {
        switch (v) {
        case CleanVerdict::has_k5:
            return "K5";
        case CleanVerdict::has_antihole9:
            return "9-antihole";
        case CleanVerdict::violates_c1:
            return "C1";
        case CleanVerdict::violates_c2:
            return "C2";
        default:
            throw ContractError("solve", "clean verdict is not a rejection");
        }
    }

} // namespace

SolveResult solve(const Graph & input, const SolveOptions & opt)
{
    check_detector_size(input, opt.force);
    if (!opt.assume_free)
        if (auto w = find_forbidden(input))
            throw InputNotFreeError("input contains an induced " + w->kind, w->vertices);

    std::vector<std::string> labels;
    for (Vertex v = 0; v < input.size(); ++v)
        labels.push_back(std::to_string(v + 1));
    const Graph g(input.size(), input.edges(), std::move(labels));

    SolveResult res;
    Coloring total(g.size());

    for (const VertexSet & comp : components(g, g.vertices())) {
        ComponentTrace trace;
        trace.vertices = comp;
        const InducedSubgraph sub = induced(g, comp);

        trace.phase1 = clean_loop(sub.graph, opt.phase1);
        const Phase1Outcome & out = trace.phase1.outcome;
        if (out.kind == Phase1Outcome::Kind::not_colorable) {
            Evidence e;
            e.kind = evidence_kind(out.report.verdict);
            e.graph = out.graph;
            e.witness = out.report.witness;
            if (e.kind == "C1" || e.kind == "C2")
                e.antihole = out.report.antihole;
            res.evidence = std::move(e);
            res.components.push_back(std::move(trace));
            return res;
        }
        const Graph & clean = out.graph;

        trace.tree = clique_cutset_decompose(clean);
        std::vector<Coloring> atom_colorings;
        for (const VertexSet & atom : trace.tree.atoms) {
            AtomOutcome ao;
            ao.vertices = atom;
            const InducedSubgraph ag = induced(clean, atom);
            ao.antihole = find_antihole7(ag.graph);
            std::optional<Coloring> col;
            if (!ao.antihole) {
                col = dsatur_color(ag.graph, 4);
                if (!col)
                    throw ContractError("perfect", "atom without a 7-antihole is not 4-colorable");
            }
            else {
                Phase2Result p2 = phase2_solve(ag.graph, *ao.antihole, opt.phase2);
                ao.phase2 = p2.stats;
                col = std::move(p2.coloring);
            }
            if (!col) {
                ao.colorable = false;
                Evidence e;
                e.kind = "phase2";
                e.graph = ag.graph;
                e.antihole = ao.antihole;
                res.evidence = std::move(e);
                trace.atoms.push_back(std::move(ao));
                res.components.push_back(std::move(trace));
                return res;
            }
            Coloring lifted(clean.size());
            for (std::size_t i = 0; i < ag.to_parent.size(); ++i)
                lifted.set(ag.to_parent[i], (*col)[static_cast<Vertex>(i)]);
            atom_colorings.push_back(std::move(lifted));
            trace.atoms.push_back(std::move(ao));
        }

        const int root = trace.tree.root();
        Coloring acc = atom_colorings[static_cast<std::size_t>(root)];
        for (int k = root - 1; k >= 0; --k)
            acc = glue(acc, atom_colorings[static_cast<std::size_t>(k)], trace.tree.separators[static_cast<std::size_t>(k)]);
        if (!is_proper(clean, acc, true).proper)
            throw ContractError("glue", "glued coloring is not proper on the cleaned graph");

        const Coloring expanded = expand(acc, trace.phase1.journal);
        if (!is_proper(sub.graph, expanded, true).proper)
            throw ContractError("expand", "expanded coloring is not proper");
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            total.set(sub.to_parent[i], expanded[static_cast<Vertex>(i)]);
        res.components.push_back(std::move(trace));
    }

    if (!is_proper(input, total, true).proper)
        throw ContractError("solve", "final coloring is not proper");
    res.colorable = true;
    res.coloring = std::move(total);
    return res;
}

} // namespace chroma4
