#include "chroma4/phase1.hpp"

namespace chroma4 {

const char * to_string(Phase1Outcome::Kind k)
{
    switch (k) {
    case Phase1Outcome::Kind::not_colorable:
        return "not-4-colorable";
    case Phase1Outcome::Kind::clean:
        return "clean";
    case Phase1Outcome::Kind::reduced:
        return "reduced";
    }
    return "?";
}

Phase1Outcome clean_step(const Graph & g, const Phase1Options & opt)
{
    Phase1Outcome out;
    out.report = check_clean(g);
    out.graph = g;
    switch (out.report.verdict) {
    case CleanVerdict::clean:
        out.kind = Phase1Outcome::Kind::clean;
        return out;
    case CleanVerdict::has_k5:
    case CleanVerdict::has_antihole9:
    case CleanVerdict::violates_c1:
    case CleanVerdict::violates_c2:
        if (!verify_clean_witness(g, out.report))
            throw ContractError("clean", "rejection witness does not re-verify");
        out.kind = Phase1Outcome::Kind::not_colorable;
        return out;
    case CleanVerdict::dirty:
        break;
    }

    const AntiholeContext ctx = classify_attachment(g, out.report.antihole);
    ChromaticPartition part;
    try {
        part = find_chromatic_partition(g, ctx, out.report.component);
    }
    catch (const ContractError & e) {
        throw InputNotFreeError(std::string("structural claim failed during cleaning: ") + e.what());
    }
    auto [child, rec] = contract_chromatic(g, part);

    if (child.size() >= g.size())
        throw ContractError("clean", "contraction did not shrink the graph");
    if (!is_connected(child))
        throw ContractError("clean", "contraction disconnected the graph");
    if (opt.verify_free && child.size() < opt.free_check_below) {
        if (auto w = find_forbidden(child))
            throw ContractError("contract", "contracted graph contains an induced " + w->kind);
    }

    out.kind = Phase1Outcome::Kind::reduced;
    out.graph = std::move(child);
    out.partition = std::move(part);
    out.record = std::move(rec);
    return out;
}

CleanLoopResult clean_loop(const Graph & g, const Phase1Options & opt)
{
    CleanLoopResult res;
    Graph current = g;
    for (int round = 0; round <= g.size(); ++round) {
        Phase1Outcome step = clean_step(current, opt);
        if (step.kind != Phase1Outcome::Kind::reduced) {
            res.outcome = std::move(step);
            return res;
        }
        res.journal.push_back(*step.record);
        current = step.graph;
        res.steps.push_back(std::move(step));
    }
    throw ContractError("clean", "cleaning did not finish within n rounds");
}

} // namespace chroma4
