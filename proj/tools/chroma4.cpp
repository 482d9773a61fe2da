// chroma4 command-line driver.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chroma4/dimacs.hpp"
#include "chroma4/oracle.hpp"
#include "chroma4/pipeline.hpp"

using namespace chroma4;

namespace {

enum Exit { kYes = 0, kNo = 1, kRejected = 2, kContract = 3 };

std::string ids(const std::vector<Vertex> & vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

std::string ids(const VertexSet & vs) { return ids(vs.to_vector()); }

std::string labels(const Graph & g, const std::vector<Vertex> & vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : " ") + g.label(v);
    return out;
}

std::string labels(const Graph & g, const VertexSet & vs) { return labels(g, vs.to_vector()); }

std::string tuple(const Antihole & c) { return ids(std::vector<Vertex>(c.begin(), c.end())); }

void write_to(const std::string & path, const std::function<void(std::ostream &)> & fn)
{
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    fn(out);
}

const char * route_name(ExtensionRoute r)
{
    switch (r) {
    case ExtensionRoute::none:
        return "none";
    case ExtensionRoute::total:
        return "components";
    case ExtensionRoute::nice:
        return "nice";
    case ExtensionRoute::color_missing:
        return "missing-color";
    }
    return "?";
}

void print_trace(std::ostream & out, const SolveResult & r)
{
    int index = 0;
    for (const ComponentTrace & t : r.components) {
        ++index;
        out << "c component " << index << " vertices " << ids(t.vertices) << "\n";
        for (std::size_t k = 0; k < t.phase1.journal.size(); ++k) {
            const ContractionRecord & rec = t.phase1.journal[k];
            out << "c   contraction " << k + 1 << " parts";
            for (const VertexSet & p : rec.parts)
                out << " [" << ids(p) << "]";
            out << " n " << rec.parent_size << " -> " << rec.child_size << "\n";
        }
        out << "c   phase1 " << to_string(t.phase1.outcome.kind) << "\n";
        for (std::size_t a = 0; a < t.atoms.size(); ++a) {
            const AtomOutcome & ao = t.atoms[a];
            out << "c   atom " << a + 1 << " size " << ao.vertices.size();
            if (ao.antihole) {
                out << " phase2 R=" << ao.phase2.r_size << " bases=" << ao.phase2.base_tried << "/"
                    << ao.phase2.base_colorings << " route=" << route_name(ao.phase2.extension.route);
            }
            else
                out << " perfect";
            out << (ao.colorable ? "" : " not-4-colorable") << "\n";
        }
    }
}

int cmd_solve(const std::string & file, bool assume_free, bool force, bool trace, const std::string & output)
{
    const Graph g = dimacs::read_graph_file(file);
    SolveOptions opt;
    opt.assume_free = assume_free;
    opt.force = force;
    const SolveResult r = solve(g, opt);
    if (trace)
        print_trace(std::cout, r);
    if (r.colorable) {
        std::cout << "s 4-colorable\n";
        write_to(output, [&](std::ostream & out) { dimacs::write_coloring(out, *r.coloring); });
        return kYes;
    }
    std::cout << "s not-4-colorable\n";
    if (r.evidence) {
        const Evidence & e = *r.evidence;
        std::cout << "evidence " << e.kind;
        if (e.antihole)
            std::cout << " antihole " << labels(e.graph, std::vector<Vertex>(e.antihole->begin(), e.antihole->end()));
        if (!e.witness.empty())
            std::cout << " witness " << labels(e.graph, e.witness);
        std::cout << "\n";
    }
    return kNo;
}

int cmd_analyze(const std::string & file, bool force)
{
    const Graph g = dimacs::read_graph_file(file);
    check_detector_size(g, force);
    std::cout << "graph n " << g.size() << " m " << g.edge_count() << "\n";
    auto show = [](const char * name, const std::optional<Witness> & w) {
        std::cout << name << " " << (w ? "present " + ids(*w) : std::string("absent")) << "\n";
    };
    show("P6", find_induced_path(g, 6));
    int c5 = 0;
    std::optional<Witness> first_c5;
    for_each_induced_cycle(g, 5, [&](const Witness & w) {
        if (!first_c5)
            first_c5 = w;
        ++c5;
        return true;
    });
    std::cout << "C5 count " << c5 << (first_c5 ? " first " + ids(*first_c5) : std::string()) << "\n";
    auto k5 = find_clique(g, 5);
    std::cout << "K5 " << (k5 ? "present " + ids(*k5) : std::string("absent")) << "\n";
    show("antihole9", find_antihole(g, 9));
    const auto holes = enumerate_antiholes7(g);
    std::cout << "antihole7 count " << holes.size() << (holes.empty() ? "" : " first " + tuple(holes.front())) << "\n";
    for (const Antihole & c : holes) {
        const CleanReport r = check_antihole_clean(g, c);
        std::cout << "antihole " << tuple(c) << " " << to_string(r.verdict);
        if (!r.witness.empty())
            std::cout << " witness " << ids(r.witness);
        if (r.verdict == CleanVerdict::dirty)
            std::cout << " component " << ids(r.component);
        std::cout << "\n";
    }
    const CleanReport whole = check_clean(g);
    std::cout << "clean " << to_string(whole.verdict) << "\n";
    return kYes;
}

int cmd_clean(const std::string & file, bool assume_free, const std::string & output)
{
    const Graph g0 = dimacs::read_graph_file(file);
    if (!assume_free)
        if (auto w = find_forbidden(g0))
            throw InputNotFreeError("input contains an induced " + w->kind, w->vertices);
    std::vector<std::string> names;
    for (Vertex v = 0; v < g0.size(); ++v)
        names.push_back(std::to_string(v + 1));
    const Graph g(g0.size(), g0.edges(), names);

    int code = kYes;
    int comp_index = 0;
    for (const VertexSet & comp : components(g, g.vertices())) {
        ++comp_index;
        const InducedSubgraph sub = induced(g, comp);
        const CleanLoopResult r = clean_loop(sub.graph);
        std::cout << "component " << comp_index << " n " << sub.graph.size() << "\n";
        Graph before = sub.graph;
        int step = 0;
        for (const Phase1Outcome & s : r.steps) {
            ++step;
            std::cout << "step " << step << " antihole "
                      << labels(before, std::vector<Vertex>(s.report.antihole.begin(), s.report.antihole.end()))
                      << " component " << labels(before, s.report.component) << " rule " << s.partition->rule
                      << " parts";
            for (const VertexSet & p : s.partition->parts)
                std::cout << " " << p.size();
            std::cout << " n " << s.graph.size() << "\n";
            before = s.graph;
        }
        const Phase1Outcome & out = r.outcome;
        std::cout << "result " << to_string(out.kind);
        if (out.kind == Phase1Outcome::Kind::not_colorable) {
            std::cout << " " << to_string(out.report.verdict) << " witness " << labels(out.graph, out.report.witness);
            code = kNo;
        }
        std::cout << " n " << out.graph.size() << "\n";
        if (!output.empty()) {
            const std::string path = comp_index == 1 ? output : output + "." + std::to_string(comp_index);
            write_to(path, [&](std::ostream & o) { dimacs::write_graph(o, out.graph, "cleaned component"); });
        }
    }
    return code;
}

int cmd_decompose(const std::string & file)
{
    const Graph g = dimacs::read_graph_file(file);
    int comp_index = 0;
    for (const VertexSet & comp : components(g, g.vertices())) {
        ++comp_index;
        const InducedSubgraph sub = induced(g, comp);
        const DecompositionTree t = clique_cutset_decompose(sub.graph);
        auto back = [&](const VertexSet & s) {
            std::vector<Vertex> out;
            for (Vertex v : s)
                out.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            std::sort(out.begin(), out.end());
            return ids(out);
        };
        std::cout << "component " << comp_index << " atoms " << t.atoms.size() << "\n";
        for (std::size_t k = 0; k < t.atoms.size(); ++k) {
            std::cout << "atom " << k + 1 << " [" << back(t.atoms[k]) << "]";
            if (static_cast<int>(k) == t.root())
                std::cout << " root";
            else
                std::cout << " separator [" << back(t.separators[k]) << "] parent " << t.parent[k] + 1;
            std::cout << "\n";
        }
    }
    return kYes;
}

int cmd_phase2(const std::string & file, const std::vector<int> & tuple_in)
{
    const Graph g = dimacs::read_graph_file(file);
    Antihole c{};
    if (tuple_in.empty()) {
        auto found = find_antihole7(g);
        if (!found)
            throw UsageError("graph has no 7-antihole");
        c = *found;
    }
    else {
        if (tuple_in.size() != 7)
            throw UsageError("--antihole needs 7 vertex ids");
        for (std::size_t i = 0; i < 7; ++i) {
            check_vertex(g, tuple_in[i] - 1);
            c[i] = tuple_in[i] - 1;
        }
    }
    if (!verify_antihole(g, Witness(c.begin(), c.end())))
        throw UsageError("--antihole does not induce a 7-antihole");
    if (!is_connected(g))
        throw UsageError("phase2 needs a connected graph");
    if (const auto rep = check_clean(g); rep.verdict != CleanVerdict::clean)
        throw UsageError("phase2 needs a clean graph (verdict " + to_string(rep.verdict) + "); run clean first");
    if (clique_cutset_decompose(g).atoms.size() != 1)
        throw UsageError("phase2 needs a graph without a clique cutset; run decompose first");
    const AntiholeContext ctx = classify_attachment(g, c);
    std::cout << "antihole " << tuple(c) << "\n";
    std::cout << "X " << ids(ctx.x) << "\nY " << ids(ctx.y) << "\nZ " << ids(ctx.z) << "\nbig " << ids(ctx.big)
              << "\nsmall " << ids(ctx.small) << "\nS " << ids(ctx.s) << "\n";
    std::cout << "R " << ids(build_R(ctx)) << "\n";

    Phase2Options opt;
    opt.on_base = [&](int index, const ColorState & st, const std::optional<Coloring> & good) {
        std::cout << "base " << index + 1 << " coloring";
        for (Vertex v : ctx.cset | st.r)
            std::cout << " " << v + 1 << ":" << int(st.base[v]);
        std::cout << "\n";
        for (Vertex v = 0; v < g.size(); ++v) {
            std::cout << "  L " << v + 1 << " " << st.lists[static_cast<std::size_t>(v)].str();
            if (st.domain.contains(v))
                std::cout << " Q " << st.q1[static_cast<std::size_t>(v)].str();
            std::cout << "\n";
        }
        for (const auto & [key, bits] : st.q2) {
            std::cout << "  Q2 " << key.first + 1 << " " << key.second + 1;
            for (Color i = 1; i <= 4; ++i)
                for (Color j = 1; j <= 4; ++j)
                    if (bits & pair_bit(i, j))
                        std::cout << " (" << int(i) << "," << int(j) << ")";
            std::cout << "\n";
        }
        std::cout << "  step6 " << (good ? "good" : "fail") << "\n";
    };
    const Phase2Result r = phase2_solve(g, c, opt);
    std::cout << "stats R " << r.stats.r_size << " bases " << r.stats.base_colorings << " tried "
              << r.stats.base_tried << " z2-checks " << r.stats.z2_checks << "\n";
    if (!r.coloring) {
        std::cout << "s not-4-colorable\n";
        return kNo;
    }
    std::cout << "route " << route_name(r.stats.extension.route) << "\n";
    std::cout << "s 4-colorable\n";
    dimacs::write_coloring(std::cout, *r.coloring);
    return kYes;
}

int cmd_gen(const oracle::GenSpec & spec, const std::string & output)
{
    const Graph g = oracle::generate_free(spec);
    std::ostringstream comment;
    comment << "preset " << spec.preset << " n " << spec.n << " p " << spec.p << " seed " << spec.seed;
    write_to(output, [&](std::ostream & out) { dimacs::write_graph(out, g, comment.str()); });
    return kYes;
}

int cmd_difftest(const std::string & corpus_dir, int random_count, int seeded_count, int n_min, int n_max,
                 std::uint64_t seed, int jobs, const std::string & report_path, const std::string & repro_dir)
{
    std::vector<oracle::CorpusItem> corpus;
    if (!corpus_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto & entry : std::filesystem::directory_iterator(corpus_dir))
            if (entry.path().extension() == ".col")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto & f : files)
            corpus.push_back({f.filename().string(), dimacs::read_graph_file(f.string())});
    }
    else
        corpus = oracle::build_corpus(random_count, seeded_count, n_min, n_max, seed);

    const oracle::DiffReport rep = oracle::differential_run(corpus, oracle::solver_decider(), jobs);
    write_to(report_path, [&](std::ostream & out) { out << rep.text(); });
    if (!repro_dir.empty()) {
        std::filesystem::create_directories(repro_dir);
        for (const oracle::DiffRecord & r : rep.records)
            if (!r.reproducer.empty())
                std::ofstream(std::filesystem::path(repro_dir) / (r.name + ".col")) << r.reproducer;
    }
    if (!report_path.empty() && report_path != "-")
        std::cout << "total " << rep.records.size() << " mismatches " << rep.mismatches << " errors " << rep.errors
                  << "\n";
    return rep.mismatches == 0 && rep.errors == 0 ? kYes : kNo;
}

int cmd_check(const std::string & graph_file, const std::string & coloring_file)
{
    const Graph g = dimacs::read_graph_file(graph_file);
    const Coloring c = dimacs::read_coloring_file(coloring_file, g.size());
    const ProperVerdict v = is_proper(g, c, true);
    if (v.proper) {
        std::cout << "proper colors " << c.used().size() << "\n";
        return kYes;
    }
    if (v.bad_edge)
        std::cout << "monochromatic edge " << v.bad_edge->first + 1 << " " << v.bad_edge->second + 1 << "\n";
    if (v.uncolored)
        std::cout << "uncolored vertex " << *v.uncolored + 1 << "\n";
    if (v.bad_color)
        std::cout << "bad color at vertex " << *v.bad_color + 1 << "\n";
    return kNo;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"4-coloring for (P6,C5)-free graphs"};
    app.require_subcommand(1);

    std::string file, output, second;
    bool assume_free = false, force = false, trace = false;

    auto * solve_cmd = app.add_subcommand("solve", "decide 4-colorability and print a coloring");
    solve_cmd->add_option("graph", file, "DIMACS graph")->required();
    solve_cmd->add_flag("--assume-free", assume_free, "skip the P6/C5 check");
    solve_cmd->add_flag("--force", force, "allow graphs above the detector ceiling");
    solve_cmd->add_flag("--trace", trace, "print phase I, decomposition and atom details");
    solve_cmd->add_option("--output,-o", output, "write the coloring here instead of stdout");

    auto * analyze_cmd = app.add_subcommand("analyze", "report forbidden structures and antihole cleanliness");
    analyze_cmd->add_option("graph", file)->required();
    analyze_cmd->add_flag("--force", force);

    auto * clean_cmd = app.add_subcommand("clean", "run the cleaning loop");
    clean_cmd->add_option("graph", file)->required();
    clean_cmd->add_flag("--assume-free", assume_free);
    clean_cmd->add_option("--output,-o", output, "write the cleaned graph");

    auto * decompose_cmd = app.add_subcommand("decompose", "clique-cutset atoms per component");
    decompose_cmd->add_option("graph", file)->required();

    std::vector<int> antihole;
    auto * phase2_cmd = app.add_subcommand("phase2", "run the coloring phase on a cleaned graph and dump its tables");
    phase2_cmd->add_option("graph", file)->required();
    phase2_cmd->add_option("--antihole", antihole, "7 vertex ids v0..v6 (1-based)")->expected(7);

    oracle::GenSpec spec;
    std::string repair = "chord";
    auto * gen_cmd = app.add_subcommand("gen", "generate a connected (P6,C5)-free graph");
    gen_cmd->add_option("-n", spec.n, "vertices")->check(CLI::Range(1, kMaxVertices));
    gen_cmd->add_option("-p", spec.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", spec.seed);
    gen_cmd->add_option("--preset", spec.preset)->check(CLI::IsMember(oracle::presets()));
    gen_cmd->add_option("--repair", repair)->check(CLI::IsMember({"chord", "deletion", "resample"}));
    gen_cmd->add_option("--max-attempts", spec.max_attempts)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--output,-o", output);

    std::string corpus_dir, repro_dir;
    int random_count = 700, seeded_count = 300, n_min = 7, n_max = 16, jobs = 1;
    std::uint64_t seed = 1;
    auto * diff_cmd = app.add_subcommand("difftest", "compare the solver with brute force");
    diff_cmd->add_option("--corpus", corpus_dir, "directory of .col files")->check(CLI::ExistingDirectory);
    diff_cmd->add_option("--random", random_count)->check(CLI::NonNegativeNumber);
    diff_cmd->add_option("--seeded", seeded_count)->check(CLI::NonNegativeNumber);
    diff_cmd->add_option("--nmin", n_min)->check(CLI::Range(1, oracle::kBruteCap));
    diff_cmd->add_option("--nmax", n_max)->check(CLI::Range(1, oracle::kBruteCap));
    diff_cmd->add_option("--seed", seed);
    diff_cmd->add_option("--jobs,-j", jobs)->check(CLI::PositiveNumber);
    diff_cmd->add_option("--report", output, "report file (default stdout)");
    diff_cmd->add_option("--reproducers", repro_dir, "write failing graphs here");

    auto * check_cmd = app.add_subcommand("check-coloring", "verify a coloring file");
    check_cmd->add_option("graph", file)->required();
    check_cmd->add_option("coloring", second)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kRejected;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(file, assume_free, force, trace, output);
        if (*analyze_cmd)
            return cmd_analyze(file, force);
        if (*clean_cmd)
            return cmd_clean(file, assume_free, output);
        if (*decompose_cmd)
            return cmd_decompose(file);
        if (*phase2_cmd)
            return cmd_phase2(file, antihole);
        if (*gen_cmd) {
            spec.repair = repair == "chord" ? oracle::Repair::chord
                          : repair == "deletion" ? oracle::Repair::deletion
                                                 : oracle::Repair::resample;
            return cmd_gen(spec, output);
        }
        if (*diff_cmd) {
            if (n_min > n_max)
                throw UsageError("--nmin exceeds --nmax");
            return cmd_difftest(corpus_dir, random_count, seeded_count, n_min, n_max, seed, jobs, output, repro_dir);
        }
        if (*check_cmd)
            return cmd_check(file, second);
    }
    catch (const InputNotFreeError & e) {
        std::cerr << "rejected: " << e.what();
        if (!e.witness().empty())
            std::cerr << ": " << ids(e.witness());
        std::cerr << "\n";
        return kRejected;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kRejected;
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kRejected;
    }
    catch (const GenerationError & e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return kNo;
    }
    catch (const ContractError & e) {
        std::cerr << "internal contract violation: " << e.what() << "\n";
        return kContract;
    }
    return kRejected;
}
