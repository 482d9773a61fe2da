#include "chroma4/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "chroma4/detectors.hpp"
#include "chroma4/dimacs.hpp"
#include "chroma4/pipeline.hpp"

namespace chroma4::oracle {

std::optional<Coloring> brute_k_colorable(const Graph & g, int k)
{
    if (g.size() > kBruteCap)
        throw UsageError("brute-force oracle is capped at " + std::to_string(kBruteCap) + " vertices");
    if (k < 1 || k > 4)
        throw UsageError("k must be in 1..4");
    std::vector<Vertex> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<int> col(static_cast<std::size_t>(g.size()), 0);
    std::function<bool(std::size_t, int)> go = [&](std::size_t pos, int used) {
        if (pos == order.size())
            return true;
        const Vertex v = order[pos];
        for (int c = 1; c <= std::min(k, used + 1); ++c) {
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q)
                if (col[static_cast<std::size_t>(order[q])] == c && g.adjacent(v, order[q]))
                    ok = false;
            if (!ok)
                continue;
            col[static_cast<std::size_t>(v)] = c;
            if (go(pos + 1, std::max(used, c)))
                return true;
            col[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    if (!go(0, 0))
        return std::nullopt;
    Coloring out(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        out.set(v, static_cast<Color>(col[static_cast<std::size_t>(v)]));
    return out;
}

const std::vector<std::string> & presets()
{
    static const std::vector<std::string> names{"random", "c7bar", "c9bar", "multipartite", "antihole7", "hubs", "dirty", "x3", "chain"};
    return names;
}

namespace {

    using Edges = std::vector<std::pair<Vertex, Vertex>>;

    struct Rng {
        std::mt19937_64 eng;
        explicit Rng(std::uint64_t seed) : eng(seed) {}
        int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
        bool coin(double p) { return std::bernoulli_distribution(p)(eng); }
        template <class T> const T & pick(const std::vector<T> & xs)
        {
            return xs[static_cast<std::size_t>(range(0, static_cast<int>(xs.size()) - 1))];
        }
    };

    Graph add_edges(const Graph & g, const Edges & extra)
    {
        Edges e = g.edges();
        e.insert(e.end(), extra.begin(), extra.end());
        return Graph(g.size(), e);
    }

    // Chord additions, then deletions, plus bridging edges, until the graph
    // is connected and free. Empty when the budget runs out.
    std::optional<Graph> repair(Graph g, Rng & rng, Repair mode)
    {
        int chords = 0;
        for (int step = 0; step < 4 * kBruteCap * kBruteCap; ++step) {
            if (auto w = find_forbidden(g)) {
                if (mode == Repair::resample)
                    return std::nullopt;
                std::vector<std::pair<Vertex, Vertex>> non_edges;
                for (std::size_t i = 0; i < w->vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < w->vertices.size(); ++j)
                        if (!g.adjacent(w->vertices[i], w->vertices[j]))
                            non_edges.emplace_back(w->vertices[i], w->vertices[j]);
                if (mode == Repair::chord && chords < 50) {
                    g = add_edges(g, {rng.pick(non_edges)});
                    ++chords;
                }
                else {
                    const Vertex drop = rng.pick(w->vertices);
                    g = induced(g, g.vertices() - VertexSet{drop}).graph;
                }
                continue;
            }
            const auto comps = components(g, g.vertices());
            if (comps.size() <= 1)
                return g;
            const Vertex a = rng.pick(comps[0].to_vector());
            const Vertex b = rng.pick(comps[1].to_vector());
            g = add_edges(g, {{a, b}});
        }
        return std::nullopt;
    }

    Graph random_free(const GenSpec & spec, Rng & rng)
    {
        for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
            Edges e;
            for (Vertex u = 0; u < spec.n; ++u)
                for (Vertex v = u + 1; v < spec.n; ++v)
                    if (rng.coin(spec.p))
                        e.emplace_back(u, v);
            if (auto g = repair(Graph(spec.n, e), rng, spec.repair))
                return *g;
        }
        throw GenerationError("no free graph within " + std::to_string(spec.max_attempts) + " attempts");
    }

    Graph multipartite(const GenSpec & spec, Rng & rng)
    {
        const int parts = rng.range(2, std::max(2, std::min(spec.n, 5)));
        std::vector<int> part(static_cast<std::size_t>(spec.n));
        for (int v = 0; v < spec.n; ++v)
            part[static_cast<std::size_t>(v)] = v < parts ? v : rng.range(0, parts - 1);
        Edges e;
        for (Vertex u = 0; u < spec.n; ++u)
            for (Vertex v = u + 1; v < spec.n; ++v)
                if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)])
                    e.emplace_back(u, v);
        return Graph(spec.n, e);
    }

    // Grows g to n vertices. Each new vertex gets a random antihole pattern
    // (leaf, 3-4 run, 5-6 run, or none) and random edges to earlier extra
    // vertices, or hangs off one earlier extra vertex; kept only if still free.
    Graph attach_extras(Graph g, int n, const GenSpec & spec, Rng & rng, bool hubs = false)
    {
        static const std::vector<int> hub_kinds{0, 2, 3, 4, 2, 3, 4, 12, 12, 13, 13, 10};
        for (Vertex v = g.size(); v < n; ++v) {
            bool placed = false;
            for (int attempt = 0; attempt < spec.max_attempts && !placed; ++attempt) {
                Edges e = g.edges();
                const int kind = hubs ? rng.pick(hub_kinds) : rng.range(0, 13);
                int len = 0;
                if (kind <= 1)
                    len = 1;
                else if (kind <= 4)
                    len = rng.range(3, 4);
                else if (kind <= 6)
                    len = rng.range(5, 6);
                const int start = rng.range(0, 6);
                for (int i = 0; i < len; ++i)
                    e.emplace_back((start + i) % 7, v);
                bool any = len > 0;
                if (kind >= 12) {
                    // Hub: sees several small-looking vertices, maybe one antihole vertex.
                    if (kind == 13)
                        e.emplace_back(start, v);
                    for (Vertex u = 7; u < v; ++u) {
                        const int on_c = (g.row(u) & VertexSet::range(7)).size();
                        if (on_c >= 3 && on_c <= 4 && rng.coin(0.6)) {
                            e.emplace_back(u, v);
                            any = true;
                        }
                    }
                }
                else if (kind >= 10 && v > 7) {
                    e.emplace_back(rng.range(7, v - 1), v);
                    any = true;
                }
                else
                    for (Vertex u = 7; u < v; ++u)
                        if (rng.coin(spec.p)) {
                            e.emplace_back(u, v);
                            any = true;
                        }
                if (!any)
                    continue;
                Graph cand(v + 1, e);
                if (!find_forbidden(cand)) {
                    g = std::move(cand);
                    placed = true;
                }
            }
            if (!placed) {
                Edges e = g.edges();
                for (Vertex u = 0; u < v; ++u)
                    e.emplace_back(u, v);
                g = Graph(v + 1, e);
            }
        }
        return g;
    }

    Graph antihole_seeded(const GenSpec & spec, Rng & rng, bool hubs = false)
    {
        return attach_extras(named::antihole(7), std::max(7, spec.n), spec, rng, hubs);
    }

    // Antihole plus 2-3 vertices with five or six consecutive antihole
    // neighbors, all seeing one end of a Y path with a pendant, so that the
    // path is a component whose neighborhood is no clique.
    Graph dirty_seeded(const GenSpec & spec, Rng & rng)
    {
        for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
            if (spec.n < 11)
                throw UsageError("the dirty preset needs n >= 11");
            const int t = rng.range(2, std::min(3, spec.n - 9));
            const int path = rng.range(2, std::min(3, spec.n - 7 - t));
            const int base = 7 + t + path;
            Edges e = named::antihole(7).edges();
            std::vector<cmask::Mask> masks;
            for (int j = 0; j < t; ++j) {
                const int len = rng.coin(0.8) ? 5 : 6;
                const int start = rng.range(0, 6);
                masks.push_back(cmask::run(start, len));
                for (int i = 0; i < len; ++i)
                    e.emplace_back((start + i) % 7, 7 + j);
            }
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b) {
                    const cmask::Mask both = masks[static_cast<std::size_t>(a)] & masks[static_cast<std::size_t>(b)];
                    const bool nested = both == masks[static_cast<std::size_t>(a)] || both == masks[static_cast<std::size_t>(b)];
                    if (!nested)
                        e.emplace_back(7 + a, 7 + b);
                }
            const Vertex k0 = 7 + t;
            for (int j = 0; j < t; ++j)
                e.emplace_back(7 + j, k0);
            for (int i = 1; i < path; ++i)
                e.emplace_back(k0 + i - 1, k0 + i);
            Graph g(base, e);
            if (find_forbidden(g))
                continue;
            return attach_extras(std::move(g), spec.n, spec, rng);
        }
        throw GenerationError("no free dirty construction within the attempt budget");
    }

    Graph x3_fixture()
    {
        Edges e = named::antihole(7).edges();
        for (Vertex u : {7, 8}) {
            for (Vertex c = 1; c <= 5; ++c)
                e.emplace_back(c, u);
            e.emplace_back(u, 9);
        }
        e.emplace_back(9, 10);
        return Graph(11, e);
    }

    Graph chain(const GenSpec & spec, Rng & rng)
    {
        for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
            const int n1 = std::max(7, spec.n / 2 + 1);
            const int n2 = std::max(2, spec.n - n1 + 1);
            GenSpec left = spec;
            left.n = n1;
            left.seed = rng.eng();
            const Graph a = antihole_seeded(left, rng);
            GenSpec right = spec;
            right.n = n2;
            right.seed = rng.eng();
            const Graph b = n2 >= 7 && rng.coin(0.5) ? antihole_seeded(right, rng) : random_free(right, rng);
            const Vertex shared = rng.range(0, a.size() - 1);
            // b's vertex 0 becomes `shared`, the rest follow a.
            auto map = [&](Vertex v) { return v == 0 ? shared : a.size() + v - 1; };
            Edges e = a.edges();
            for (auto [u, v] : b.edges())
                e.emplace_back(map(u), map(v));
            Graph g(a.size() + b.size() - 1, e);
            if (!find_forbidden(g) && is_connected(g))
                return g;
            if (auto fixed = repair(g, rng, spec.repair))
                return *fixed;
        }
        throw GenerationError("no free clique-cutset chain within the attempt budget");
    }

} // namespace

Graph generate_free(const GenSpec & spec)
{
    if (spec.n < 1 || spec.n > kMaxVertices)
        throw UsageError("n out of range");
    if (spec.p < 0 || spec.p > 1)
        throw UsageError("p must be in [0,1]");
    Rng rng(spec.seed);
    Graph g;
    if (spec.preset == "random")
        g = random_free(spec, rng);
    else if (spec.preset == "c7bar")
        g = named::antihole(7);
    else if (spec.preset == "c9bar")
        g = named::antihole(9);
    else if (spec.preset == "multipartite")
        g = multipartite(spec, rng);
    else if (spec.preset == "antihole7")
        g = antihole_seeded(spec, rng);
    else if (spec.preset == "hubs")
        g = antihole_seeded(spec, rng, true);
    else if (spec.preset == "dirty")
        g = dirty_seeded(spec, rng);
    else if (spec.preset == "x3")
        g = x3_fixture();
    else if (spec.preset == "chain")
        g = chain(spec, rng);
    else
        throw UsageError("unknown preset " + spec.preset);

    if (find_forbidden(g) || !is_connected(g))
        throw GenerationError("generated graph failed the freeness or connectivity check");
    return g;
}

std::vector<CorpusItem> build_corpus(int random_count, int seeded_count, int n_min, int n_max, std::uint64_t seed)
{
    std::vector<CorpusItem> out;
    Rng rng(seed);
    static const std::vector<double> densities{0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    for (int i = 0; i < random_count + seeded_count; ++i) {
        GenSpec spec;
        spec.seed = rng.eng();
        spec.p = rng.pick(densities);
        if (i < random_count) {
            spec.n = rng.range(n_min, n_max);
            spec.preset = i % 10 == 9 ? "chain" : i % 10 == 8 ? "multipartite" : "random";
            if (spec.preset == "chain")
                spec.n = std::max(spec.n, 8);
        }
        else {
            spec.n = rng.range(std::max(8, n_min), n_max);
            spec.preset = "antihole7";
            spec.p = std::min(spec.p, 0.5);
        }
        std::ostringstream name;
        name << spec.preset << "-" << i << "-n" << spec.n;
        out.push_back({name.str(), generate_free(spec)});
    }
    return out;
}

std::string DiffReport::text() const
{
    std::ostringstream out;
    for (const DiffRecord & r : records) {
        out << r.name << " n=" << r.n << " m=" << r.m << " oracle=" << (r.oracle ? 1 : 0)
            << " solver=" << (r.solver ? 1 : 0) << " " << r.status;
        if (!r.detail.empty())
            out << " " << r.detail;
        out << "\n";
    }
    out << "total " << records.size() << " mismatches " << mismatches << " errors " << errors << "\n";
    return out.str();
}

Decider solver_decider()
{
    return [](const Graph & g) {
        const SolveResult r = solve(g);
        if (r.colorable && (!r.coloring || !is_proper(g, *r.coloring, true).proper))
            throw ContractError("difftest", "solver coloring failed verification");
        return r.colorable;
    };
}

DiffReport differential_run(const std::vector<CorpusItem> & corpus, const Decider & decide, int jobs)
{
    DiffReport rep;
    rep.records.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            const CorpusItem & item = corpus[i];
            DiffRecord & r = rep.records[i];
            r.name = item.name;
            r.n = item.graph.size();
            r.m = item.graph.edge_count();
            try {
                r.oracle = brute_k_colorable(item.graph, 4).has_value();
                r.solver = decide(item.graph);
                r.status = r.oracle == r.solver ? "ok" : "mismatch";
            }
            catch (const std::exception & e) {
                r.status = "error";
                r.detail = e.what();
            }
            if (r.status != "ok")
                r.reproducer = dimacs::to_string(item.graph, item.name);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work);
        for (std::thread & t : pool)
            t.join();
    }
    for (const DiffRecord & r : rep.records) {
        rep.mismatches += r.status == "mismatch";
        rep.errors += r.status == "error";
    }
    return rep;
}

} // namespace chroma4::oracle
