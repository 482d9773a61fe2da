#include "chroma4/graph.hpp"

#include <algorithm>

namespace chroma4 {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges, std::vector<std::string> labels) :
    n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels))
{
    if (n < 0 || n > kMaxVertices)
        throw UsageError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw UsageError("label count does not match vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw UsageError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw UsageError("self-loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto & r : adj_)
        twice += r.size();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

void check_vertex(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.size())
        throw UsageError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(g.size()) +
                         " vertices");
}

namespace {
    void check_set(const Graph & g, const VertexSet & xs)
    {
        if (!xs.subset_of(g.vertices()))
            throw UsageError("vertex set has members outside the graph");
    }
}

VertexSet neighbors(const Graph & g, Vertex v)
{
    check_vertex(g, v);
    return g.row(v);
}

VertexSet set_neighbors(const Graph & g, const VertexSet & xs)
{
    check_set(g, xs);
    VertexSet out;
    for (Vertex v : xs)
        out |= g.row(v);
    return out - xs;
}

InducedSubgraph induced(const Graph & g, const VertexSet & xs)
{
    check_set(g, xs);
    std::vector<Vertex> to_parent = xs.to_vector();
    std::vector<int> to_child(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        to_child[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        Vertex p = to_parent[i];
        for (Vertex q : g.row(p) & xs)
            if (p < q)
                edges.emplace_back(static_cast<Vertex>(i), to_child[static_cast<std::size_t>(q)]);
        if (g.has_labels())
            labels.push_back(g.label(p));
    }
    return {Graph(static_cast<int>(to_parent.size()), edges, std::move(labels)), std::move(to_parent)};
}

Graph complement(const Graph & g)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(g.size(), edges, g.labels());
}

Contraction contract_set(const Graph & g, const VertexSet & s)
{
    check_set(g, s);
    if (s.empty())
        throw UsageError("cannot contract an empty vertex set");

    const int n = g.size();
    std::vector<Vertex> to_child(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!s.contains(v))
            to_child[static_cast<std::size_t>(v)] = next++;
    const Vertex merged = next;
    for (Vertex v : s)
        to_child[static_cast<std::size_t>(v)] = merged;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = to_child[static_cast<std::size_t>(u)];
        Vertex b = to_child[static_cast<std::size_t>(v)];
        if (a != b)
            edges.emplace_back(a, b);
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v = 0; v < n; ++v)
            if (!s.contains(v))
                labels.push_back(g.label(v));
        std::string merged_label = "{";
        for (Vertex v : s)
            merged_label += (merged_label.size() > 1 ? "," : "") + g.label(v);
        labels.push_back(merged_label + "}");
    }
    return {Graph(merged + 1, edges, std::move(labels)), std::move(to_child), merged};
}

std::vector<VertexSet> components(const Graph & g, const VertexSet & within)
{
    check_set(g, within);
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp;
        VertexSet frontier{left.first()};
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grown;
            for (Vertex v : frontier)
                grown |= g.row(v);
            frontier = (grown & within) - comp;
        }
        left -= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph & g) { return components(g, g.vertices()).size() <= 1; }

bool is_clique(const Graph & g, const VertexSet & xs)
{
    for (Vertex v : xs)
        if (!(xs - VertexSet{v}).subset_of(g.row(v)))
            return false;
    return true;
}

bool is_independent(const Graph & g, const VertexSet & xs)
{
    for (Vertex v : xs)
        if (g.row(v).intersects(xs))
            return false;
    return true;
}

bool is_complete_to(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    if (a.intersects(b))
        return false;
    for (Vertex v : a)
        if (!b.subset_of(g.row(v)))
            return false;
    return true;
}

namespace named {
    Graph cycle(int n)
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i < n; ++i)
            e.emplace_back(i, (i + 1) % n);
        return Graph(n, e);
    }

    Graph path(int n)
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i + 1 < n; ++i)
            e.emplace_back(i, i + 1);
        return Graph(n, e);
    }

    Graph complete(int n)
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.emplace_back(i, j);
        return Graph(n, e);
    }

    Graph antihole(int n) { return complement(cycle(n)); }

    Graph empty(int n) { return Graph(n, {}); }

    Graph complete_bipartite(int a, int b)
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                e.emplace_back(i, a + j);
        return Graph(a + b, e);
    }

    Graph petersen()
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, e);
    }
}

std::string ColorSet::str() const
{
    std::string s = "{";
    for (Color c : to_vector()) {
        if (s.size() > 1)
            s += ',';
        s += static_cast<char>('0' + c);
    }
    return s + "}";
}

bool Coloring::total() const
{
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

ColorSet Coloring::colors_on(const VertexSet & vs) const
{
    ColorSet out;
    for (Vertex v : vs)
        if (colored(v))
            out.insert((*this)[v]);
    return out;
}

ColorSet Coloring::used() const
{
    ColorSet out;
    for (Color c : colors_)
        if (c >= 1 && c <= 4)
            out.insert(c);
    return out;
}

ProperVerdict is_proper(const Graph & g, const Coloring & c, bool require_total)
{
    ProperVerdict verdict;
    if (c.size() != g.size())
        throw UsageError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                         std::to_string(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) {
        if (c[v] > 4 && !verdict.bad_color)
            verdict.bad_color = v;
        if (require_total && !c.colored(v) && !verdict.uncolored)
            verdict.uncolored = v;
    }
    for (auto [u, v] : g.edges()) {
        if (c.colored(u) && c[u] == c[v]) {
            verdict.bad_edge = {u, v};
            break;
        }
    }
    verdict.proper = !verdict.bad_edge && !verdict.uncolored && !verdict.bad_color;
    return verdict;
}

} // namespace chroma4
