#include "chroma4/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chroma4::dimacs {

namespace {
    std::ifstream open(const std::string & path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open " + path, 0);
        return in;
    }

    bool blank(const std::string & line) { return line.find_first_not_of(" \t\r") == std::string::npos; }
}

Graph read_graph(std::istream & in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError("second problem line", lineno);
            std::string format;
            long long nn = -1;
            long long m = -1;
            if (!(ls >> format >> nn >> m) || (format != "edge" && format != "col"))
                throw ParseError("expected 'p edge <n> <m>'", lineno);
            if (nn < 0 || nn > kMaxVertices)
                throw ParseError("vertex count " + std::to_string(nn) + " outside 0.." + std::to_string(kMaxVertices),
                                 lineno);
            n = static_cast<int>(nn);
        }
        else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge before problem line", lineno);
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v))
                throw ParseError("expected 'e <u> <v>'", lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("edge endpoint out of range", lineno);
            if (u == v)
                throw ParseError("self-loop", lineno);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }
        else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
        std::string extra;
        if (tag != "c" && (ls >> extra))
            throw ParseError("trailing token '" + extra + "'", lineno);
    }
    if (n < 0)
        throw ParseError("missing problem line", lineno);
    return Graph(n, edges);
}

Graph read_graph_file(const std::string & path)
{
    auto in = open(path);
    return read_graph(in);
}

void write_graph(std::ostream & out, const Graph & g, const std::string & comment)
{
    if (!comment.empty())
        out << "c " << comment << '\n';
    auto edges = g.edges();
    out << "p edge " << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_string(const Graph & g, const std::string & comment)
{
    std::ostringstream os;
    write_graph(os, g, comment);
    return os.str();
}

void write_coloring(std::ostream & out, const Coloring & c)
{
    for (Vertex v = 0; v < c.size(); ++v)
        if (c.colored(v))
            out << "v " << v + 1 << ' ' << static_cast<int>(c[v]) << '\n';
}

Coloring read_coloring(std::istream & in, int n)
{
    Coloring c(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c")
            continue;
        long long v = 0;
        long long col = 0;
        if (tag != "v" || !(ls >> v >> col))
            throw ParseError("expected 'v <id> <color>'", lineno);
        if (v < 1 || v > n)
            throw ParseError("vertex id out of range", lineno);
        if (col < 1 || col > 4)
            throw ParseError("color outside 1..4", lineno);
        if (c.colored(static_cast<Vertex>(v - 1)))
            throw ParseError("vertex colored twice", lineno);
        c.set(static_cast<Vertex>(v - 1), static_cast<Color>(col));
    }
    return c;
}

Coloring read_coloring_file(const std::string & path, int n)
{
    auto in = open(path);
    return read_coloring(in, n);
}

} // namespace chroma4::dimacs
