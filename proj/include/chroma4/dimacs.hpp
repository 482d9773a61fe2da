#pragma once

#include <iosfwd>
#include <string>

#include "chroma4/graph.hpp"

namespace chroma4::dimacs {

/// Reads `p edge n m` / `e u v` (1-based) with `c` comment lines. `p col` is
/// accepted as a synonym. Duplicate edges are merged; the edge count in the
/// problem line is not enforced. Throws ParseError.
Graph read_graph(std::istream & in);
Graph read_graph_file(const std::string & path);

/// Writes the problem line then every edge once with u < v, sorted.
void write_graph(std::ostream & out, const Graph & g, const std::string & comment = {});
std::string to_string(const Graph & g, const std::string & comment = {});

/// One `v <id> <color>` line per vertex, 1-based ids. Uncolored vertices are skipped.
void write_coloring(std::ostream & out, const Coloring & c);

/// Parses the coloring format back. Vertices missing from the file stay
/// uncolored; colors must be 1..4.
Coloring read_coloring(std::istream & in, int n);
Coloring read_coloring_file(const std::string & path, int n);

} // namespace chroma4::dimacs
