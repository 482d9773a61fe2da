#pragma once

#include <optional>
#include <vector>

#include "chroma4/graph.hpp"

namespace chroma4 {

/// Per-vertex permitted colors.
using ListAssignment = std::vector<ColorSet>;

/// Exact list coloring for palettes of at most three colors. Backtracking
/// with unit propagation and a free-color dominance rule; vertex choice is
/// smallest list first, colors lowest first. Throws UsageError when a list
/// leaves the palette or the palette has more than three colors.
[[nodiscard]] std::optional<Coloring> list_color_3(const Graph & g, const ListAssignment & lists, ColorSet palette);

/// Two-color list coloring through 2SAT: one variable per vertex selects
/// between the two palette colors.
[[nodiscard]] std::optional<Coloring> list_color_2(const Graph & g, const ListAssignment & lists, ColorSet palette);

/// The backtracking engine behind list_color_3, for any lists over {1..4}.
/// Ties on list size go to the higher-degree vertex, then the lower id.
[[nodiscard]] std::optional<Coloring> list_color_exact(const Graph & g, const ListAssignment & lists);

/// Checks that c is total, proper, and respects lists.
[[nodiscard]] bool respects_lists(const Graph & g, const Coloring & c, const ListAssignment & lists);

} // namespace chroma4
