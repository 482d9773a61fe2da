#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chroma4/detectors.hpp"
#include "chroma4/graph.hpp"
#include "chroma4/listcolor.hpp"

namespace chroma4 {

/// Lists, forbidden colors and forbidden color pairs for one base coloring.
struct ColorState {
    VertexSet r;
    /// Coloring of C u R only.
    Coloring base;
    /// C u (X - Z): the vertices Step 6 colors.
    VertexSet domain;
    ListAssignment lists;
    /// Forbidden colors per vertex (filled on the domain).
    std::vector<ColorSet> q1;
    /// Forbidden pairs for u < v in the domain: bit 4*(i-1)+(j-1) set means
    /// u colored i together with v colored j is forbidden.
    std::map<std::pair<Vertex, Vertex>, std::uint16_t> q2;

    [[nodiscard]] bool q2_forbids(Vertex u, Vertex v, Color i, Color j) const;
};

[[nodiscard]] inline std::uint16_t pair_bit(Color i, Color j)
{
    return static_cast<std::uint16_t>(1u << (4 * (i - 1) + (j - 1)));
}

/// One vertex of S per antihole position, preferring vertices that miss v_{i+3}.
[[nodiscard]] VertexSet build_R(const AntiholeContext & ctx);

/// Every proper 4-coloring of G[C u R] up to color permutation: vertices are
/// taken as v0..v6 then R ascending, and colors appear in increasing order.
/// Return false from fn to stop.
void for_each_base_coloring(const Graph & g, const AntiholeContext & ctx, const VertexSet & r,
                            const std::function<bool(const Coloring &)> & fn);
[[nodiscard]] std::vector<Coloring> enumerate_base_colorings(const Graph & g, const AntiholeContext & ctx,
                                                             const VertexSet & r);

/// Lists from a base coloring: {c(v)} on C u R, all four colors elsewhere.
[[nodiscard]] ColorState initial_state(const Graph & g, const AntiholeContext & ctx, const VertexSet & r,
                                       const Coloring & base);

/// Removes each singleton's color from its neighbors until nothing changes.
/// Each vertex is pushed once, when its list first becomes a singleton.
void propagate(const Graph & g, ListAssignment & lists);

/// Forbidden colors: i goes into Q(v) when N(v) has no list coloring avoiding i.
void compute_Q1(const Graph & g, ColorState & st);
/// Forbidden pairs over the domain, one 2-coloring test per unordered color pair.
void compute_Q2(const Graph & g, ColorState & st);

/// Step 6 through 2SAT. Absent when a domain list is empty or no coloring
/// meets the list and Q constraints. Lists longer than two throw ContractError("z2").
[[nodiscard]] std::optional<Coloring> solve_step6(const Graph & g, const ColorState & st);
/// Direct check of the Step 6 conditions for a coloring of the domain.
[[nodiscard]] bool step6_conditions_hold(const Graph & g, const ColorState & st, const Coloring & c);

/// Which construction finished the extension.
enum class ExtensionRoute { none, total, nice, color_missing };

struct ExtensionTrace {
    int one_color = 0;
    int two_color = 0;
    int singletons = 0;
    ExtensionRoute route = ExtensionRoute::none;
};

/// Extends a good coloring to all of g: one-color and two-color components,
/// then singletons through a nice or missing-color completion.
/// Throws ContractError when the construction breaks.
[[nodiscard]] Coloring extend_good_coloring(const Graph & g, const AntiholeContext & ctx, const ColorState & st,
                                            const Coloring & good, ExtensionTrace * trace = nullptr);

/// Independent route: exact list coloring of each uncolored component of
/// G[Y u Z] against its colored neighborhood.
[[nodiscard]] std::optional<Coloring> extend_by_search(const Graph & g, const AntiholeContext & ctx,
                                                       const ColorState & st, const Coloring & good);

/// Completes a nice partial coloring by 1/2 (or 3/4) component flips.
/// Throws NiceColoringViolation when the input is not nice.
[[nodiscard]] Coloring nice_complete(const Graph & g, const Coloring & partial);
/// Empty when partial is nice, otherwise "N1" or "N2".
[[nodiscard]] std::string nice_violation(const Graph & g, const Coloring & partial);

struct Phase2Stats {
    int r_size = 0;
    int base_colorings = 0;
    int base_tried = 0;
    /// Index of the base coloring that produced the good coloring, or -1.
    int good_index = -1;
    int z2_checks = 0;
    int z2_violations = 0;
    ExtensionTrace extension;
    bool cross_checked = false;
};

struct Phase2Options {
    /// Also run extend_by_search and require it to succeed.
    bool cross_check = true;
    /// Called once per base coloring after Steps 3-6, with the good coloring if any.
    std::function<void(int index, const ColorState &, const std::optional<Coloring> &)> on_base;
};

struct Phase2Result {
    std::optional<Coloring> coloring;
    Phase2Stats stats;
};

/// Phase II on a clean graph with no clique cutset containing the 7-antihole c.
[[nodiscard]] Phase2Result phase2_solve(const Graph & g, const Antihole & c, const Phase2Options & opt = {});

} // namespace chroma4
