#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chroma4/detectors.hpp"
#include "chroma4/graph.hpp"

namespace chroma4 {

/// Clique-cutset decomposition. atoms[k] for k < last was split off along
/// the clique separators[k]; the last atom is what remained and is the root.
/// parent[k] is the first later atom containing separators[k]. The root's
/// separator is empty and its parent is -1.
struct DecompositionTree {
    std::vector<VertexSet> atoms;
    std::vector<VertexSet> separators;
    std::vector<int> parent;

    [[nodiscard]] int root() const { return static_cast<int>(atoms.size()) - 1; }
};

/// Atoms via a minimal elimination ordering (MCS-M) and its clique minimal
/// separators. Throws UsageError on a disconnected graph.
[[nodiscard]] DecompositionTree clique_cutset_decompose(const Graph & g);

/// Result of MCS-M: alpha[v] is v's position in the elimination ordering,
/// fill is the minimal triangulation, generators mark vertices whose higher
/// neighborhood in fill is a minimal separator.
struct MinimalOrdering {
    std::vector<int> alpha;
    std::vector<VertexSet> fill;
    std::vector<bool> generator;
};
[[nodiscard]] MinimalOrdering mcs_m(const Graph & g);

/// Partition of a cutset into independent, pairwise complete parts, with the
/// minimal-separator witness: two components of G - s that every member of s sees.
struct ChromaticPartition {
    VertexSet s;
    std::vector<VertexSet> parts;
    VertexSet k;
    VertexSet k_prime;
    /// "x3" (all five-neighbor case) or "x4" (forced antihole coloring case).
    std::string rule;
};

/// Builds the partition of N(K) for a dirty component K of G - (C u N(C)).
/// Structural failures throw ContractError tagged x1, x2, x3 or x4.
[[nodiscard]] ChromaticPartition find_chromatic_partition(const Graph & g, const AntiholeContext & ctx,
                                                          const VertexSet & k);

/// Empty string when every ChromaticPartition invariant holds, otherwise the
/// first broken one.
[[nodiscard]] std::string check_partition(const Graph & g, const ChromaticPartition & p);

/// The nested-or-adjacent dichotomy on S: u1u2 is a non-edge iff their antihole
/// neighborhoods are nested. Returns the first offending pair.
[[nodiscard]] std::optional<std::pair<Vertex, Vertex>> x2_violation(const Graph & g, const AntiholeContext & ctx,
                                                                    const VertexSet & s);

struct ContractionRecord {
    /// Parts in parent-graph ids.
    std::vector<VertexSet> parts;
    /// New vertex for each part, in child-graph ids.
    std::vector<Vertex> new_ids;
    /// Every parent vertex mapped to its child vertex.
    std::vector<Vertex> to_child;
    int parent_size = 0;
    int child_size = 0;
};

/// Contracts each part to one vertex. Untouched vertices keep their order;
/// s_1..s_t are appended. Throws ContractError when the partition is invalid.
[[nodiscard]] std::pair<Graph, ContractionRecord> contract_chromatic(const Graph & g, const ChromaticPartition & p);

/// Pulls a coloring of the child graph back to the parent: each vertex takes
/// its image's color.
[[nodiscard]] Coloring expand_record(const Coloring & child, const ContractionRecord & rec);

} // namespace chroma4
