#pragma once

#include <optional>
#include <vector>

#include "chroma4/cutsets.hpp"
#include "chroma4/detectors.hpp"
#include "chroma4/graph.hpp"

namespace chroma4 {

struct Phase1Options {
    /// Re-check (P6,C5)-freeness after every contraction while the reduced
    /// graph has fewer than free_check_below vertices.
    bool verify_free = true;
    int free_check_below = 48;
};

struct Phase1Outcome {
    enum class Kind { not_colorable, clean, reduced };
    Kind kind = Kind::clean;
    /// The clean-check report that produced this outcome: the evidence for
    /// not_colorable, the dirty witness for reduced.
    CleanReport report;
    /// Clean or reduced graph (unchanged input for not_colorable).
    Graph graph;
    std::optional<ChromaticPartition> partition;
    std::optional<ContractionRecord> record;
};

[[nodiscard]] const char * to_string(Phase1Outcome::Kind k);

/// One cleaning step on a connected (P6,C5)-free graph. Structural failures
/// surface as InputNotFreeError.
[[nodiscard]] Phase1Outcome clean_step(const Graph & g, const Phase1Options & opt = {});

struct CleanLoopResult {
    /// not_colorable or clean, never reduced.
    Phase1Outcome outcome;
    std::vector<ContractionRecord> journal;
    /// Every reduction in order, for reporting.
    std::vector<Phase1Outcome> steps;
};

/// Cleans until the graph is clean or shown not 4-colorable; at most n rounds.
[[nodiscard]] CleanLoopResult clean_loop(const Graph & g, const Phase1Options & opt = {});

} // namespace chroma4
