#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma4/cutsets.hpp"
#include "chroma4/phase1.hpp"
#include "chroma4/phase2.hpp"

namespace chroma4 {

struct SolveOptions {
    /// Skip the up-front P6/C5 check.
    bool assume_free = false;
    /// Run detectors above the size ceiling.
    bool force = false;
    Phase1Options phase1;
    Phase2Options phase2;
};

struct AtomOutcome {
    /// Vertices of the cleaned component graph.
    VertexSet vertices;
    std::optional<Antihole> antihole;
    bool colorable = true;
    Phase2Stats phase2;
};

struct ComponentTrace {
    /// Input vertices of this component.
    VertexSet vertices;
    CleanLoopResult phase1;
    DecompositionTree tree;
    std::vector<AtomOutcome> atoms;
};

/// Why a graph is not 4-colorable. `graph` is the graph the witness lives in
/// (a cleaned component or one of its atoms); its labels are 1-based input ids,
/// merged vertices read "{a,b}".
struct Evidence {
    /// "K5", "9-antihole", "C1", "C2" or "phase2".
    std::string kind;
    Graph graph;
    Witness witness;
    /// The antihole at fault for C1, C2 and phase2.
    std::optional<Antihole> antihole;
};

struct SolveResult {
    bool colorable = false;
    /// Total proper coloring of the input when colorable.
    std::optional<Coloring> coloring;
    std::optional<Evidence> evidence;
    std::vector<ComponentTrace> components;
};

/// Decides 4-colorability. Throws InputNotFreeError (with the witness) when
/// the input has an induced P6 or C5 and assume_free is off.
[[nodiscard]] SolveResult solve(const Graph & g, const SolveOptions & opt = {});

/// Renames the child's colors so they agree with the parent on the separator,
/// then takes the union. Throws ContractError when no renaming fits.
[[nodiscard]] Coloring glue(const Coloring & parent, const Coloring & child, const VertexSet & separator);

/// Undoes a Phase I journal: each part takes the color of its contracted vertex.
[[nodiscard]] Coloring expand(const Coloring & c, const std::vector<ContractionRecord> & journal);

/// Exact k-coloring by DSATUR-ordered backtracking.
[[nodiscard]] std::optional<Coloring> dsatur_color(const Graph & g, int k);

/// Checks an evidence witness against its graph.
[[nodiscard]] bool verify_evidence(const Evidence & e);

} // namespace chroma4
