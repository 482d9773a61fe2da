#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chroma4/graph.hpp"

namespace chroma4::oracle {

/// Exact k-colorability by plain backtracking over a fixed vertex order with
/// color-symmetry pruning. Shares no code with the solver. n <= 20.
[[nodiscard]] std::optional<Coloring> brute_k_colorable(const Graph & g, int k);
inline constexpr int kBruteCap = 20;

enum class Repair { chord, deletion, resample };

struct GenSpec {
    int n = 10;
    double p = 0.3;
    std::uint64_t seed = 1;
    /// random, c7bar, c9bar, multipartite, antihole7, hubs, dirty, x3, chain.
    std::string preset = "random";
    Repair repair = Repair::chord;
    int max_attempts = 200;
};

/// Connected (P6,C5)-free graph, identical for identical specs.
/// Throws GenerationError when attempts run out.
[[nodiscard]] Graph generate_free(const GenSpec & spec);

[[nodiscard]] const std::vector<std::string> & presets();

struct CorpusItem {
    std::string name;
    Graph graph;
};

/// The differential corpus: `random_count` random graphs plus `seeded_count`
/// antihole-seeded ones, n drawn from [n_min, n_max].
[[nodiscard]] std::vector<CorpusItem> build_corpus(int random_count, int seeded_count, int n_min, int n_max,
                                                   std::uint64_t seed);

struct DiffRecord {
    std::string name;
    int n = 0;
    int m = 0;
    bool oracle = false;
    bool solver = false;
    /// ok, mismatch, error.
    std::string status;
    std::string detail;
    /// DIMACS text of the graph when status is not ok.
    std::string reproducer;
};

struct DiffReport {
    std::vector<DiffRecord> records;
    int mismatches = 0;
    int errors = 0;

    /// One line per record, then a summary line.
    [[nodiscard]] std::string text() const;
};

/// Decides 4-colorability, or throws. The default checks the solver's coloring.
using Decider = std::function<bool(const Graph &)>;
[[nodiscard]] Decider solver_decider();

/// Compares `decide` against brute_k_colorable(., 4) on every item. Records
/// keep corpus order for any number of jobs.
[[nodiscard]] DiffReport differential_run(const std::vector<CorpusItem> & corpus, const Decider & decide,
                                          int jobs = 1);

} // namespace chroma4::oracle
