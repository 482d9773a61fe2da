#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chroma4/graph.hpp"

namespace chroma4 {

using Witness = std::vector<Vertex>;

/// First induced P_k in lexicographic order of the vertex sequence.
[[nodiscard]] std::optional<Witness> find_induced_path(const Graph & g, int k);
/// First induced C_k; the witness starts at its lowest vertex and v1 < v_{k-1}.
[[nodiscard]] std::optional<Witness> find_induced_cycle(const Graph & g, int k);
[[nodiscard]] std::optional<VertexSet> find_clique(const Graph & g, int k);
/// k-antihole of g as an ordered tuple: consecutive entries non-adjacent, all
/// other pairs adjacent.
[[nodiscard]] std::optional<Witness> find_antihole(const Graph & g, int k);

/// Visits every induced C_k once, in canonical form (lowest vertex first,
/// v1 < v_{k-1}), lexicographically. Return false from fn to stop.
void for_each_induced_cycle(const Graph & g, int k, const std::function<bool(const Witness &)> & fn);

[[nodiscard]] bool verify_induced_path(const Graph & g, const Witness & w);
[[nodiscard]] bool verify_induced_cycle(const Graph & g, const Witness & w);
[[nodiscard]] bool verify_antihole(const Graph & g, const Witness & w);

/// An induced P6 or C5, checked in that order.
struct ForbiddenWitness {
    std::string kind;
    Witness vertices;
};
[[nodiscard]] std::optional<ForbiddenWitness> find_forbidden(const Graph & g);

/// A 7-antihole v0..v6: v_i v_j is an edge iff 2 <= |i-j| <= 5.
using Antihole = std::array<Vertex, 7>;

/// Every 7-antihole once, canonical rotation/reflection, lexicographic order.
[[nodiscard]] std::vector<Antihole> enumerate_antiholes7(const Graph & g);
[[nodiscard]] std::optional<Antihole> find_antihole7(const Graph & g);

/// 7-bit masks over antihole positions; bit i stands for v_i.
namespace cmask {
    using Mask = std::uint8_t;
    inline constexpr Mask kFull = 0x7F;
    [[nodiscard]] constexpr Mask at(int i) { return static_cast<Mask>(1u << (((i % 7) + 7) % 7)); }
    /// v_i, v_{i+1}, ..., v_{i+len-1}.
    [[nodiscard]] Mask run(int i, int len);
    /// True when m is exactly len cyclically consecutive positions.
    [[nodiscard]] bool is_run(Mask m, int len);
    /// True when m contains len cyclically consecutive positions.
    [[nodiscard]] bool has_run(Mask m, int len);
    /// True when m contains three pairwise adjacent antihole positions.
    [[nodiscard]] bool has_triangle(Mask m);
    [[nodiscard]] int count(Mask m);
}

/// A 7-antihole together with the partition of the remaining vertices by how
/// they attach to it.
struct AntiholeContext {
    Antihole c{};
    VertexSet cset;
    /// N(C).
    VertexSet x;
    /// V - (C u X).
    VertexSet y;
    /// Leaves, and leaves at each v_l.
    VertexSet z;
    std::array<VertexSet, 7> z_at;
    VertexSet big;
    VertexSet small;
    /// Small vertices with a neighbor in Y u Z.
    VertexSet s;
    /// Per vertex of the graph: which antihole positions it is adjacent to.
    std::vector<cmask::Mask> on_c;

    [[nodiscard]] Vertex v(int i) const { return c[static_cast<std::size_t>(((i % 7) + 7) % 7)]; }
    [[nodiscard]] cmask::Mask mask(Vertex u) const { return on_c[static_cast<std::size_t>(u)]; }
};

/// Throws ContractError("antihole") when c does not induce a 7-antihole.
[[nodiscard]] AntiholeContext classify_attachment(const Graph & g, const Antihole & c);

struct Lemma1Violation {
    /// "1", "2", "3.1", "3.2", "3.3", "4.1", "4.2.1", "4.2.2" or "5".
    std::string property;
    Witness vertices;
};

/// Testable instances of the attachment properties of (P6,C5)-free graphs
/// around a 7-antihole. Empty on every valid input.
[[nodiscard]] std::vector<Lemma1Violation> assert_lemma1(const Graph & g, const AntiholeContext & ctx);

enum class CleanVerdict { clean, has_k5, has_antihole9, violates_c1, violates_c2, dirty };

[[nodiscard]] std::string to_string(CleanVerdict v);

struct AntiholeCheck {
    Antihole c{};
    int components = 0;
};

struct CleanReport {
    CleanVerdict verdict = CleanVerdict::clean;
    /// The antihole at fault (C1, C2, dirty).
    Antihole antihole{};
    /// K5 members, 9-antihole tuple, the C1 vertex, or the C2 pair.
    Witness witness;
    /// Dirty component K of G - (C u N(C)).
    VertexSet component;
    /// Antiholes fully checked before the verdict, in processing order.
    std::vector<AntiholeCheck> checked;
};

/// C1, C2 and the component conditions for one antihole; `checked` holds
/// that antihole when it is clean.
[[nodiscard]] CleanReport check_antihole_clean(const Graph & g, const Antihole & c);

/// Caller guarantees g is (P6,C5)-free.
[[nodiscard]] CleanReport check_clean(const Graph & g);
/// Re-checks a report's witness against g.
[[nodiscard]] bool verify_clean_witness(const Graph & g, const CleanReport & r);

/// Detector run-time ceiling: above this many vertices, the Theta(n^7)
/// searches refuse to run unless forced.
inline constexpr int kDetectorCeiling = 64;
void check_detector_size(const Graph & g, bool force);

} // namespace chroma4
