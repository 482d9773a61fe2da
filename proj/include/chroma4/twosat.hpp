#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace chroma4 {

/// Literal over variable `var`; positive when `negated` is false.
struct Literal {
    int var = 0;
    bool negated = false;

    [[nodiscard]] Literal operator~() const { return {var, !negated}; }
    [[nodiscard]] int code() const { return 2 * var + (negated ? 1 : 0); }
    friend bool operator==(const Literal &, const Literal &) = default;
};

[[nodiscard]] inline Literal pos(int var) { return {var, false}; }
[[nodiscard]] inline Literal neg(int var) { return {var, true}; }

/// 2-CNF formula. Unit clauses are stored as (l or l).
class TwoSatInstance {
public:
    explicit TwoSatInstance(int variables = 0) : variables_(variables) {}

    int add_variable() { return variables_++; }
    void add_clause(Literal a, Literal b);
    void add_unit(Literal a) { add_clause(a, a); }

    [[nodiscard]] int variables() const { return variables_; }
    [[nodiscard]] const std::vector<std::pair<Literal, Literal>> & clauses() const { return clauses_; }

    /// True when every clause has a true literal under `assignment`.
    [[nodiscard]] bool satisfied_by(const std::vector<bool> & assignment) const;

private:
    int variables_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

/// Implication-graph SCC method. Returns a satisfying assignment or nothing;
/// the same instance always yields the same assignment.
[[nodiscard]] std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance & inst);

} // namespace chroma4
