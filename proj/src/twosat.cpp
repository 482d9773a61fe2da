#include "chroma4/twosat.hpp"

#include <algorithm>
#include <string>

#include "chroma4/errors.hpp"

namespace chroma4 {

void TwoSatInstance::add_clause(Literal a, Literal b)
{
    if (a.var < 0 || a.var >= variables_ || b.var < 0 || b.var >= variables_)
        throw UsageError("clause mentions variable outside 0.." + std::to_string(variables_ - 1));
    clauses_.emplace_back(a, b);
}

bool TwoSatInstance::satisfied_by(const std::vector<bool> & assignment) const
{
    auto value = [&](Literal l) { return assignment[static_cast<std::size_t>(l.var)] != l.negated; };
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const auto & c) { return value(c.first) || value(c.second); });
}

std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance & inst)
{
    const int nodes = 2 * inst.variables();

    // Implication graph in CSR form: (a or b) gives ~a -> b and ~b -> a.
    std::vector<int> degree(static_cast<std::size_t>(nodes) + 1, 0);
    for (const auto & [a, b] : inst.clauses()) {
        ++degree[static_cast<std::size_t>((~a).code())];
        ++degree[static_cast<std::size_t>((~b).code())];
    }
    std::vector<int> start(static_cast<std::size_t>(nodes) + 1, 0);
    for (int v = 0; v < nodes; ++v)
        start[static_cast<std::size_t>(v) + 1] = start[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
    std::vector<int> targets(static_cast<std::size_t>(start.back()));
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (const auto & [a, b] : inst.clauses()) {
        targets[static_cast<std::size_t>(fill[static_cast<std::size_t>((~a).code())]++)] = b.code();
        targets[static_cast<std::size_t>(fill[static_cast<std::size_t>((~b).code())]++)] = a.code();
    }

    // Iterative Tarjan. Components are numbered in reverse topological order.
    constexpr int unvisited = -1;
    std::vector<int> index(static_cast<std::size_t>(nodes), unvisited);
    std::vector<int> low(static_cast<std::size_t>(nodes), 0);
    std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
    std::vector<bool> on_stack(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> call; // (node, next edge offset)
    int counter = 0;
    int comps = 0;

    for (int root = 0; root < nodes; ++root) {
        if (index[static_cast<std::size_t>(root)] != unvisited)
            continue;
        call.emplace_back(root, start[static_cast<std::size_t>(root)]);
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;

        while (!call.empty()) {
            auto & [v, edge] = call.back();
            const auto uv = static_cast<std::size_t>(v);
            if (edge < start[uv + 1]) {
                const int w = targets[static_cast<std::size_t>(edge++)];
                const auto uw = static_cast<std::size_t>(w);
                if (index[uw] == unvisited) {
                    index[uw] = low[uw] = counter++;
                    stack.push_back(w);
                    on_stack[uw] = true;
                    call.emplace_back(w, start[uw]);
                }
                else if (on_stack[uw]) {
                    low[uv] = std::min(low[uv], index[uw]);
                }
                continue;
            }
            if (low[uv] == index[uv]) {
                int w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = comps;
                } while (w != v);
                ++comps;
            }
            const int finished = v;
            call.pop_back();
            if (!call.empty()) {
                const auto up = static_cast<std::size_t>(call.back().first);
                low[up] = std::min(low[up], low[static_cast<std::size_t>(finished)]);
            }
        }
    }

    std::vector<bool> assignment(static_cast<std::size_t>(inst.variables()));
    for (int var = 0; var < inst.variables(); ++var) {
        const int t = comp[static_cast<std::size_t>(pos(var).code())];
        const int f = comp[static_cast<std::size_t>(neg(var).code())];
        if (t == f)
            return std::nullopt;
        // Earlier-finished components are later in topological order.
        assignment[static_cast<std::size_t>(var)] = t < f;
    }
    if (!inst.satisfied_by(assignment))
        throw ContractError("2sat", "decoded assignment violates a clause");
    return assignment;
}

} // namespace chroma4
