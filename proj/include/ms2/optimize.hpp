#ifndef MS2_OPTIMIZE_HPP
#define MS2_OPTIMIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace ms2 {

/// All simple directed cycles of a digraph.
struct CycleSet {
    /// Each cycle as a vertex sequence starting at its smallest vertex.
    std::vector<std::vector<int>> cycles;
    /// True when enumeration stopped because the cap was hit.
    bool truncated = false;

    std::int64_t count() const { return static_cast<std::int64_t>(cycles.size()); }
};

/// Enumerate every simple directed cycle (Johnson's algorithm over
/// strongly connected components).  Deterministic: start vertices
/// ascending, adjacency ascending, so each cycle is emitted starting
/// at its least vertex.  Stops with truncated=true once more than
/// max_cycles cycles exist.
CycleSet enumerate_simple_cycles(int num_vertices,
                                 const std::vector<std::pair<int, int>> &edges,
                                 std::int64_t max_cycles);

/// Deterministic topological order: depth-first search with roots and
/// adjacency in ascending vertex order, reverse postorder output.
/// Throws std::invalid_argument if the graph has a cycle.
std::vector<int> topological_sort(int num_vertices,
                                  const std::vector<std::pair<int, int>> &edges);

/// "Sum of the listed variables is at most bound."
struct AtMostConstraint {
    std::vector<int> vars;
    int bound = 0;
};

/// Maximize a nonnegative-weighted sum of 0/1 variables subject to
/// at-most constraints.  The two constraint shapes used by the
/// trajectory algorithms are cycle covers (at most |C|-1 of a cycle's
/// free vertices) and pair exclusions (at most one of two vertices).
struct BinaryProgram {
    int num_vars = 0;
    std::vector<std::int64_t> weights;
    std::vector<AtMostConstraint> constraints;

    explicit BinaryProgram(int vars = 0, std::int64_t uniform_weight = 1)
        : num_vars(vars),
          weights(static_cast<size_t>(vars), uniform_weight) {}

    /// At most vars.size()-1 of these variables (a cycle with any
    /// always-selected members already subtracted out).
    void add_cycle_cover(std::vector<int> vars);

    /// At most one of u, v.
    void add_pair_exclusion(int u, int v);
};

struct SolveResult {
    std::vector<char> assignment;
    std::int64_t objective = 0;
};

/// Exact maximization by depth-first branch and bound: variables are
/// branched in index order trying 1 before 0, constraints with no
/// slack propagate their unfixed variables to 0, and subtrees whose
/// optimistic value (current + sum of unfixed weights) cannot beat
/// the incumbent are pruned.  Among optima this returns the
/// lexicographically greatest assignment in variable order.
SolveResult solve_max_binary(const BinaryProgram &prog);

} // namespace ms2

#endif // MS2_OPTIMIZE_HPP
