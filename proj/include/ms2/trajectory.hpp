#ifndef MS2_TRAJECTORY_HPP
#define MS2_TRAJECTORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ms2/conflict_graph.hpp"
#include "ms2/structures.hpp"

namespace ms2 {

/// One MS2 move.  Remove deletes `from`; Add inserts `to`; Shift
/// replaces `from` by `to`, which must share exactly one endpoint.
struct Move {
    enum class Kind { Remove, Add, Shift };
    Kind kind = Kind::Remove;
    BasePair from{};
    BasePair to{};

    static Move remove(BasePair p) { return {Kind::Remove, p, {}}; }
    static Move add(BasePair p) { return {Kind::Add, {}, p}; }
    static Move shift(BasePair from, BasePair to) {
        return {Kind::Shift, from, to};
    }
    friend bool operator==(const Move &, const Move &) = default;
};

/// Render a move as "remove (i,j)", "add (i,j)" or "(i,j) -> (k,l)".
std::string to_string(const Move &m);

/// A refolding trajectory from one structure to another.
struct Trajectory {
    std::vector<Move> moves;
    int removals = 0;
    int additions = 0;
    int shifts = 0;

    /// Trajectory length = number of moves.
    int length() const { return static_cast<int>(moves.size()); }

    /// Recount removals/additions/shifts from the move list.
    void recount();
};

/// Replay policy.
struct VerifyOptions {
    int min_hairpin = 3;
    /// Permit crossing intermediates (base triples are never allowed).
    bool allow_crossing = false;
};

/// Replay the moves from s and check that every intermediate is a
/// valid structure under the policy and that the end point equals t.
/// Returns false and fills `why` (when given) on the first violation.
bool verify_trajectory(const SecondaryStructure &s,
                       const SecondaryStructure &t, const Trajectory &traj,
                       const VerifyOptions &opts = VerifyOptions{},
                       std::string *why = nullptr);

/// Numbered listing of the replayed trajectory: one line per state
/// ("%2d. <dot-bracket>\t<move>", state 0 annotated "initial"),
/// followed by the removal/addition/shift counts and a final
/// "<distance_label>: <length>" line.
std::string format_trajectory_text(const SecondaryStructure &s,
                                   const Trajectory &traj,
                                   const std::string &distance_label = "MS2 Distance");

/// Tuning knobs for the trajectory algorithms.
struct MethodOptions {
    /// Abort with CycleLimitError when the digraph (or a per-class
    /// subgraph) holds more simple cycles than this.
    std::int64_t max_cycles = 50000000;
    /// When >= 0, only shifts whose moving endpoint travels at most
    /// this far are allowed (exact method only).
    int locality_d = -1;
    /// Search-node budget for the branch-and-bound method.
    std::int64_t node_budget = 10000000;
};

/// Phase timings and digraph statistics for one exact-method run.
struct MethodStats {
    int nodes = 0;
    int edges = 0;
    std::int64_t cycles = 0;
    bool truncated = false;
    std::int64_t micros_cycles = 0;
    std::int64_t micros_ip = 0;
    std::int64_t micros_topo = 0;
};

struct MethodResult {
    Trajectory trajectory;
    MethodStats stats;
};

/// Thrown when cycle enumeration exceeds MethodOptions::max_cycles.
class CycleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when branch-and-bound exceeds MethodOptions::node_budget.
class SearchBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimum-length MS2 trajectory between pseudoknot-free structures:
/// forced removals, conflict digraph, cycle-cover/pair-exclusion
/// maximization of the shift set, then removals, topologically sorted
/// shifts, and additions.
MethodResult ms2_exact(const SecondaryStructure &s,
                       const SecondaryStructure &t,
                       const MethodOptions &opts = MethodOptions{});

/// Near-minimum trajectory that first orders whole equivalence
/// classes by a weighted feedback-arc cut of the class-level digraph,
/// then runs the exact machinery inside each class.
MethodResult ms2_near_optimal(const SecondaryStructure &s,
                              const SecondaryStructure &t,
                              const MethodOptions &opts = MethodOptions{});

/// Greedy heuristic: destroys digraph cycles by repeatedly removing
/// the vertex on the most cycles, then shifts the remainder in
/// topological order.
MethodResult ms2_greedy(const SecondaryStructure &s,
                        const SecondaryStructure &t,
                        const MethodOptions &opts = MethodOptions{});

/// Exact best-first branch-and-bound over removals and shifts with a
/// crossing-relaxed lower bound.
MethodResult ms2_branch_bound(const SecondaryStructure &s,
                              const SecondaryStructure &t,
                              const MethodOptions &opts = MethodOptions{});

} // namespace ms2

#endif // MS2_TRAJECTORY_HPP
