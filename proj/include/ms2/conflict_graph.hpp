#ifndef MS2_CONFLICT_GRAPH_HPP
#define MS2_CONFLICT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ms2/partition.hpp"
#include "ms2/structures.hpp"

namespace ms2 {

/// A candidate shift: pivot y keeps its partner role while the pair
/// {y,z} in the source structure becomes {x,y} in the target one.
struct TripletNode {
    Pos x = 0; ///< new endpoint; {x,y} is a target pair
    Pos y = 0; ///< pivot, paired in both structures
    Pos z = 0; ///< old endpoint; {y,z} is a source pair

    BasePair s_pair() const { return ordered_pair(y, z); }
    BasePair t_pair() const { return ordered_pair(x, y); }
    std::array<Pos, 3> flatten() const { return {x, y, z}; }
    /// How far the moving endpoint travels.
    int displacement() const { return x > z ? x - z : z - x; }

    friend bool operator==(const TripletNode &, const TripletNode &) = default;
};

/// Canonical node order: by pivot, ties by x then z.
bool node_less(const TripletNode &a, const TripletNode &b);

/// Number of shared positions between the two nodes' endpoint sets.
int node_overlap(const TripletNode &a, const TripletNode &b);

/// Classify a node 1..6 by the relative order of (x, y, z):
/// x<y<z: 1, z<y<x: 2, y<z<x: 3, y<x<z: 4, z<x<y: 5, x<z<y: 6.
int node_type(const TripletNode &v);

/// Render as "(x,y,z)".
std::string to_string(const TripletNode &v);

/// Role of a node in the digraph after closed 2-cycle handling and
/// locality filtering.
enum class NodeRole : std::uint8_t {
    Free = 0,   ///< ordinary IP variable
    Forced = 1, ///< always shifted (designated closed 2-cycle vertex)
    Dropped = 2 ///< never shifted (withheld 2-cycle vertices, locality)
};

/// A size-4 cycle class {a1<a2<a3<a4} whose two source pairs and two
/// target pairs interleave; resolvable in three moves: remove one
/// source pair, shift the other via v1, and add the leftover target
/// pair at the end.
struct ClosedTwoCycle {
    std::array<Pos, 4> a{};
    /// false: t holds {(a1,a2),(a3,a4)} and s holds {(a1,a4),(a2,a3)};
    /// true: the mirrored configuration (s and t exchanged).
    bool mirrored = false;
    TripletNode v1, v2, v3, v4;
    BasePair remove_pair{}; ///< source pair removed up front
    /// Whether v1's shift is admissible (can be false under locality).
    bool shiftable = true;
};

/// The shift-ordering digraph: one node per admissible shift, and an
/// edge (u,v) whenever u's shift must happen before v's shift because
/// u's source pair touches or crosses v's target pair (only between
/// nodes sharing at most one position).
struct ConflictDigraph {
    std::vector<TripletNode> nodes; ///< canonical order
    std::vector<NodeRole> roles;
    std::vector<std::pair<int, int>> edges; ///< between non-dropped nodes, sorted
    std::vector<std::vector<int>> out_adj;  ///< sorted adjacency
    std::vector<std::pair<int, int>> exclusion_pairs; ///< overlap-2 free pairs, sorted
    std::vector<ClosedTwoCycle> two_cycles;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int active_count() const;
};

/// Options for digraph construction.
struct DigraphOptions {
    /// When >= 0, drop nodes whose moving endpoint travels farther.
    int locality_d = -1;
    /// Restrict nodes to pivots inside this set (empty = no filter).
    std::vector<Pos> pivot_universe;
};

/// Build the digraph for the current source structure s and target t.
ConflictDigraph build_conflict_digraph(const SecondaryStructure &s,
                                       const SecondaryStructure &t,
                                       const DigraphOptions &opts = DigraphOptions{});

/// Graphviz rendering (deterministic node/edge order).
std::string to_dot(const ConflictDigraph &g);

/// Class-level digraph for the near-optimal method: one vertex per
/// equivalence class, one weighted arc (i,j) per ordered class pair
/// where some source pair of class i crosses a target pair of class
/// j.  Arc weight = number of such source pairs.
struct CoarseArc {
    int from = 0;
    int to = 0;
    std::vector<BasePair> pairs; ///< source pairs of `from` crossing into `to`
};

struct CoarseDigraph {
    int num_classes = 0;
    std::vector<CoarseArc> arcs; ///< sorted by (from, to)
};

CoarseDigraph build_coarse_digraph(const SecondaryStructure &s,
                                   const SecondaryStructure &t,
                                   const std::vector<EquivalenceClass> &classes);

/// Graphviz rendering of the class-level digraph.
std::string to_dot(const CoarseDigraph &g,
                   const std::vector<EquivalenceClass> &classes);

} // namespace ms2

#endif // MS2_CONFLICT_GRAPH_HPP
