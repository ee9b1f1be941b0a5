#ifndef MS2_PARTITION_HPP
#define MS2_PARTITION_HPP

#include <vector>

#include "ms2/structures.hpp"

namespace ms2 {

/// Partition of positions 1..n induced by two structures s, t:
///   A  - paired in both with different partners
///   B  - paired in exactly one structure
///   C  - unpaired in both
///   D  - paired in both with the same partner
/// B splits further:
///   B1 - endpoints of s-pairs whose both ends are untouched by t
///   B2 - endpoints of t-pairs whose both ends are untouched by s
///   B0 - the rest of B
/// and the corresponding forced pair sets:
///   BP1 - pairs of s untouched by t (must be removed by any trajectory)
///   BP2 - pairs of t untouched by s (must be added by any trajectory)
struct PositionPartition {
    std::vector<Pos> A, B, C, D;
    std::vector<Pos> B0, B1, B2;
    std::vector<BasePair> BP1, BP2;
};

/// Compute the position partition.  Requires equal lengths.
PositionPartition partition_positions(const SecondaryStructure &s,
                                      const SecondaryStructure &t);

/// Shape of an equivalence class under the relation i ~ j iff the
/// positions are partners in s or in t.  Classes are alternating
/// paths or cycles; the five shapes determine the per-class move
/// subroutine.
enum class PathType {
    /// Even path, both ends touched only by s.
    SOnly = 1,
    /// Odd path whose s-only end precedes its t-only end.
    SLead = 2,
    /// Odd path whose t-only end precedes its s-only end.
    TLead = 3,
    /// Even path, both ends touched only by t.
    TOnly = 4,
    /// Cycle: every member paired in both structures.
    Cycle = 5,
};

/// One equivalence class.
struct EquivalenceClass {
    /// Members in ascending position order.
    std::vector<Pos> members;
    /// Members in canonical walk order (see classify_path_type).
    std::vector<Pos> walk;
    PathType type = PathType::SOnly;

    Pos min_member() const { return members.front(); }
    bool is_cycle() const { return type == PathType::Cycle; }
};

/// Number of s-pairs with both ends in the class.
int class_pairs_in(const SecondaryStructure &s, const EquivalenceClass &cls);

/// Compute the equivalence classes covering exactly the given
/// universe of positions (callers pass A+B or A+B0).  Classes are
/// returned in ascending order of their smallest member.  The
/// partner-links of every universe position must stay inside the
/// universe.
std::vector<EquivalenceClass>
equivalence_classes(const SecondaryStructure &s, const SecondaryStructure &t,
                    const std::vector<Pos> &universe);

/// Classify one class and produce its canonical walk:
///   type 1: starts at the smallest s-only end, first step via s
///   type 2: starts at the (unique) s-only end, first step via s
///   type 3: starts at the (unique) t-only end, first step via t
///   type 4: starts at the smallest t-only end, first step via t
///   type 5: starts at the smallest member, first step via t; the
///           closing s-pair {walk.back(), walk.front()} is implicit.
EquivalenceClass classify_path_type(const SecondaryStructure &s,
                                    const SecondaryStructure &t,
                                    std::vector<Pos> members);

} // namespace ms2

#endif // MS2_PARTITION_HPP
