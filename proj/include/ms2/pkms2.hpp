#ifndef MS2_PKMS2_HPP
#define MS2_PKMS2_HPP

#include <cstdint>
#include <vector>

#include "ms2/partition.hpp"
#include "ms2/structures.hpp"
#include "ms2/trajectory.hpp"

namespace ms2 {

/// Moves converting one equivalence class from its source pairs to its
/// target pairs, consuming the canonical walk of classify_path_type:
///   type 1: remove the walk's last source pair, then shift the
///           remaining source pairs rightwards, right to left
///   type 2: shift every source pair onto the target pair to its
///           right, rightmost pair first
///   type 3: shift every source pair onto the target pair to its
///           left, leftmost pair first
///   type 4: shift all but the walk's last target pair into place,
///           then add that last target pair
///   type 5: remove the closing source pair, shift the rest, then add
///           the walk's last target pair
/// Every move is admissible when the class is processed in isolation;
/// interleaving pairs of other classes may cross the intermediates.
std::vector<Move> path_subroutine(const EquivalenceClass &cls);

/// Number of moves path_subroutine emits: half the class size
/// (rounded down), plus one for cycle classes.
int path_subroutine_length(const EquivalenceClass &cls);

/// Shortest refolding trajectory when crossing intermediates are
/// allowed: forced removals, one subroutine per class of A and B0 in
/// ascending order of smallest member, forced additions.  Verify the
/// result with VerifyOptions::allow_crossing = true.
MethodResult pk_ms2(const SecondaryStructure &s, const SecondaryStructure &t);

/// Closed-form length of the pk_ms2 trajectory: the sum of
/// path_subroutine_length over every equivalence class of A and B
/// (classes made of forced removals or forced additions contribute
/// exactly one move each).
std::int64_t pk_ms2_distance(const SecondaryStructure &s,
                             const SecondaryStructure &t);

} // namespace ms2

#endif // MS2_PKMS2_HPP
