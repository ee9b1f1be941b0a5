#include "ms2/pkms2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ms2 {

std::vector<Move> path_subroutine(const EquivalenceClass &cls) {
    const std::vector<Pos> &w = cls.walk;
    const int n = static_cast<int>(w.size());
    std::vector<Move> moves;
    // In all five shapes the walk alternates between pairs of one
    // structure and pairs of the other, so the pair between walk
    // positions k-1 and k is w[k-1],w[k]; which structure it belongs
    // to follows from the walk's first step.
    auto pair_at = [&w](int k) { return ordered_pair(w[k - 1], w[k]); };
    switch (cls.type) {
    case PathType::SOnly: {
        // Walk [b1,a1,...,bm,am]: source pairs {b_i,a_i}, target pairs
        // {a_i,b_i+1}.  Remove the last source pair, then shift each
        // earlier source pair onto the freed target to its right.
        const int m = n / 2;
        moves.push_back(Move::remove(pair_at(2 * m - 1)));
        for (int i = m - 1; i >= 1; --i)
            moves.push_back(Move::shift(pair_at(2 * i - 1), pair_at(2 * i)));
        break;
    }
    case PathType::SLead: {
        // Walk [b0,a1,b1,...,ak,bk]: source pairs {b_i-1,a_i}, target
        // pairs {a_i,b_i}.  The walk's far end is free, so shift right
        // to left.
        const int k = n / 2;
        for (int i = k; i >= 1; --i)
            moves.push_back(Move::shift(pair_at(2 * i - 1), pair_at(2 * i)));
        break;
    }
    case PathType::TLead: {
        // Walk [a0,b1,a1,...,bk,ak]: target pairs {a_i-1,b_i}, source
        // pairs {b_i,a_i}.  The walk's near end is free, so shift left
        // to right.
        const int k = n / 2;
        for (int i = 1; i <= k; ++i)
            moves.push_back(Move::shift(pair_at(2 * i), pair_at(2 * i - 1)));
        break;
    }
    case PathType::TOnly: {
        // Walk [a1,b1,...,am,bm]: target pairs {a_i,b_i}, source pairs
        // {b_i,a_i+1}.  Shift left to right, then add the last target.
        const int m = n / 2;
        for (int i = 1; i <= m - 1; ++i)
            moves.push_back(Move::shift(pair_at(2 * i), pair_at(2 * i - 1)));
        moves.push_back(Move::add(pair_at(2 * m - 1)));
        break;
    }
    case PathType::Cycle: {
        // Walk [a1,b1,...,am,bm] plus the implicit closing source pair
        // {b_m,a_1}.  Remove the closing pair to open the cycle, shift
        // left to right, then add the last target pair.
        const int m = n / 2;
        moves.push_back(Move::remove(ordered_pair(w[static_cast<size_t>(n - 1)],
                                                  w[0])));
        for (int i = 1; i <= m - 1; ++i)
            moves.push_back(Move::shift(pair_at(2 * i), pair_at(2 * i - 1)));
        moves.push_back(Move::add(pair_at(2 * m - 1)));
        break;
    }
    }
    return moves;
}

int path_subroutine_length(const EquivalenceClass &cls) {
    int half = static_cast<int>(cls.members.size()) / 2;
    return cls.is_cycle() ? half + 1 : half;
}

MethodResult pk_ms2(const SecondaryStructure &s, const SecondaryStructure &t) {
    PositionPartition part = partition_positions(s, t);
    Trajectory traj;
    for (const BasePair &p : part.BP1)
        traj.moves.push_back(Move::remove(p));
    std::vector<Pos> universe = part.A;
    universe.insert(universe.end(), part.B0.begin(), part.B0.end());
    std::sort(universe.begin(), universe.end());
    for (const EquivalenceClass &cls : equivalence_classes(s, t, universe)) {
        std::vector<Move> sub = path_subroutine(cls);
        traj.moves.insert(traj.moves.end(), sub.begin(), sub.end());
    }
    for (const BasePair &p : part.BP2)
        traj.moves.push_back(Move::add(p));
    traj.recount();
    MethodResult result;
    result.trajectory = std::move(traj);
    return result;
}

std::int64_t pk_ms2_distance(const SecondaryStructure &s,
                             const SecondaryStructure &t) {
    PositionPartition part = partition_positions(s, t);
    std::vector<Pos> universe = part.A;
    universe.insert(universe.end(), part.B.begin(), part.B.end());
    std::sort(universe.begin(), universe.end());
    std::int64_t total = 0;
    for (const EquivalenceClass &cls : equivalence_classes(s, t, universe))
        total += path_subroutine_length(cls);
    return total;
}

} // namespace ms2
