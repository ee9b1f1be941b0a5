#ifndef MS2_TESTS_FIXTURES_HPP
#define MS2_TESTS_FIXTURES_HPP

/// \file
/// Frozen reference instances shared by the unit and acceptance
/// suites: the 25 nt bistable switch, the 56 nt trypanosome spliced
/// leader, two small digraph studies, and the two closed-2-cycle
/// orientations, together with their expected outputs.

#include <string>
#include <vector>

#include "ms2/structures.hpp"

namespace ms2::fixtures {

// --------------------------------------------------------------- bistable
// 25 nt bistable switch: two mutually exclusive hairpins.
// Exact distance 11 = 3 removals + 3 shifts + 5 additions.

inline const std::string bistable_seq = "UGUACCGGAAGGUGCGAAUCUUCCG";
inline const std::string bistable_s = "((((((....)))))).........";
inline const std::string bistable_t = ".....((((((((....))))))))";

/// The full expected text report for the exact method.
inline std::string bistable_exact_text() {
    std::string g;
    g += " 0. ((((((....)))))).........\tinitial\n";
    g += " 1. .(((((....)))))..........\tremove (1,16)\n";
    g += " 2. ..((((....))))...........\tremove (2,15)\n";
    g += " 3. ...(((....)))............\tremove (3,14)\n";
    g += " 4. ....((....))(....).......\t(4,13) -> (13,18)\n";
    g += " 5. .....(....)((....))......\t(5,12) -> (12,19)\n";
    g += " 6. ..........(((....))).....\t(6,11) -> (11,20)\n";
    g += " 7. ......(...(((....)))...).\tadd (7,24)\n";
    g += " 8. ......((..(((....)))..)).\tadd (8,23)\n";
    g += " 9. ......(((.(((....))).))).\tadd (9,22)\n";
    g += "10. ......(((((((....))))))).\tadd (10,21)\n";
    g += "11. .....((((((((....))))))))\tadd (6,25)\n";
    g += "Number of base pair removals: 3\n";
    g += "Number of base pair additions: 5\n";
    g += "Number of base pair shifts: 3\n";
    g += "MS2 Distance: 11\n";
    return g;
}

// -------------------------------------------------------------- collosoma
// 56 nt trypanosome spliced-leader switch.  Exact distance 20 =
// 5 removals + 7 shifts + 8 additions; digraph 12 nodes, 61 edges,
// 0 cycles under the overlap-restricted edge rule (71 edges and 5
// cycles when each overlap-2 exclusion pair is also drawn as a
// mutual edge pair).

inline const std::string collosoma_seq =
    "AACUAAAACAAUUUUUGAAGAACAGUUUCUGUACUUCAUUGGUAUGUAGAGACUUC";
inline const std::string collosoma_s =
    ".......................((((((((((((.....)))))..)))))))..";
inline const std::string collosoma_t =
    ".......((((((..(((((.((((...)))).)))))..))).))).........";

struct ClassExpect {
    std::vector<Pos> members;
    int type;
};

/// Equivalence classes over A union B0, ascending by smallest member.
inline const std::vector<ClassExpect> collosoma_classes = {
    {{10, 23, 31, 45}, 4}, {{11, 33, 43}, 3}, {{12, 20, 34, 42}, 4},
    {{13, 19, 35, 41}, 4}, {{22, 32, 44}, 3},  {{24, 30, 48, 54}, 1},
    {{25, 29, 49, 53}, 1},
};

// ------------------------------------------------------------- 20 nt toy
// Two stems sliding right; digraph 6 nodes, 10 edges, 3 cycles.

inline const std::string toy20_seq = "GGGAAAUUUCCCCAAAGGGG";
inline const std::string toy20_s = "((.....))((.......))";
inline const std::string toy20_t = ".......((((.....))))";

// ------------------------------------------------------------ formal toy
// Pair-set example over 25 positions: three source pairs slide onto
// two target pairs.  Digraph 4 nodes, 2 edges, 3 exclusion pairs.

inline const int toy31_n = 25;
inline const std::vector<BasePair> toy31_s_pairs = {{1, 5}, {10, 15}, {20, 25}};
inline const std::vector<BasePair> toy31_t_pairs = {{5, 10}, {15, 20}};

// --------------------------------------------------------- closed 2-cycle
// 16 nt instances realizing both orientations of the size-4 cycle
// class {1,6,11,16}; each resolves in exactly three moves.

inline const int c2_n = 16;
inline const std::vector<BasePair> c2_outer = {{1, 16}, {6, 11}};
inline const std::vector<BasePair> c2_split = {{1, 6}, {11, 16}};

} // namespace ms2::fixtures

#endif // MS2_TESTS_FIXTURES_HPP
