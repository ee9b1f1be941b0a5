#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "ms2/conflict_graph.hpp"
#include "ms2/optimize.hpp"
#include "ms2/partition.hpp"
#include "ms2/structures.hpp"

using namespace ms2;

namespace {

std::vector<Pos> class_universe(const SecondaryStructure &s,
                                const SecondaryStructure &t) {
    PositionPartition pp = partition_positions(s, t);
    std::vector<Pos> u = pp.A;
    u.insert(u.end(), pp.B0.begin(), pp.B0.end());
    std::sort(u.begin(), u.end());
    return u;
}

std::set<std::set<int>> cycle_vertex_sets(const ConflictDigraph &g,
                                          std::int64_t cap = 100000) {
    CycleSet cs = enumerate_simple_cycles(g.num_nodes(), g.edges, cap);
    REQUIRE_FALSE(cs.truncated);
    std::set<std::set<int>> out;
    for (const auto &walk : cs.cycles)
        out.emplace(walk.begin(), walk.end());
    return out;
}

} // namespace

TEST_CASE("triplet node basics") {
    TripletNode v{18, 13, 4}; // target pair (13,18), source pair (4,13)
    CHECK(v.t_pair() == BasePair{13, 18});
    CHECK(v.s_pair() == BasePair{4, 13});
    CHECK(v.displacement() == 14);
    CHECK(to_string(v) == "(18,13,4)");

    CHECK(node_overlap({25, 6, 11}, {20, 11, 6}) == 2);
    CHECK(node_overlap({5, 10, 15}, {10, 5, 1}) == 2);
    CHECK(node_overlap({18, 13, 4}, {19, 12, 5}) == 0);
    CHECK(node_overlap({18, 13, 4}, {18, 13, 4}) == 3);

    // pivot first, then the remaining coordinates
    CHECK(node_less({25, 6, 11}, {20, 11, 6}));
    CHECK(node_less({20, 11, 6}, {19, 12, 5}));
    CHECK_FALSE(node_less({18, 13, 4}, {19, 12, 5}));

    // the six relative orders of (x, y, z)
    CHECK(node_type({1, 2, 3}) == 1);
    CHECK(node_type({3, 2, 1}) == 2);
    CHECK(node_type({3, 1, 2}) == 3);
    CHECK(node_type({2, 1, 3}) == 4);
    CHECK(node_type({2, 3, 1}) == 5);
    CHECK(node_type({1, 3, 2}) == 6);
}

TEST_CASE("digraph of the bistable switch") {
    SecondaryStructure s = parse_dot_bracket(fixtures::bistable_s);
    SecondaryStructure t = parse_dot_bracket(fixtures::bistable_t);
    ConflictDigraph g = build_conflict_digraph(s, t);

    REQUIRE(g.num_nodes() == 4);
    CHECK(g.nodes[0] == TripletNode{25, 6, 11});
    CHECK(g.nodes[1] == TripletNode{20, 11, 6});
    CHECK(g.nodes[2] == TripletNode{19, 12, 5});
    CHECK(g.nodes[3] == TripletNode{18, 13, 4});
    CHECK(std::all_of(g.roles.begin(), g.roles.end(), [](NodeRole r) {
        return r == NodeRole::Free;
    }));

    // (18,13,4) precedes everything, (19,12,5) precedes the two
    // low-pivot nodes; the overlap-2 pair (25,6,11)/(20,11,6) shares
    // its source pair and is excluded, not ordered.
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}});
    CHECK(g.exclusion_pairs ==
          std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(g.two_cycles.empty());
    CHECK(g.active_count() == 4);
    CHECK(cycle_vertex_sets(g).empty());

    SUBCASE("adjacency mirrors the edge list") {
        REQUIRE(g.out_adj.size() == 4);
        CHECK(g.out_adj[2] == std::vector<int>{0, 1});
        CHECK(g.out_adj[3] == std::vector<int>{0, 1, 2});
        CHECK(g.out_adj[0].empty());
        CHECK(g.out_adj[1].empty());
    }
}

TEST_CASE("digraph of the trypanosome switch") {
    SecondaryStructure s = parse_dot_bracket(fixtures::collosoma_s);
    SecondaryStructure t = parse_dot_bracket(fixtures::collosoma_t);
    ConflictDigraph g = build_conflict_digraph(s, t);

    CHECK(g.num_nodes() == 12);
    CHECK(g.num_edges() == 61);
    CHECK(g.two_cycles.empty());
    CHECK(cycle_vertex_sets(g).empty());

    // the five overlap-2 pairs, identified by their pivots
    std::set<std::pair<int, int>> pivots;
    for (const auto &[u, v] : g.exclusion_pairs) {
        int a = g.nodes[static_cast<std::size_t>(u)].y;
        int b = g.nodes[static_cast<std::size_t>(v)].y;
        pivots.emplace(std::min(a, b), std::max(a, b));
    }
    CHECK(pivots == std::set<std::pair<int, int>>{
                        {24, 30}, {25, 29}, {31, 45}, {34, 42}, {35, 41}});

    SUBCASE("drawing exclusions as mutual edges yields the larger census") {
        std::vector<std::pair<int, int>> union_edges = g.edges;
        for (const auto &[u, v] : g.exclusion_pairs) {
            union_edges.emplace_back(u, v);
            union_edges.emplace_back(v, u);
        }
        CHECK(union_edges.size() == 71);
        CycleSet cs =
            enumerate_simple_cycles(g.num_nodes(), union_edges, 100000);
        CHECK_FALSE(cs.truncated);
        CHECK(cs.count() == 5);
    }
}

TEST_CASE("digraph of the two-stem toy") {
    SecondaryStructure s = parse_dot_bracket(fixtures::toy20_s);
    SecondaryStructure t = parse_dot_bracket(fixtures::toy20_t);
    ConflictDigraph g = build_conflict_digraph(s, t);

    REQUIRE(g.num_nodes() == 6);
    CHECK(g.num_edges() == 10);
    CHECK(g.nodes[1] == TripletNode{19, 9, 1});
    CHECK(g.nodes[2] == TripletNode{18, 10, 20});
    CHECK(g.nodes[4] == TripletNode{9, 19, 11});
    CHECK(g.nodes[5] == TripletNode{8, 20, 10});

    CHECK(cycle_vertex_sets(g) ==
          std::set<std::set<int>>{{1, 2, 4, 5}, {1, 5}, {2, 4}});
}

TEST_CASE("digraph of the sliding pair-set example") {
    SecondaryStructure s(fixtures::toy31_n, fixtures::toy31_s_pairs);
    SecondaryStructure t(fixtures::toy31_n, fixtures::toy31_t_pairs);
    ConflictDigraph g = build_conflict_digraph(s, t);

    REQUIRE(g.num_nodes() == 4);
    CHECK(g.nodes[0] == TripletNode{10, 5, 1});
    CHECK(g.nodes[1] == TripletNode{5, 10, 15});
    CHECK(g.nodes[2] == TripletNode{20, 15, 10});
    CHECK(g.nodes[3] == TripletNode{15, 20, 25});

    CHECK(g.edges ==
          std::vector<std::pair<int, int>>{{1, 3}, {2, 0}});
    CHECK(g.exclusion_pairs == std::vector<std::pair<int, int>>{
                                   {0, 1}, {1, 2}, {2, 3}});

    SUBCASE("DOT rendering") {
        CHECK(to_dot(g) == "digraph conflicts {\n"
                           "  n0 [label=\"(10,5,1)\"];\n"
                           "  n1 [label=\"(5,10,15)\"];\n"
                           "  n2 [label=\"(20,15,10)\"];\n"
                           "  n3 [label=\"(15,20,25)\"];\n"
                           "  n1 -> n3;\n"
                           "  n2 -> n0;\n"
                           "}\n");
    }
}

TEST_CASE("closed 2-cycle detection returns the four typed vertices") {
    SUBCASE("split source pairs, nested target pairs") {
        SecondaryStructure s(fixtures::c2_n, fixtures::c2_split);
        SecondaryStructure t(fixtures::c2_n, fixtures::c2_outer);
        ConflictDigraph g = build_conflict_digraph(s, t);
        REQUIRE(g.two_cycles.size() == 1);
        const ClosedTwoCycle &tc = g.two_cycles[0];
        CHECK(tc.mirrored);
        CHECK(tc.a == std::array<Pos, 4>{1, 6, 11, 16});
        CHECK(tc.v1 == TripletNode{1, 16, 11});
        CHECK(node_type(tc.v1) == 6);
        CHECK(tc.v2 == TripletNode{16, 1, 6});
        CHECK(node_type(tc.v2) == 3);
        CHECK(tc.v3 == TripletNode{6, 11, 16});
        CHECK(node_type(tc.v3) == 1);
        CHECK(tc.v4 == TripletNode{11, 6, 1});
        CHECK(node_type(tc.v4) == 2);
        CHECK(tc.remove_pair == BasePair{1, 6});
        CHECK(tc.shiftable);
        CHECK(g.num_edges() == 0);

        // v1 stays as the forced shift; the other three are withheld
        for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            if (g.nodes[k] == tc.v1)
                CHECK(g.roles[k] == NodeRole::Forced);
            else
                CHECK(g.roles[k] == NodeRole::Dropped);
        }
    }
    SUBCASE("nested source pairs, split target pairs") {
        SecondaryStructure s(fixtures::c2_n, fixtures::c2_outer);
        SecondaryStructure t(fixtures::c2_n, fixtures::c2_split);
        ConflictDigraph g = build_conflict_digraph(s, t);
        REQUIRE(g.two_cycles.size() == 1);
        const ClosedTwoCycle &tc = g.two_cycles[0];
        CHECK_FALSE(tc.mirrored);
        CHECK(tc.a == std::array<Pos, 4>{1, 6, 11, 16});
        CHECK(tc.v1 == TripletNode{1, 6, 11});
        CHECK(node_type(tc.v1) == 1);
        CHECK(tc.v2 == TripletNode{11, 16, 1});
        CHECK(node_type(tc.v2) == 5);
        CHECK(tc.v3 == TripletNode{6, 1, 16});
        CHECK(node_type(tc.v3) == 4);
        CHECK(tc.v4 == TripletNode{16, 11, 6});
        CHECK(node_type(tc.v4) == 2);
        CHECK(tc.remove_pair == BasePair{1, 16});
        CHECK(tc.shiftable);
    }
}

TEST_CASE("locality and pivot filters") {
    SecondaryStructure s = parse_dot_bracket(fixtures::bistable_s);
    SecondaryStructure t = parse_dot_bracket(fixtures::bistable_t);

    SUBCASE("every bistable shift moves its endpoint fourteen positions") {
        DigraphOptions opts;
        opts.locality_d = 13;
        ConflictDigraph g = build_conflict_digraph(s, t, opts);
        CHECK(g.num_nodes() == 4);
        CHECK(g.active_count() == 0);
        CHECK(g.num_edges() == 0);
        CHECK(std::all_of(g.roles.begin(), g.roles.end(), [](NodeRole r) {
            return r == NodeRole::Dropped;
        }));

        opts.locality_d = 14;
        ConflictDigraph g2 = build_conflict_digraph(s, t, opts);
        CHECK(g2.active_count() == 4);
        CHECK(g2.num_edges() == 5);
    }
    SUBCASE("pivot universe restriction") {
        DigraphOptions opts;
        opts.pivot_universe = {13};
        ConflictDigraph g = build_conflict_digraph(s, t, opts);
        REQUIRE(g.num_nodes() == 1);
        CHECK(g.nodes[0] == TripletNode{18, 13, 4});
    }
}

TEST_CASE("coarse class-level digraph") {
    SUBCASE("trypanosome classes") {
        SecondaryStructure s = parse_dot_bracket(fixtures::collosoma_s);
        SecondaryStructure t = parse_dot_bracket(fixtures::collosoma_t);
        auto classes = equivalence_classes(s, t, class_universe(s, t));
        CoarseDigraph cg = build_coarse_digraph(s, t, classes);
        CHECK(cg.num_classes == 7);
        CHECK(cg.arcs.size() == 21);

        std::vector<std::pair<int, int>> arcs;
        for (const auto &a : cg.arcs) {
            CHECK_FALSE(a.pairs.empty());
            CHECK(a.from != a.to); // no self-loops
            arcs.emplace_back(a.from, a.to);
        }
        CycleSet cs = enumerate_simple_cycles(cg.num_classes, arcs, 100000);
        CHECK(cs.count() == 0);
    }
    SUBCASE("one sliding class has no arcs") {
        SecondaryStructure s(fixtures::toy31_n, fixtures::toy31_s_pairs);
        SecondaryStructure t(fixtures::toy31_n, fixtures::toy31_t_pairs);
        auto classes = equivalence_classes(s, t, class_universe(s, t));
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].members ==
              std::vector<Pos>{1, 5, 10, 15, 20, 25});
        CHECK(classes[0].type == PathType::SOnly);
        CoarseDigraph cg = build_coarse_digraph(s, t, classes);
        CHECK(cg.num_classes == 1);
        CHECK(cg.arcs.empty());
    }
}
