#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ms2/optimize.hpp"
#include "oracles.hpp"

using namespace ms2;

namespace {

using Edges = std::vector<std::pair<int, int>>;

std::vector<std::vector<int>> sorted_cycles(CycleSet cs) {
    std::sort(cs.cycles.begin(), cs.cycles.end());
    return cs.cycles;
}

} // namespace

TEST_CASE("simple cycle enumeration on fixed digraphs") {
    SUBCASE("triangle") {
        Edges e{{0, 1}, {1, 2}, {2, 0}};
        CycleSet cs = enumerate_simple_cycles(3, e, 1000);
        CHECK_FALSE(cs.truncated);
        REQUIRE(cs.count() == 1);
        CHECK(cs.cycles[0] == std::vector<int>{0, 1, 2});
    }
    SUBCASE("two triangles sharing a vertex") {
        Edges e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
        CycleSet cs = enumerate_simple_cycles(5, e, 1000);
        CHECK_FALSE(cs.truncated);
        CHECK(sorted_cycles(cs) ==
              std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    }
    SUBCASE("complete digraph on four vertices holds twenty cycles") {
        Edges e;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v)
                    e.emplace_back(u, v);
        CycleSet cs = enumerate_simple_cycles(4, e, 1000);
        CHECK_FALSE(cs.truncated);
        CHECK(cs.count() == 20);
        CHECK(sorted_cycles(cs) ==
              oracle::naive_simple_cycles(4, e));
    }
    SUBCASE("enumeration stops at the cap and reports truncation") {
        Edges e;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v)
                    e.emplace_back(u, v);
        CycleSet cs = enumerate_simple_cycles(4, e, 5);
        CHECK(cs.truncated);
        CHECK(cs.count() <= 6);
    }
    SUBCASE("acyclic and empty graphs") {
        CHECK(enumerate_simple_cycles(0, {}, 10).count() == 0);
        CHECK(enumerate_simple_cycles(4, {{0, 1}, {1, 2}, {0, 3}}, 10)
                  .count() == 0);
    }
}

TEST_CASE("simple cycle enumeration matches the rooted-search reference") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 300; ++it) {
        int nv = 2 + static_cast<int>(rng() % 6);
        Edges e;
        for (int u = 0; u < nv; ++u)
            for (int v = 0; v < nv; ++v)
                if (u != v && rng() % 10 < 3)
                    e.emplace_back(u, v);
        CAPTURE(nv);
        CAPTURE(e.size());
        CHECK(sorted_cycles(enumerate_simple_cycles(nv, e, 100000)) ==
              oracle::naive_simple_cycles(nv, e));
    }
}

TEST_CASE("topological order is deterministic reverse postorder") {
    SUBCASE("frozen example") {
        // roots 0 and 1 in ascending order: dfs(0) visits 2 then 3,
        // dfs(1) adds nothing new; postorder 3,2,0,1 reversed.
        Edges e{{0, 2}, {1, 2}, {2, 3}};
        CHECK(topological_sort(4, e) == std::vector<int>{1, 0, 2, 3});
    }
    SUBCASE("cycle is rejected") {
        CHECK_THROWS_AS(topological_sort(2, {{0, 1}, {1, 0}}),
                        std::invalid_argument);
    }
    SUBCASE("every edge points forward in the order") {
        std::mt19937_64 rng(99);
        for (int it = 0; it < 100; ++it) {
            int nv = 1 + static_cast<int>(rng() % 8);
            // random DAG: edges only from smaller to larger label
            Edges e;
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v)
                    if (rng() % 10 < 4)
                        e.emplace_back(u, v);
            std::vector<int> order = topological_sort(nv, e);
            REQUIRE(static_cast<int>(order.size()) == nv);
            std::vector<int> rank(static_cast<std::size_t>(nv));
            for (int k = 0; k < nv; ++k)
                rank[static_cast<std::size_t>(order[
                    static_cast<std::size_t>(k)])] = k;
            for (const auto &[u, v] : e) {
                CHECK(rank[static_cast<std::size_t>(u)] <
                      rank[static_cast<std::size_t>(v)]);
            }
        }
    }
}

TEST_CASE("binary program construction helpers") {
    BinaryProgram prog(5);
    CHECK(prog.num_vars == 5);
    CHECK(prog.weights == std::vector<std::int64_t>(5, 1));

    prog.add_cycle_cover({0, 2, 4});
    prog.add_pair_exclusion(1, 3);
    REQUIRE(prog.constraints.size() == 2);
    CHECK(prog.constraints[0].vars == std::vector<int>{0, 2, 4});
    CHECK(prog.constraints[0].bound == 2);
    CHECK(prog.constraints[1].vars == std::vector<int>{1, 3});
    CHECK(prog.constraints[1].bound == 1);
}

TEST_CASE("exact solver on fixed programs") {
    SUBCASE("empty program selects everything") {
        BinaryProgram prog(4);
        SolveResult r = solve_max_binary(prog);
        CHECK(r.objective == 4);
        CHECK(r.assignment == std::vector<char>{1, 1, 1, 1});
    }
    SUBCASE("chain of exclusions") {
        // exclusions {0,1},{1,2},{2,3}: optimum 2, lexicographically
        // greatest optimum is {1,0,1,0}
        BinaryProgram prog(4);
        prog.add_pair_exclusion(0, 1);
        prog.add_pair_exclusion(1, 2);
        prog.add_pair_exclusion(2, 3);
        SolveResult r = solve_max_binary(prog);
        CHECK(r.objective == 2);
        CHECK(r.assignment == std::vector<char>{1, 0, 1, 0});
    }
    SUBCASE("weights steer the choice") {
        BinaryProgram prog(3);
        prog.weights = {1, 5, 1};
        prog.add_pair_exclusion(0, 1);
        prog.add_pair_exclusion(1, 2);
        SolveResult r = solve_max_binary(prog);
        CHECK(r.objective == 5);
        CHECK(r.assignment == std::vector<char>{0, 1, 0});
    }
    SUBCASE("cycle cover forbids an all-ones block") {
        BinaryProgram prog(3);
        prog.add_cycle_cover({0, 1, 2});
        SolveResult r = solve_max_binary(prog);
        CHECK(r.objective == 2);
        CHECK(r.assignment == std::vector<char>{1, 1, 0});
    }
    SUBCASE("zero variables") {
        BinaryProgram prog(0);
        SolveResult r = solve_max_binary(prog);
        CHECK(r.objective == 0);
        CHECK(r.assignment.empty());
    }
}

TEST_CASE("exact solver matches exhaustive search with ties included") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + static_cast<int>(rng() % 13);
        BinaryProgram prog(n);
        bool uniform = (rng() % 2) == 0;
        if (!uniform) {
            for (auto &w : prog.weights)
                w = 1 + static_cast<std::int64_t>(rng() % 5);
        }
        int ncons = static_cast<int>(rng() % 7);
        for (int c = 0; c < ncons; ++c) {
            if (n >= 2 && rng() % 2 == 0) {
                int u = static_cast<int>(rng() % n);
                int v = static_cast<int>(rng() % n);
                if (u == v)
                    continue;
                prog.add_pair_exclusion(u, v);
            } else {
                std::vector<int> vars;
                for (int v = 0; v < n; ++v)
                    if (rng() % 3 == 0)
                        vars.push_back(v);
                if (vars.size() < 2)
                    continue;
                prog.add_cycle_cover(vars);
            }
        }
        SolveResult got = solve_max_binary(prog);
        SolveResult want = oracle::brute_force_max_binary(prog);
        CAPTURE(n);
        CAPTURE(ncons);
        CHECK(got.objective == want.objective);
        CHECK(got.assignment == want.assignment);
    }
}
