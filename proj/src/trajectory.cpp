#include "ms2/trajectory.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ms2/optimize.hpp"
#include "ms2/pkms2.hpp"

namespace ms2 {

std::string to_string(const Move &m) {
    switch (m.kind) {
    case Move::Kind::Remove:
        return "remove " + to_string(m.from);
    case Move::Kind::Add:
        return "add " + to_string(m.to);
    case Move::Kind::Shift:
        return to_string(m.from) + " -> " + to_string(m.to);
    }
    return {};
}

void Trajectory::recount() {
    removals = additions = shifts = 0;
    for (const Move &m : moves) {
        switch (m.kind) {
        case Move::Kind::Remove:
            ++removals;
            break;
        case Move::Kind::Add:
            ++additions;
            break;
        case Move::Kind::Shift:
            ++shifts;
            break;
        }
    }
}

namespace {

bool refuse(std::string *why, const std::string &msg) {
    if (why)
        *why = msg;
    return false;
}

/// Policy checks for a pair about to enter the structure.
bool check_new_pair(const SecondaryStructure &cur, const BasePair &p,
                    const VerifyOptions &opts, std::string *why,
                    const std::string &ctx) {
    if (p.i < 1 || p.j > cur.length() || p.i >= p.j)
        return refuse(why, ctx + ": pair " + to_string(p) + " is out of range");
    if (p.j - p.i <= opts.min_hairpin)
        return refuse(why, ctx + ": pair " + to_string(p) +
                               " violates the minimum hairpin span");
    if (cur.paired(p.i) || cur.paired(p.j))
        return refuse(why, ctx + ": an endpoint of " + to_string(p) +
                               " is already paired");
    if (!opts.allow_crossing)
        for (const BasePair &q : cur.pairs())
            if (crosses(p, q))
                return refuse(why, ctx + ": pair " + to_string(p) +
                                       " crosses " + to_string(q));
    return true;
}

} // namespace

bool verify_trajectory(const SecondaryStructure &s, const SecondaryStructure &t,
                       const Trajectory &traj, const VerifyOptions &opts,
                       std::string *why) {
    if (s.length() != t.length())
        return refuse(why, "structures have different lengths");
    SecondaryStructure cur = s;
    int removals = 0, additions = 0, shifts = 0;
    for (size_t k = 0; k < traj.moves.size(); ++k) {
        const Move &m = traj.moves[k];
        const std::string ctx =
            "move " + std::to_string(k + 1) + " (" + to_string(m) + ")";
        switch (m.kind) {
        case Move::Kind::Remove:
            if (!cur.contains(m.from))
                return refuse(why, ctx + ": pair not present");
            cur.remove(m.from);
            ++removals;
            break;
        case Move::Kind::Add:
            if (!check_new_pair(cur, m.to, opts, why, ctx))
                return false;
            cur.add(m.to);
            ++additions;
            break;
        case Move::Kind::Shift:
            if (!cur.contains(m.from))
                return refuse(why, ctx + ": pair not present");
            if (!touches(m.from, m.to))
                return refuse(why, ctx +
                                       ": the pairs do not share exactly one "
                                       "endpoint");
            cur.remove(m.from);
            if (!check_new_pair(cur, m.to, opts, why, ctx))
                return false;
            cur.add(m.to);
            ++shifts;
            break;
        }
    }
    if (removals != traj.removals || additions != traj.additions ||
        shifts != traj.shifts)
        return refuse(why, "recorded removal/addition/shift counts do not "
                           "match the move list");
    if (!(cur == t))
        return refuse(why, "trajectory does not end at the target structure");
    return true;
}

std::string format_trajectory_text(const SecondaryStructure &s,
                                   const Trajectory &traj,
                                   const std::string &distance_label) {
    std::ostringstream out;
    SecondaryStructure cur = s;
    out << std::setw(2) << 0 << ". " << to_dot_bracket(cur) << "\tinitial\n";
    int step = 0, removals = 0, additions = 0, shifts = 0;
    for (const Move &m : traj.moves) {
        switch (m.kind) {
        case Move::Kind::Remove:
            cur.remove(m.from);
            ++removals;
            break;
        case Move::Kind::Add:
            cur.add(m.to);
            ++additions;
            break;
        case Move::Kind::Shift:
            cur.remove(m.from);
            cur.add(m.to);
            ++shifts;
            break;
        }
        out << std::setw(2) << ++step << ". " << to_dot_bracket(cur) << "\t"
            << to_string(m) << "\n";
    }
    out << "Number of base pair removals: " << removals << "\n";
    out << "Number of base pair additions: " << additions << "\n";
    out << "Number of base pair shifts: " << shifts << "\n";
    out << distance_label << ": " << traj.length() << "\n";
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 start)
        .count();
}

void emit_remove(Trajectory &traj, SecondaryStructure &cur, const BasePair &p) {
    traj.moves.push_back(Move::remove(p));
    cur.remove(p);
}

void emit_add(Trajectory &traj, SecondaryStructure &cur, const BasePair &p) {
    traj.moves.push_back(Move::add(p));
    cur.add(p);
}

void emit_shift(Trajectory &traj, SecondaryStructure &cur,
                const TripletNode &v) {
    traj.moves.push_back(Move::shift(v.s_pair(), v.t_pair()));
    cur.remove(v.s_pair());
    cur.add(v.t_pair());
}

/// Append the still-missing target pairs: the forced additions first,
/// then the rest, both in ascending order.
void emit_final_additions(Trajectory &traj, SecondaryStructure &cur,
                          const SecondaryStructure &t,
                          const std::vector<BasePair> &forced_first) {
    for (const BasePair &p : forced_first)
        emit_add(traj, cur, p);
    for (const BasePair &p : pairs_minus(t, cur))
        emit_add(traj, cur, p);
}

struct ScopeConfig {
    std::vector<Pos> pivots;        ///< empty means every pivot
    bool restrict_removals = false; ///< only sweep source pairs of the scope
    bool blocking_guard = false;    ///< remove a pair blocking a shift target
    int locality_d = -1;
    bool record_graph_stats = false; ///< fill stats.nodes/edges/cycles
};

/// One round of the shift machinery: build the conflict digraph for
/// the scope, pick a maximum admissible shift set (cycle covers plus
/// overlap exclusions), then emit the scope's removals followed by
/// its shifts in topological order.
void run_shift_scope(SecondaryStructure &cur, const SecondaryStructure &t,
                     const MethodOptions &opts, const ScopeConfig &cfg,
                     Trajectory &traj, MethodStats &stats) {
    DigraphOptions dopts;
    dopts.locality_d = cfg.locality_d;
    dopts.pivot_universe = cfg.pivots;
    ConflictDigraph g = build_conflict_digraph(cur, t, dopts);
    if (cfg.record_graph_stats) {
        stats.nodes = g.num_nodes();
        stats.edges = g.num_edges();
    }

    Clock::time_point t0 = Clock::now();
    CycleSet cycles =
        enumerate_simple_cycles(g.num_nodes(), g.edges, opts.max_cycles);
    stats.micros_cycles += micros_since(t0);
    if (cfg.record_graph_stats)
        stats.cycles = cycles.count();
    if (cycles.truncated) {
        stats.truncated = true;
        throw CycleLimitError("conflict digraph holds more than " +
                              std::to_string(opts.max_cycles) +
                              " simple cycles");
    }

    // IP variables: the free nodes with the latest pivot first, so the
    // solver's lexicographic tie-break among optimal shift sets
    // prefers the rightmost shifts.
    std::vector<int> var_node;
    std::vector<int> var_of(static_cast<size_t>(g.num_nodes()), -1);
    for (int v = g.num_nodes() - 1; v >= 0; --v)
        if (g.roles[static_cast<size_t>(v)] == NodeRole::Free) {
            var_of[static_cast<size_t>(v)] = static_cast<int>(var_node.size());
            var_node.push_back(v);
        }

    BinaryProgram prog(static_cast<int>(var_node.size()));
    std::set<std::vector<int>> seen_covers;
    for (const std::vector<int> &cyc : cycles.cycles) {
        std::vector<int> free_vars;
        for (int v : cyc) {
            NodeRole role = g.roles[static_cast<size_t>(v)];
            if (role == NodeRole::Free)
                free_vars.push_back(var_of[static_cast<size_t>(v)]);
            else if (role == NodeRole::Dropped)
                throw std::logic_error("conflict cycle through a dropped shift");
        }
        if (free_vars.empty())
            throw std::logic_error("conflict cycle made of forced shifts only");
        std::sort(free_vars.begin(), free_vars.end());
        if (seen_covers.insert(free_vars).second)
            prog.add_cycle_cover(free_vars);
    }
    for (const auto &pair : g.exclusion_pairs) {
        if (g.roles[static_cast<size_t>(pair.first)] != NodeRole::Free ||
            g.roles[static_cast<size_t>(pair.second)] != NodeRole::Free)
            throw std::logic_error("overlap exclusion against a forced shift");
        prog.add_pair_exclusion(var_of[static_cast<size_t>(pair.first)],
                                var_of[static_cast<size_t>(pair.second)]);
    }

    t0 = Clock::now();
    SolveResult sol = solve_max_binary(prog);
    stats.micros_ip += micros_since(t0);

    std::vector<char> selected(static_cast<size_t>(g.num_nodes()), 0);
    for (size_t i = 0; i < var_node.size(); ++i)
        if (sol.assignment[i])
            selected[static_cast<size_t>(var_node[i])] = 1;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (g.roles[static_cast<size_t>(v)] == NodeRole::Forced)
            selected[static_cast<size_t>(v)] = 1;

    // Scope removals: source pairs not covered by a selected shift.
    std::set<BasePair> shifted;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (selected[static_cast<size_t>(v)])
            shifted.insert(g.nodes[static_cast<size_t>(v)].s_pair());
    std::set<Pos> scope(cfg.pivots.begin(), cfg.pivots.end());
    for (const BasePair &p : pairs_minus(cur, t)) {
        if (shifted.count(p))
            continue;
        if (cfg.restrict_removals && scope.count(p.i) == 0)
            continue;
        emit_remove(traj, cur, p);
    }

    // Shifts in topological order of the selected subgraph.
    t0 = Clock::now();
    std::vector<std::pair<int, int>> sel_edges;
    for (const auto &[u, v] : g.edges)
        if (selected[static_cast<size_t>(u)] && selected[static_cast<size_t>(v)])
            sel_edges.emplace_back(u, v);
    std::vector<int> order = topological_sort(g.num_nodes(), sel_edges);
    stats.micros_topo += micros_since(t0);
    for (int v : order) {
        if (!selected[static_cast<size_t>(v)])
            continue;
        const TripletNode &nd = g.nodes[static_cast<size_t>(v)];
        if (cfg.blocking_guard)
            if (Pos w = cur.partner(nd.x); w != 0 && w != nd.y)
                emit_remove(traj, cur, ordered_pair(nd.x, w));
        emit_shift(traj, cur, nd);
    }
}

/// Whether shifting nd right now keeps the structure a valid
/// crossing-free intermediate: the moving endpoint's destination is
/// free and the target pair crosses nothing but the source pair.
bool shift_admissible(const SecondaryStructure &cur, const TripletNode &nd) {
    if (Pos w = cur.partner(nd.x); w != 0 && w != nd.y)
        return false;
    const BasePair target = nd.t_pair(), source = nd.s_pair();
    for (const BasePair &q : cur.pairs())
        if (!(q == source) && crosses(q, target))
            return false;
    return true;
}

} // namespace

MethodResult ms2_exact(const SecondaryStructure &s, const SecondaryStructure &t,
                       const MethodOptions &opts) {
    MethodResult res;
    SecondaryStructure cur = s;
    PositionPartition part = partition_positions(cur, t);
    for (const BasePair &p : part.BP1)
        emit_remove(res.trajectory, cur, p);
    ScopeConfig cfg;
    cfg.locality_d = opts.locality_d;
    cfg.record_graph_stats = true;
    // The digraph ordering makes the guard redundant for
    // crossing-free inputs; it matters only when the inputs themselves
    // hold crossing pairs.
    cfg.blocking_guard = s.has_crossing() || t.has_crossing();
    run_shift_scope(cur, t, opts, cfg, res.trajectory, res.stats);
    emit_final_additions(res.trajectory, cur, t, part.BP2);
    res.trajectory.recount();
    if (!(cur == t))
        throw std::logic_error("refolding did not reach the target structure");
    return res;
}

MethodResult ms2_near_optimal(const SecondaryStructure &s,
                              const SecondaryStructure &t,
                              const MethodOptions &opts) {
    MethodResult res;
    SecondaryStructure cur = s;
    PositionPartition part = partition_positions(cur, t);
    for (const BasePair &p : part.BP1)
        emit_remove(res.trajectory, cur, p);

    std::vector<Pos> universe = part.A;
    universe.insert(universe.end(), part.B.begin(), part.B.end());
    std::sort(universe.begin(), universe.end());
    std::vector<EquivalenceClass> classes = equivalence_classes(s, t, universe);

    CoarseDigraph cg = build_coarse_digraph(cur, t, classes);
    res.stats.nodes = cg.num_classes;
    res.stats.edges = static_cast<int>(cg.arcs.size());

    std::vector<std::pair<int, int>> arc_edges;
    std::map<std::pair<int, int>, int> arc_index;
    for (size_t i = 0; i < cg.arcs.size(); ++i) {
        arc_edges.emplace_back(cg.arcs[i].from, cg.arcs[i].to);
        arc_index[{cg.arcs[i].from, cg.arcs[i].to}] = static_cast<int>(i);
    }
    Clock::time_point t0 = Clock::now();
    CycleSet coarse =
        enumerate_simple_cycles(cg.num_classes, arc_edges, opts.max_cycles);
    res.stats.micros_cycles += micros_since(t0);
    res.stats.cycles = coarse.count();
    if (coarse.truncated) {
        res.stats.truncated = true;
        throw CycleLimitError("class digraph holds more than " +
                              std::to_string(opts.max_cycles) +
                              " simple cycles");
    }

    // Keep as much source-pair weight as possible while cutting every
    // class-level cycle; the pairs of the cut arcs are removed up
    // front.
    BinaryProgram prog(static_cast<int>(cg.arcs.size()));
    for (size_t i = 0; i < cg.arcs.size(); ++i)
        prog.weights[i] = static_cast<std::int64_t>(cg.arcs[i].pairs.size());
    for (const std::vector<int> &cyc : coarse.cycles) {
        std::vector<int> vars;
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            vars.push_back(arc_index.at({from, to}));
        }
        std::sort(vars.begin(), vars.end());
        prog.add_cycle_cover(vars);
    }
    t0 = Clock::now();
    SolveResult sol = solve_max_binary(prog);
    res.stats.micros_ip += micros_since(t0);

    std::set<BasePair> cut;
    std::vector<std::pair<int, int>> kept;
    for (size_t i = 0; i < cg.arcs.size(); ++i) {
        if (sol.assignment[i])
            kept.emplace_back(cg.arcs[i].from, cg.arcs[i].to);
        else
            cut.insert(cg.arcs[i].pairs.begin(), cg.arcs[i].pairs.end());
    }
    for (const BasePair &p : cut)
        emit_remove(res.trajectory, cur, p);

    t0 = Clock::now();
    std::vector<int> order = topological_sort(cg.num_classes, kept);
    res.stats.micros_topo += micros_since(t0);
    for (int ci : order) {
        ScopeConfig cfg;
        cfg.pivots = classes[static_cast<size_t>(ci)].members;
        cfg.restrict_removals = true;
        cfg.blocking_guard = true;
        run_shift_scope(cur, t, opts, cfg, res.trajectory, res.stats);
    }
    emit_final_additions(res.trajectory, cur, t, part.BP2);
    res.trajectory.recount();
    if (!(cur == t))
        throw std::logic_error("refolding did not reach the target structure");
    return res;
}

MethodResult ms2_greedy(const SecondaryStructure &s, const SecondaryStructure &t,
                        const MethodOptions &opts) {
    MethodResult res;
    SecondaryStructure cur = s;
    PositionPartition part = partition_positions(cur, t);
    for (const BasePair &p : part.BP1)
        emit_remove(res.trajectory, cur, p);

    ConflictDigraph g = build_conflict_digraph(cur, t, DigraphOptions{});
    res.stats.nodes = g.num_nodes();
    res.stats.edges = g.num_edges();
    Clock::time_point t0 = Clock::now();
    CycleSet cycles =
        enumerate_simple_cycles(g.num_nodes(), g.edges, opts.max_cycles);
    res.stats.micros_cycles += micros_since(t0);
    res.stats.cycles = cycles.count();
    if (cycles.truncated) {
        res.stats.truncated = true;
        throw CycleLimitError("conflict digraph holds more than " +
                              std::to_string(opts.max_cycles) +
                              " simple cycles");
    }

    // Destroy every cycle by repeatedly discarding the shift that lies
    // on the most remaining cycles (ties: smallest node).
    std::vector<char> dead(static_cast<size_t>(g.num_nodes()), 0);
    std::vector<const std::vector<int> *> live;
    live.reserve(cycles.cycles.size());
    for (const std::vector<int> &c : cycles.cycles)
        live.push_back(&c);
    while (!live.empty()) {
        std::vector<int> hits(static_cast<size_t>(g.num_nodes()), 0);
        for (const std::vector<int> *c : live)
            for (int v : *c)
                ++hits[static_cast<size_t>(v)];
        int victim = static_cast<int>(
            std::max_element(hits.begin(), hits.end()) - hits.begin());
        dead[static_cast<size_t>(victim)] = 1;
        std::vector<const std::vector<int> *> next;
        next.reserve(live.size());
        for (const std::vector<int> *c : live)
            if (std::find(c->begin(), c->end(), victim) == c->end())
                next.push_back(c);
        live.swap(next);
    }

    std::vector<char> planned(static_cast<size_t>(g.num_nodes()), 0);
    std::set<BasePair> planned_sources;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (g.roles[static_cast<size_t>(v)] != NodeRole::Dropped &&
            !dead[static_cast<size_t>(v)]) {
            planned[static_cast<size_t>(v)] = 1;
            planned_sources.insert(g.nodes[static_cast<size_t>(v)].s_pair());
        }
    for (const BasePair &p : pairs_minus(cur, t))
        if (planned_sources.count(p) == 0)
            emit_remove(res.trajectory, cur, p);

    t0 = Clock::now();
    std::vector<std::pair<int, int>> sel_edges;
    for (const auto &[u, v] : g.edges)
        if (planned[static_cast<size_t>(u)] && planned[static_cast<size_t>(v)])
            sel_edges.emplace_back(u, v);
    std::vector<int> order = topological_sort(g.num_nodes(), sel_edges);
    res.stats.micros_topo += micros_since(t0);
    for (int v : order) {
        if (!planned[static_cast<size_t>(v)])
            continue;
        const TripletNode &nd = g.nodes[static_cast<size_t>(v)];
        if (!cur.contains(nd.s_pair()))
            continue; // the pair was already shifted through another node
        if (!shift_admissible(cur, nd))
            continue; // withheld: removed and re-added instead
        emit_shift(res.trajectory, cur, nd);
    }
    for (const BasePair &p : pairs_minus(cur, t))
        emit_remove(res.trajectory, cur, p);
    emit_final_additions(res.trajectory, cur, t, part.BP2);
    res.trajectory.recount();
    if (!(cur == t))
        throw std::logic_error("refolding did not reach the target structure");
    return res;
}

MethodResult ms2_branch_bound(const SecondaryStructure &s,
                              const SecondaryStructure &t,
                              const MethodOptions &opts) {
    MethodResult res;
    PositionPartition part = partition_positions(s, t);
    const std::set<BasePair> bp1(part.BP1.begin(), part.BP1.end());
    const std::set<BasePair> bp2(part.BP2.begin(), part.BP2.end());
    std::vector<BasePair> s_core, t_core;
    for (const BasePair &p : pairs_minus(s, t))
        if (bp1.count(p) == 0)
            s_core.push_back(p);
    for (const BasePair &p : pairs_minus(t, s))
        if (bp2.count(p) == 0)
            t_core.push_back(p);
    const std::set<BasePair> target(t_core.begin(), t_core.end());

    const int n = s.length();
    const StructureOptions loose{0, true};
    const SecondaryStructure target_struct(n, t_core, loose);
    // Crossing-relaxed distance to the target core: admissible and
    // consistent, so the first goal taken from the queue is optimal.
    auto lower_bound = [&](const std::vector<BasePair> &state) {
        return pk_ms2_distance(SecondaryStructure(n, state, loose),
                               target_struct);
    };
    // Intermediates stay crossing-free exactly when the endpoints are.
    const bool forbid_crossing = !s.has_crossing() && !t.has_crossing();

    struct SearchNode {
        std::vector<BasePair> state;
        int parent = -1;
        Move move{};
        std::int64_t g = 0;
    };
    std::vector<SearchNode> nodes;
    std::map<std::vector<BasePair>, std::int64_t> best_g;
    using Entry = std::tuple<std::int64_t, std::int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    // Removing every source pair and adding every target pair always
    // works, so nothing longer can be optimal.
    const std::int64_t incumbent =
        static_cast<std::int64_t>(s_core.size() + t_core.size());
    std::int64_t ticket = 0;

    std::sort(s_core.begin(), s_core.end());
    nodes.push_back({s_core, -1, Move{}, 0});
    best_g[s_core] = 0;
    open.emplace(lower_bound(s_core), ticket++, 0);

    std::int64_t expansions = 0;
    int goal = -1;
    while (!open.empty()) {
        const auto [f, tie, id] = open.top();
        open.pop();
        const std::vector<BasePair> state = nodes[static_cast<size_t>(id)].state;
        const std::int64_t gval = nodes[static_cast<size_t>(id)].g;
        if (best_g.at(state) < gval)
            continue; // a better route to this state was found meanwhile
        if (++expansions > opts.node_budget)
            throw SearchBudgetError("refolding search exceeded its node budget");

        bool done = true;
        for (const BasePair &p : state)
            if (target.count(p) == 0) {
                done = false;
                break;
            }
        if (done) {
            goal = id;
            break;
        }

        std::vector<Pos> pr(static_cast<size_t>(n) + 1, 0);
        for (const BasePair &p : state) {
            pr[static_cast<size_t>(p.i)] = p.j;
            pr[static_cast<size_t>(p.j)] = p.i;
        }

        auto push_child = [&](std::vector<BasePair> child, const Move &mv) {
            std::sort(child.begin(), child.end());
            const std::int64_t g2 = gval + 1;
            auto it = best_g.find(child);
            if (it != best_g.end() && it->second <= g2)
                return;
            const std::int64_t f2 = g2 + lower_bound(child);
            if (f2 > incumbent)
                return;
            if (it == best_g.end())
                best_g.emplace(child, g2);
            else
                it->second = g2;
            nodes.push_back({std::move(child), id, mv, g2});
            open.emplace(f2, ticket++, static_cast<int>(nodes.size()) - 1);
        };

        for (size_t pi = 0; pi < state.size(); ++pi) {
            const BasePair p = state[pi];
            if (target.count(p) != 0)
                continue; // placed target pairs never move again
            std::vector<BasePair> without;
            without.reserve(state.size() - 1);
            for (size_t k = 0; k < state.size(); ++k)
                if (k != pi)
                    without.push_back(state[k]);
            push_child(without, Move::remove(p));

            auto blocked = [&](Pos e) {
                return pr[static_cast<size_t>(e)] != 0 && e != p.i && e != p.j;
            };
            for (const BasePair &q : t_core) {
                if (!touches(p, q))
                    continue;
                if (blocked(q.i) || blocked(q.j))
                    continue;
                if (forbid_crossing) {
                    bool crossing = false;
                    for (const BasePair &r : without)
                        if (crosses(r, q)) {
                            crossing = true;
                            break;
                        }
                    if (crossing)
                        continue;
                }
                std::vector<BasePair> child = without;
                child.push_back(q);
                push_child(std::move(child), Move::shift(p, q));
            }
        }
    }
    if (goal < 0)
        throw std::logic_error("refolding search exhausted without reaching "
                               "the target");

    std::vector<Move> path;
    for (int id = goal; nodes[static_cast<size_t>(id)].parent >= 0;
         id = nodes[static_cast<size_t>(id)].parent)
        path.push_back(nodes[static_cast<size_t>(id)].move);
    std::reverse(path.begin(), path.end());

    SecondaryStructure cur = s;
    for (const BasePair &p : part.BP1)
        emit_remove(res.trajectory, cur, p);
    for (const Move &m : path) {
        res.trajectory.moves.push_back(m);
        cur.remove(m.from);
        if (m.kind == Move::Kind::Shift)
            cur.add(m.to);
    }
    for (const BasePair &p : t_core)
        if (!cur.contains(p))
            emit_add(res.trajectory, cur, p);
    for (const BasePair &p : part.BP2)
        emit_add(res.trajectory, cur, p);
    res.trajectory.recount();
    if (!(cur == t))
        throw std::logic_error("refolding did not reach the target structure");
    return res;
}

} // namespace ms2
