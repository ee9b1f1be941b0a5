#include "ms2/optimize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ms2 {

namespace {

std::vector<std::vector<int>>
adjacency(int num_vertices, const std::vector<std::pair<int, int>> &edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(num_vertices));
    for (const auto &[u, v] : edges) {
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
        adj[static_cast<size_t>(u)].push_back(v);
    }
    for (auto &list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

/// Tarjan's strongly-connected components, iterative, deterministic.
std::vector<int> scc_ids(const std::vector<std::vector<int>> &adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> ids(static_cast<size_t>(n), -1),
        low(static_cast<size_t>(n), 0), num(static_cast<size_t>(n), -1);
    std::vector<int> stack, call_v, call_i;
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    int counter = 0, comp = 0;
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<size_t>(root)] != -1)
            continue;
        call_v.assign(1, root);
        call_i.assign(1, 0);
        num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!call_v.empty()) {
            int v = call_v.back();
            int &i = call_i.back();
            if (i < static_cast<int>(adj[static_cast<size_t>(v)].size())) {
                int w = adj[static_cast<size_t>(v)][static_cast<size_t>(i++)];
                if (num[static_cast<size_t>(w)] == -1) {
                    num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] =
                        counter++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = true;
                    call_v.push_back(w);
                    call_i.push_back(0);
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)],
                                 num[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(v)] == num[static_cast<size_t>(v)]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = false;
                        ids[static_cast<size_t>(w)] = comp;
                    } while (w != v);
                    ++comp;
                }
                call_v.pop_back();
                call_i.pop_back();
                if (!call_v.empty()) {
                    int parent = call_v.back();
                    low[static_cast<size_t>(parent)] =
                        std::min(low[static_cast<size_t>(parent)],
                                 low[static_cast<size_t>(v)]);
                }
            }
        }
    }
    return ids;
}

/// Johnson's circuit-finding state for one start vertex.
struct JohnsonState {
    const std::vector<std::vector<int>> &adj; // restricted adjacency
    int start;
    std::int64_t cap;
    CycleSet &out;
    std::vector<bool> blocked;
    std::vector<std::set<int>> block_map;
    std::vector<int> path;

    JohnsonState(const std::vector<std::vector<int>> &adj_, int start_,
                 std::int64_t cap_, CycleSet &out_)
        : adj(adj_), start(start_), cap(cap_), out(out_),
          blocked(adj_.size(), false), block_map(adj_.size()) {}

    void unblock(int v) {
        blocked[static_cast<size_t>(v)] = false;
        auto list = std::move(block_map[static_cast<size_t>(v)]);
        block_map[static_cast<size_t>(v)].clear();
        for (int w : list)
            if (blocked[static_cast<size_t>(w)])
                unblock(w);
    }

    /// Returns whether a cycle through v was found; sets out.truncated
    /// and unwinds when the cap is exceeded.
    bool circuit(int v) {
        bool found = false;
        path.push_back(v);
        blocked[static_cast<size_t>(v)] = true;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (out.truncated)
                break;
            if (w == start) {
                if (out.count() >= cap) {
                    out.truncated = true;
                    break;
                }
                out.cycles.push_back(path);
                found = true;
            } else if (!blocked[static_cast<size_t>(w)]) {
                found |= circuit(w);
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : adj[static_cast<size_t>(v)])
                block_map[static_cast<size_t>(w)].insert(v);
        }
        path.pop_back();
        return found;
    }
};

} // namespace

CycleSet enumerate_simple_cycles(int num_vertices,
                                 const std::vector<std::pair<int, int>> &edges,
                                 std::int64_t max_cycles) {
    CycleSet out;
    auto adj = adjacency(num_vertices, edges);
    for (int start = 0; start < num_vertices && !out.truncated; ++start) {
        // Subgraph induced on {start..n-1}; only the SCC containing
        // start can hold cycles through it.
        std::vector<std::vector<int>> sub(adj.size());
        for (int v = start; v < num_vertices; ++v)
            for (int w : adj[static_cast<size_t>(v)])
                if (w >= start)
                    sub[static_cast<size_t>(v)].push_back(w);
        std::vector<int> comp = scc_ids(sub);
        int own = comp[static_cast<size_t>(start)];
        std::vector<std::vector<int>> restricted(adj.size());
        bool has_edge = false;
        for (int v = start; v < num_vertices; ++v) {
            if (comp[static_cast<size_t>(v)] != own)
                continue;
            for (int w : sub[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] == own) {
                    restricted[static_cast<size_t>(v)].push_back(w);
                    has_edge = true;
                }
        }
        if (!has_edge)
            continue;
        JohnsonState state(restricted, start, max_cycles, out);
        state.circuit(start);
    }
    return out;
}

std::vector<int> topological_sort(int num_vertices,
                                  const std::vector<std::pair<int, int>> &edges) {
    auto adj = adjacency(num_vertices, edges);
    std::vector<int> state(static_cast<size_t>(num_vertices), 0); // 0 new, 1 open, 2 done
    std::vector<int> postorder;
    std::vector<int> call_v, call_i;
    for (int root = 0; root < num_vertices; ++root) {
        if (state[static_cast<size_t>(root)] != 0)
            continue;
        call_v.assign(1, root);
        call_i.assign(1, 0);
        state[static_cast<size_t>(root)] = 1;
        while (!call_v.empty()) {
            int v = call_v.back();
            int &i = call_i.back();
            if (i < static_cast<int>(adj[static_cast<size_t>(v)].size())) {
                int w = adj[static_cast<size_t>(v)][static_cast<size_t>(i++)];
                if (state[static_cast<size_t>(w)] == 1)
                    throw std::invalid_argument(
                        "topological_sort: graph has a cycle");
                if (state[static_cast<size_t>(w)] == 0) {
                    state[static_cast<size_t>(w)] = 1;
                    call_v.push_back(w);
                    call_i.push_back(0);
                }
            } else {
                state[static_cast<size_t>(v)] = 2;
                postorder.push_back(v);
                call_v.pop_back();
                call_i.pop_back();
            }
        }
    }
    std::reverse(postorder.begin(), postorder.end());
    return postorder;
}

void BinaryProgram::add_cycle_cover(std::vector<int> vars) {
    if (vars.empty())
        throw std::invalid_argument(
            "cycle cover over zero free variables is unsatisfiable");
    int bound = static_cast<int>(vars.size()) - 1;
    constraints.push_back({std::move(vars), bound});
}

void BinaryProgram::add_pair_exclusion(int u, int v) {
    constraints.push_back({{u, v}, 1});
}

namespace {

struct Solver {
    const BinaryProgram &prog;
    std::vector<int8_t> fixed; // -1 unfixed, else 0/1
    std::vector<int> slack;    // per constraint: bound - (#fixed to 1)
    std::vector<int> unfixed;  // per constraint: #unfixed vars
    std::vector<std::vector<int>> cons_of_var;
    std::int64_t current = 0, remaining = 0, best = -1;
    std::vector<char> best_assignment;

    explicit Solver(const BinaryProgram &p)
        : prog(p), fixed(static_cast<size_t>(p.num_vars), -1),
          cons_of_var(static_cast<size_t>(p.num_vars)) {
        slack.reserve(p.constraints.size());
        unfixed.reserve(p.constraints.size());
        for (size_t c = 0; c < p.constraints.size(); ++c) {
            slack.push_back(p.constraints[c].bound);
            unfixed.push_back(static_cast<int>(p.constraints[c].vars.size()));
            for (int v : p.constraints[c].vars)
                cons_of_var[static_cast<size_t>(v)].push_back(
                    static_cast<int>(c));
        }
        for (std::int64_t w : p.weights)
            remaining += w;
    }

    /// Fix var to val, propagating zero-forcing constraints.  Records
    /// every fixture in trail; returns false on contradiction.  Every
    /// trailed variable has all its constraint counters updated, so
    /// undo() can reverse exactly.
    bool assign(int var, int8_t val, std::vector<int> &trail) {
        std::vector<std::pair<int, int8_t>> pending{{var, val}};
        size_t head = 0;
        while (head < pending.size()) {
            auto [v, value] = pending[head++];
            if (fixed[static_cast<size_t>(v)] != -1) {
                if (fixed[static_cast<size_t>(v)] != value)
                    return false; // branch value contradicts propagation
                continue;
            }
            fixed[static_cast<size_t>(v)] = value;
            trail.push_back(v);
            remaining -= prog.weights[static_cast<size_t>(v)];
            if (value == 1)
                current += prog.weights[static_cast<size_t>(v)];
            bool contradiction = false;
            for (int c : cons_of_var[static_cast<size_t>(v)]) {
                --unfixed[static_cast<size_t>(c)];
                if (value == 1)
                    --slack[static_cast<size_t>(c)];
                if (slack[static_cast<size_t>(c)] < 0) {
                    contradiction = true;
                } else if (slack[static_cast<size_t>(c)] == 0 &&
                           unfixed[static_cast<size_t>(c)] > 0) {
                    // No room left: every unfixed member must be 0.
                    for (int w : prog.constraints[static_cast<size_t>(c)].vars)
                        if (fixed[static_cast<size_t>(w)] == -1)
                            pending.emplace_back(w, int8_t{0});
                }
            }
            if (contradiction)
                return false;
        }
        return true;
    }

    void undo(const std::vector<int> &trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            int v = *it;
            int8_t val = fixed[static_cast<size_t>(v)];
            for (int c : cons_of_var[static_cast<size_t>(v)]) {
                ++unfixed[static_cast<size_t>(c)];
                if (val == 1)
                    ++slack[static_cast<size_t>(c)];
            }
            remaining += prog.weights[static_cast<size_t>(v)];
            if (val == 1)
                current -= prog.weights[static_cast<size_t>(v)];
            fixed[static_cast<size_t>(v)] = -1;
        }
    }

    void record_if_better() {
        if (current > best) {
            best = current;
            best_assignment.assign(fixed.begin(), fixed.end());
        }
    }

    void search(int from) {
        if (current + remaining <= best)
            return; // cannot strictly improve; keeps first (lex-greatest) optimum
        int var = from;
        while (var < prog.num_vars && fixed[static_cast<size_t>(var)] != -1)
            ++var;
        if (var == prog.num_vars) {
            record_if_better();
            return;
        }
        for (int8_t val : {int8_t{1}, int8_t{0}}) {
            std::vector<int> trail;
            if (assign(var, val, trail))
                search(var + 1);
            undo(trail);
        }
    }
};

} // namespace

SolveResult solve_max_binary(const BinaryProgram &prog) {
    for (std::int64_t w : prog.weights)
        if (w < 0)
            throw std::invalid_argument("solve_max_binary: negative weight");
    for (const AtMostConstraint &c : prog.constraints)
        if (c.bound < 0)
            throw std::invalid_argument("solve_max_binary: negative bound");
    Solver solver(prog);
    solver.search(0);
    SolveResult result;
    result.objective = solver.best;
    result.assignment.assign(solver.best_assignment.begin(),
                             solver.best_assignment.end());
    if (result.assignment.empty())
        result.assignment.assign(static_cast<size_t>(prog.num_vars), 0);
    return result;
}

} // namespace ms2
