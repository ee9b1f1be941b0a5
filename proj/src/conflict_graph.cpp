#include "ms2/conflict_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ms2 {

bool node_less(const TripletNode &a, const TripletNode &b) {
    if (a.y != b.y)
        return a.y < b.y;
    if (a.x != b.x)
        return a.x < b.x;
    return a.z < b.z;
}

int node_overlap(const TripletNode &a, const TripletNode &b) {
    int count = 0;
    for (Pos p : a.flatten())
        for (Pos q : b.flatten())
            count += p == q;
    return count;
}

int node_type(const TripletNode &v) {
    if (v.x < v.y && v.y < v.z)
        return 1;
    if (v.z < v.y && v.y < v.x)
        return 2;
    if (v.y < v.z && v.z < v.x)
        return 3;
    if (v.y < v.x && v.x < v.z)
        return 4;
    if (v.z < v.x && v.x < v.y)
        return 5;
    return 6; // x < z < y
}

std::string to_string(const TripletNode &v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
           std::to_string(v.z) + ")";
}

int ConflictDigraph::active_count() const {
    int count = 0;
    for (NodeRole r : roles)
        count += r != NodeRole::Dropped;
    return count;
}

namespace {

/// Whether u's shift must precede v's: their endpoint sets share at
/// most one position and u's source pair touches or crosses v's
/// target pair.  (Sharing exactly one position as a touch implies
/// z_u == x_v: the pivots cannot coincide and every other shared role
/// would make one structure pair two partners to one position.)
bool conflict_edge(const TripletNode &u, const TripletNode &v) {
    if (node_overlap(u, v) > 1)
        return false;
    BasePair su = u.s_pair(), tv = v.t_pair();
    return touches(su, tv) || crosses(su, tv);
}

} // namespace

ConflictDigraph build_conflict_digraph(const SecondaryStructure &s,
                                       const SecondaryStructure &t,
                                       const DigraphOptions &opts) {
    ConflictDigraph g;
    std::vector<Pos> universe = opts.pivot_universe;
    std::sort(universe.begin(), universe.end());
    auto pivot_allowed = [&](Pos p) {
        return universe.empty() ||
               std::binary_search(universe.begin(), universe.end(), p);
    };

    // One node per position paired differently in both structures.
    for (Pos y = 1; y <= s.length(); ++y) {
        Pos zs = s.partner(y), xt = t.partner(y);
        if (zs != 0 && xt != 0 && zs != xt && pivot_allowed(y))
            g.nodes.push_back({xt, y, zs});
    }
    std::sort(g.nodes.begin(), g.nodes.end(), node_less);
    g.roles.assign(g.nodes.size(), NodeRole::Free);

    auto index_of = [&](const TripletNode &v) {
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), v, node_less);
        return static_cast<int>(it - g.nodes.begin());
    };

    // Closed 2-cycles: size-4 alternating cycles.  Withhold all four
    // vertices from the IP; v1 stays in the digraph as a forced shift
    // so the topological phase can order it against outside nodes.
    std::vector<bool> seen(static_cast<size_t>(s.length()) + 1, false);
    for (Pos p = 1; p <= s.length(); ++p) {
        if (seen[static_cast<size_t>(p)] || s.partner(p) == 0 ||
            t.partner(p) == 0)
            continue;
        // Walk the class of p; only 4-cycles matter here.
        std::vector<Pos> members{p};
        Pos cur = t.partner(p);
        bool via_s = true;
        while (cur != 0 && cur != p && members.size() <= 4) {
            members.push_back(cur);
            cur = via_s ? s.partner(cur) : t.partner(cur);
            via_s = !via_s;
        }
        if (cur != p || members.size() != 4)
            continue;
        for (Pos m : members)
            seen[static_cast<size_t>(m)] = true;
        std::sort(members.begin(), members.end());
        // Every member is the pivot of one of the four vertices; a
        // pivot universe never splits a class, but stay safe if it
        // would.
        if (!std::all_of(members.begin(), members.end(), pivot_allowed))
            continue;
        Pos a1 = members[0], a2 = members[1], a3 = members[2], a4 = members[3];

        ClosedTwoCycle c;
        c.a = {a1, a2, a3, a4};
        if (t.partner(a1) == a2) {
            // t holds {(a1,a2),(a3,a4)}, s holds {(a1,a4),(a2,a3)}.
            c.mirrored = false;
            c.v1 = {a1, a2, a3};
            c.v2 = {a3, a4, a1};
            c.v3 = {a2, a1, a4};
            c.v4 = {a4, a3, a2};
            c.remove_pair = {a1, a4};
        } else if (s.partner(a1) == a2) {
            // s holds {(a1,a2),(a3,a4)}, t holds {(a1,a4),(a2,a3)}.
            c.mirrored = true;
            c.v1 = {a1, a4, a3};
            c.v2 = {a4, a1, a2};
            c.v3 = {a2, a3, a4};
            c.v4 = {a3, a2, a1};
            c.remove_pair = {a1, a2};
        } else {
            continue; // 4-cycle classes always match one of the two patterns
        }
        c.shiftable = opts.locality_d < 0 ||
                      c.v1.displacement() <= opts.locality_d;
        g.roles[static_cast<size_t>(index_of(c.v1))] =
            c.shiftable ? NodeRole::Forced : NodeRole::Dropped;
        g.roles[static_cast<size_t>(index_of(c.v2))] = NodeRole::Dropped;
        g.roles[static_cast<size_t>(index_of(c.v3))] = NodeRole::Dropped;
        g.roles[static_cast<size_t>(index_of(c.v4))] = NodeRole::Dropped;
        g.two_cycles.push_back(c);
    }

    // Locality filter on the remaining free nodes.
    if (opts.locality_d >= 0)
        for (size_t i = 0; i < g.nodes.size(); ++i)
            if (g.roles[i] == NodeRole::Free &&
                g.nodes[i].displacement() > opts.locality_d)
                g.roles[i] = NodeRole::Dropped;

    // Edges and overlap-2 exclusions among non-dropped nodes.
    g.out_adj.assign(g.nodes.size(), {});
    const int n = g.num_nodes();
    for (int u = 0; u < n; ++u) {
        if (g.roles[static_cast<size_t>(u)] == NodeRole::Dropped)
            continue;
        for (int v = 0; v < n; ++v) {
            if (v == u || g.roles[static_cast<size_t>(v)] == NodeRole::Dropped)
                continue;
            if (conflict_edge(g.nodes[static_cast<size_t>(u)],
                              g.nodes[static_cast<size_t>(v)])) {
                g.edges.emplace_back(u, v);
                g.out_adj[static_cast<size_t>(u)].push_back(v);
            }
            if (u < v &&
                node_overlap(g.nodes[static_cast<size_t>(u)],
                             g.nodes[static_cast<size_t>(v)]) == 2)
                g.exclusion_pairs.emplace_back(u, v);
        }
    }
    return g;
}

std::string to_dot(const ConflictDigraph &g) {
    std::ostringstream out;
    out << "digraph conflicts {\n";
    for (int i = 0; i < g.num_nodes(); ++i) {
        out << "  n" << i << " [label=\"" << to_string(g.nodes[static_cast<size_t>(i)])
            << "\"";
        if (g.roles[static_cast<size_t>(i)] == NodeRole::Dropped)
            out << " style=dotted";
        else if (g.roles[static_cast<size_t>(i)] == NodeRole::Forced)
            out << " style=bold";
        out << "];\n";
    }
    for (const auto &[u, v] : g.edges)
        out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
}

CoarseDigraph build_coarse_digraph(const SecondaryStructure &s,
                                   const SecondaryStructure &t,
                                   const std::vector<EquivalenceClass> &classes) {
    CoarseDigraph g;
    g.num_classes = static_cast<int>(classes.size());
    // Map each position to its class index.
    std::vector<int> cls_of(static_cast<size_t>(s.length()) + 1, -1);
    for (size_t k = 0; k < classes.size(); ++k)
        for (Pos p : classes[k].members)
            cls_of[static_cast<size_t>(p)] = static_cast<int>(k);

    std::vector<BasePair> s_only = pairs_minus(s, t);
    std::vector<BasePair> t_only = pairs_minus(t, s);
    std::map<std::pair<int, int>, std::vector<BasePair>> arcs;
    for (const BasePair &sp : s_only) {
        int i = cls_of[static_cast<size_t>(sp.i)];
        if (i < 0)
            continue;
        for (const BasePair &tp : t_only) {
            int j = cls_of[static_cast<size_t>(tp.i)];
            if (j < 0 || j == i)
                continue; // class-internal conflicts are ordered locally
            if (crosses(sp, tp)) {
                auto &list = arcs[{i, j}];
                if (list.empty() || list.back() != sp)
                    list.push_back(sp);
            }
        }
    }
    for (auto &[key, pairs] : arcs)
        g.arcs.push_back({key.first, key.second, std::move(pairs)});
    return g;
}

std::string to_dot(const CoarseDigraph &g,
                   const std::vector<EquivalenceClass> &classes) {
    std::ostringstream out;
    out << "digraph classes {\n";
    for (int i = 0; i < g.num_classes; ++i) {
        out << "  c" << i << " [label=\"X" << i + 1 << " min="
            << classes[static_cast<size_t>(i)].min_member() << " type="
            << static_cast<int>(classes[static_cast<size_t>(i)].type)
            << "\"];\n";
    }
    for (const CoarseArc &arc : g.arcs)
        out << "  c" << arc.from << " -> c" << arc.to << " [label=\""
            << arc.pairs.size() << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace ms2
