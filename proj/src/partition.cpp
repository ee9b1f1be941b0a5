#include "ms2/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ms2 {

PositionPartition partition_positions(const SecondaryStructure &s,
                                      const SecondaryStructure &t) {
    if (s.length() != t.length())
        throw ValidationError("structures have different lengths");
    PositionPartition part;
    const int n = s.length();
    for (Pos i = 1; i <= n; ++i) {
        Pos ps = s.partner(i), pt = t.partner(i);
        if (ps != 0 && pt != 0)
            (ps == pt ? part.D : part.A).push_back(i);
        else if (ps != 0 || pt != 0)
            part.B.push_back(i);
        else
            part.C.push_back(i);
    }
    for (const BasePair &p : s.pairs())
        if (t.partner(p.i) == 0 && t.partner(p.j) == 0) {
            part.BP1.push_back(p);
            part.B1.push_back(p.i);
            part.B1.push_back(p.j);
        }
    for (const BasePair &p : t.pairs())
        if (s.partner(p.i) == 0 && s.partner(p.j) == 0) {
            part.BP2.push_back(p);
            part.B2.push_back(p.i);
            part.B2.push_back(p.j);
        }
    std::sort(part.B1.begin(), part.B1.end());
    std::sort(part.B2.begin(), part.B2.end());
    std::set_difference(part.B.begin(), part.B.end(), part.B1.begin(),
                        part.B1.end(), std::back_inserter(part.B0));
    std::vector<Pos> rest;
    std::set_difference(part.B0.begin(), part.B0.end(), part.B2.begin(),
                        part.B2.end(), std::back_inserter(rest));
    part.B0 = std::move(rest);
    return part;
}

int class_pairs_in(const SecondaryStructure &s, const EquivalenceClass &cls) {
    int count = 0;
    for (Pos p : cls.members) {
        Pos q = s.partner(p);
        if (q > p && std::binary_search(cls.members.begin(), cls.members.end(), q))
            ++count;
    }
    return count;
}

EquivalenceClass classify_path_type(const SecondaryStructure &s,
                                    const SecondaryStructure &t,
                                    std::vector<Pos> members) {
    std::sort(members.begin(), members.end());
    EquivalenceClass cls;
    cls.members = std::move(members);

    std::vector<Pos> s_ends, t_ends; // touched by s only / by t only
    for (Pos p : cls.members) {
        if (t.partner(p) == 0)
            s_ends.push_back(p);
        if (s.partner(p) == 0)
            t_ends.push_back(p);
    }

    Pos start = 0;
    bool via_t_first = false;
    if (s_ends.empty() && t_ends.empty()) {
        cls.type = PathType::Cycle;
        start = cls.members.front();
        via_t_first = true;
    } else if (cls.members.size() % 2 == 0) {
        if (s_ends.size() == 2) {
            cls.type = PathType::SOnly;
            start = s_ends.front();
        } else if (t_ends.size() == 2) {
            cls.type = PathType::TOnly;
            start = t_ends.front();
            via_t_first = true;
        } else {
            throw std::logic_error("even class without two same-side ends");
        }
    } else {
        if (s_ends.size() != 1 || t_ends.size() != 1)
            throw std::logic_error("odd class without one end per side");
        if (s_ends.front() < t_ends.front()) {
            cls.type = PathType::SLead;
            start = s_ends.front();
        } else {
            cls.type = PathType::TLead;
            start = t_ends.front();
            via_t_first = true;
        }
    }

    // Walk the alternating path from the chosen end.
    cls.walk.reserve(cls.members.size());
    Pos cur = start;
    bool via_t = via_t_first;
    for (size_t step = 0; step < cls.members.size(); ++step) {
        cls.walk.push_back(cur);
        Pos next = via_t ? t.partner(cur) : s.partner(cur);
        if (next == 0)
            break;
        if (cls.type == PathType::Cycle && next == start)
            break; // closing link of the cycle
        cur = next;
        via_t = !via_t;
    }
    if (cls.walk.size() != cls.members.size())
        throw std::logic_error("class walk did not visit every member");
    return cls;
}

std::vector<EquivalenceClass>
equivalence_classes(const SecondaryStructure &s, const SecondaryStructure &t,
                    const std::vector<Pos> &universe) {
    std::vector<Pos> sorted = universe;
    std::sort(sorted.begin(), sorted.end());
    auto in_universe = [&](Pos p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    };

    std::vector<EquivalenceClass> classes;
    std::vector<bool> seen(static_cast<size_t>(s.length()) + 1, false);
    for (Pos p : sorted) {
        if (seen[static_cast<size_t>(p)])
            continue;
        // Flood the class via s/t partner links.
        std::vector<Pos> members, frontier{p};
        seen[static_cast<size_t>(p)] = true;
        while (!frontier.empty()) {
            Pos cur = frontier.back();
            frontier.pop_back();
            members.push_back(cur);
            for (Pos next : {s.partner(cur), t.partner(cur)}) {
                if (next == 0 || seen[static_cast<size_t>(next)])
                    continue;
                if (!in_universe(next))
                    throw std::logic_error(
                        "class member links outside the given universe");
                seen[static_cast<size_t>(next)] = true;
                frontier.push_back(next);
            }
        }
        classes.push_back(classify_path_type(s, t, std::move(members)));
    }
    // Flooding from ascending seeds already yields ascending min members.
    return classes;
}

} // namespace ms2
