#include "ms2/structures.hpp"

#include <algorithm>
#include <cctype>

namespace ms2 {

BasePair ordered_pair(Pos a, Pos b) {
    if (a == b)
        throw ValidationError("base pair endpoints must differ");
    return a < b ? BasePair{a, b} : BasePair{b, a};
}

bool touches(const BasePair &p, const BasePair &q) {
    int shared = (p.i == q.i) + (p.i == q.j) + (p.j == q.i) + (p.j == q.j);
    return shared == 1;
}

bool crosses(const BasePair &p, const BasePair &q) {
    return (p.i < q.i && q.i < p.j && p.j < q.j) ||
           (q.i < p.i && p.i < q.j && q.j < p.j);
}

std::string to_string(const BasePair &p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

bool is_canonical_pair(char a, char b) {
    auto canon = [](char c) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return c == 'T' ? 'U' : c;
    };
    char x = canon(a), y = canon(b);
    if (x > y)
        std::swap(x, y);
    return (x == 'C' && y == 'G') || (x == 'A' && y == 'U') ||
           (x == 'G' && y == 'U');
}

SecondaryStructure::SecondaryStructure(int n, std::vector<BasePair> pairs,
                                       const StructureOptions &opts)
    : n_(n), pairs_(std::move(pairs)), pairing_(static_cast<size_t>(n) + 1, 0) {
    if (n < 0)
        throw ValidationError("negative sequence length");
    std::sort(pairs_.begin(), pairs_.end());
    for (const BasePair &p : pairs_) {
        if (p.i < 1 || p.j > n_)
            throw ValidationError("pair " + to_string(p) + " out of range 1.." +
                                  std::to_string(n_));
        if (p.i >= p.j)
            throw ValidationError("pair " + to_string(p) + " not ordered");
        if (p.j - p.i <= opts.min_hairpin)
            throw ValidationError("pair " + to_string(p) +
                                  " violates minimum hairpin span " +
                                  std::to_string(opts.min_hairpin));
        if (pairing_[p.i] != 0 || pairing_[p.j] != 0)
            throw ValidationError("base triple at pair " + to_string(p));
        pairing_[p.i] = p.j;
        pairing_[p.j] = p.i;
    }
    if (!opts.allow_pseudoknots && has_crossing())
        throw ValidationError("structure contains crossing pairs");
}

Pos SecondaryStructure::partner(Pos i) const {
    if (i < 1 || i > n_)
        throw ValidationError("position " + std::to_string(i) +
                              " out of range 1.." + std::to_string(n_));
    return pairing_[i];
}

bool SecondaryStructure::contains(const BasePair &p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

void SecondaryStructure::add(const BasePair &p) {
    if (p.i < 1 || p.i >= p.j || p.j > n_)
        throw ValidationError("cannot add malformed pair " + to_string(p));
    if (pairing_[p.i] != 0 || pairing_[p.j] != 0)
        throw ValidationError("adding " + to_string(p) +
                              " would create a base triple");
    pairs_.insert(std::upper_bound(pairs_.begin(), pairs_.end(), p), p);
    pairing_[p.i] = p.j;
    pairing_[p.j] = p.i;
}

void SecondaryStructure::remove(const BasePair &p) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || *it != p)
        throw ValidationError("cannot remove absent pair " + to_string(p));
    pairs_.erase(it);
    pairing_[p.i] = 0;
    pairing_[p.j] = 0;
}

bool SecondaryStructure::has_crossing() const {
    // Pairs are sorted by opening position; a pair crosses some earlier
    // pair iff its closer lies between a pending opener's span bounds.
    for (size_t a = 0; a < pairs_.size(); ++a)
        for (size_t b = a + 1; b < pairs_.size(); ++b) {
            if (pairs_[b].i > pairs_[a].j)
                break;
            if (crosses(pairs_[a], pairs_[b]))
                return true;
        }
    return false;
}

SecondaryStructure parse_dot_bracket(const std::string &text,
                                     const StructureOptions &opts) {
    std::vector<BasePair> pairs;
    std::vector<Pos> round, square;
    for (size_t k = 0; k < text.size(); ++k) {
        Pos pos = static_cast<Pos>(k) + 1;
        switch (text[k]) {
        case '.':
            break;
        case '(':
            round.push_back(pos);
            break;
        case ')':
            if (round.empty())
                throw ValidationError("unbalanced ')' at position " +
                                      std::to_string(pos));
            pairs.push_back({round.back(), pos});
            round.pop_back();
            break;
        case '[':
            square.push_back(pos);
            break;
        case ']':
            if (square.empty())
                throw ValidationError("unbalanced ']' at position " +
                                      std::to_string(pos));
            pairs.push_back({square.back(), pos});
            square.pop_back();
            break;
        default:
            throw ValidationError(std::string("unexpected character '") +
                                  text[k] + "' at position " +
                                  std::to_string(pos));
        }
    }
    if (!round.empty() || !square.empty())
        throw ValidationError("unbalanced opening bracket");
    return SecondaryStructure(static_cast<int>(text.size()), std::move(pairs),
                              opts);
}

std::string to_dot_bracket(const SecondaryStructure &s) {
    std::string out(static_cast<size_t>(s.length()), '.');
    // Greedy two-layer assignment: a pair goes to the round layer
    // unless it crosses a pair already placed there.
    std::vector<BasePair> round, square;
    for (const BasePair &p : s.pairs()) {
        bool crosses_round = std::any_of(round.begin(), round.end(),
                                         [&](const BasePair &q) { return crosses(p, q); });
        bool crosses_square = std::any_of(square.begin(), square.end(),
                                          [&](const BasePair &q) { return crosses(p, q); });
        if (!crosses_round) {
            round.push_back(p);
            out[static_cast<size_t>(p.i) - 1] = '(';
            out[static_cast<size_t>(p.j) - 1] = ')';
        } else if (!crosses_square) {
            square.push_back(p);
            out[static_cast<size_t>(p.i) - 1] = '[';
            out[static_cast<size_t>(p.j) - 1] = ']';
        } else {
            throw ValidationError("pair " + to_string(p) +
                                  " needs more than two bracket layers");
        }
    }
    return out;
}

void check_canonical(const SecondaryStructure &s, const std::string &seq) {
    if (static_cast<int>(seq.size()) != s.length())
        throw ValidationError("sequence length " + std::to_string(seq.size()) +
                              " does not match structure length " +
                              std::to_string(s.length()));
    for (const BasePair &p : s.pairs()) {
        char a = seq[static_cast<size_t>(p.i) - 1];
        char b = seq[static_cast<size_t>(p.j) - 1];
        if (!is_canonical_pair(a, b))
            throw ValidationError("non-canonical pair " + to_string(p) + ": " +
                                  a + "-" + b);
    }
}

std::vector<BasePair> pairs_minus(const SecondaryStructure &a,
                                  const SecondaryStructure &b) {
    std::vector<BasePair> out;
    std::set_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                        b.pairs().end(), std::back_inserter(out));
    return out;
}

std::vector<BasePair> pairs_common(const SecondaryStructure &a,
                                   const SecondaryStructure &b) {
    std::vector<BasePair> out;
    std::set_intersection(a.pairs().begin(), a.pairs().end(),
                          b.pairs().begin(), b.pairs().end(),
                          std::back_inserter(out));
    return out;
}

int base_pair_distance(const SecondaryStructure &a,
                       const SecondaryStructure &b) {
    int common = static_cast<int>(pairs_common(a, b).size());
    return a.size() + b.size() - 2 * common;
}

int hamming_distance(const SecondaryStructure &a,
                     const SecondaryStructure &b) {
    if (a.length() != b.length())
        throw ValidationError("structures have different lengths");
    int count = 0;
    for (Pos i = 1; i <= a.length(); ++i)
        count += a.partner(i) != b.partner(i);
    return count;
}

} // namespace ms2
