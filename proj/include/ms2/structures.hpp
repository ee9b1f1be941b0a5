#ifndef MS2_STRUCTURES_HPP
#define MS2_STRUCTURES_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ms2 {

/// 1-based sequence position. All public interfaces use 1-based positions.
using Pos = int;

/// An ordered base pair (i, j) with i < j.
struct BasePair {
    Pos i = 0;
    Pos j = 0;

    friend bool operator==(const BasePair &, const BasePair &) = default;
    friend auto operator<=>(const BasePair &, const BasePair &) = default;
};

/// Build an ordered pair from two distinct endpoints.
BasePair ordered_pair(Pos a, Pos b);

/// Whether the two pairs share exactly one endpoint.
bool touches(const BasePair &p, const BasePair &q);

/// Whether the two pairs interleave: p.i < q.i < p.j < q.j or
/// q.i < p.i < q.j < p.j.
bool crosses(const BasePair &p, const BasePair &q);

/// Render a pair as "(i,j)".
std::string to_string(const BasePair &p);

/// Thrown on malformed input (dot-bracket syntax, position bounds,
/// base triples, hairpin violations, disallowed pseudoknots,
/// non-canonical pairs).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Validation policy for building structures.
struct StructureOptions {
    /// Minimum unpaired span: every pair must satisfy j - i > min_hairpin.
    int min_hairpin = 3;
    /// Accept crossing (pseudoknotted) pairs.
    bool allow_pseudoknots = false;
};

/// Whether bases a and b can pair (Watson-Crick or wobble,
/// case-insensitive, T treated as U).
bool is_canonical_pair(char a, char b);

/// An RNA secondary structure: a set of base pairs over positions
/// 1..n with no position in more than one pair.  Depending on the
/// options it was built with, pairs may or may not cross; base
/// triples are never representable.
class SecondaryStructure {
public:
    SecondaryStructure() = default;

    /// Validate and adopt the given pairs.  Throws ValidationError on
    /// out-of-range positions, base triples, hairpin violations, or
    /// crossings when opts.allow_pseudoknots is false.
    SecondaryStructure(int n, std::vector<BasePair> pairs,
                       const StructureOptions &opts = StructureOptions{});

    /// Sequence length.
    int length() const { return n_; }

    /// Number of base pairs.
    int size() const { return static_cast<int>(pairs_.size()); }

    /// Pairs in ascending order.
    const std::vector<BasePair> &pairs() const { return pairs_; }

    /// Pairing function: partner of position i, or 0 if unpaired.
    Pos partner(Pos i) const;

    /// Whether position i is paired.
    bool paired(Pos i) const { return partner(i) != 0; }

    /// Whether the structure contains the exact pair.
    bool contains(const BasePair &p) const;

    /// Insert a pair.  Requires both endpoints unpaired and in range;
    /// throws ValidationError otherwise.  Crossing is not checked here
    /// (trajectory replay applies its own policy).
    void add(const BasePair &p);

    /// Erase a pair; throws ValidationError if absent.
    void remove(const BasePair &p);

    /// Whether any two pairs cross.
    bool has_crossing() const;

    friend bool operator==(const SecondaryStructure &,
                           const SecondaryStructure &) = default;

private:
    int n_ = 0;
    std::vector<BasePair> pairs_;   // sorted ascending
    std::vector<Pos> pairing_;      // 1-based; pairing_[i] == 0 if unpaired
};

/// Parse a dot-bracket string.  Round brackets give the nested layer;
/// one additional layer of square brackets encodes crossing pairs and
/// is accepted only when opts.allow_pseudoknots is true.
SecondaryStructure parse_dot_bracket(const std::string &text,
                                     const StructureOptions &opts = StructureOptions{});

/// Serialize to dot-bracket.  Crossing pairs are emitted on a single
/// square-bracket layer; throws ValidationError if some pair would
/// cross pairs on both layers (needs more than two layers).
std::string to_dot_bracket(const SecondaryStructure &s);

/// Check every pair of s against the sequence; throws ValidationError
/// on a non-canonical pair.  seq must have length s.length().
void check_canonical(const SecondaryStructure &s, const std::string &seq);

/// Pairs of a not in b, ascending.
std::vector<BasePair> pairs_minus(const SecondaryStructure &a,
                                  const SecondaryStructure &b);

/// Pairs common to a and b, ascending.
std::vector<BasePair> pairs_common(const SecondaryStructure &a,
                                   const SecondaryStructure &b);

/// Base-pair distance |a △ b| (symmetric difference size).
int base_pair_distance(const SecondaryStructure &a,
                       const SecondaryStructure &b);

/// Hamming distance between the pairing functions: the number of
/// positions whose partner differs.
int hamming_distance(const SecondaryStructure &a,
                     const SecondaryStructure &b);

} // namespace ms2

#endif // MS2_STRUCTURES_HPP
