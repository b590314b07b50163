#pragma once

#include "ncdeg/fields.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncdeg {

// A monomial of the free monoid on `alphabet` generators: a plain letter
// sequence.  Letter i stands for the generator x_{i+1}.
struct MonoidWord {
    int alphabet = 1;
    std::vector<int> letters;

    static MonoidWord unit(int alphabet) { return MonoidWord{alphabet, {}}; }

    bool is_unit() const { return letters.empty(); }
    int degree() const { return static_cast<int>(letters.size()); }
    int partial_degree(int letter) const;

    bool operator==(const MonoidWord&) const = default;
};

MonoidWord concat(const MonoidWord& u, const MonoidWord& v);
MonoidWord monoid_pow(const MonoidWord& w, int k);

// True iff uv = vu; for nonempty words this is equivalent to sharing a
// primitive root.
bool commutes(const MonoidWord& u, const MonoidWord& v);

struct PrimitiveRoot {
    MonoidWord root;
    int exponent = 1;
};

// Shortest period decomposition w = root^exponent with exponent maximal.
// Throws std::invalid_argument on the empty word.
PrimitiveRoot primitive_root(const MonoidWord& w);

// A reduced word of the free group on `alphabet` generators, stored as
// run-length syllables (letter, nonzero exponent) with no two adjacent
// syllables on the same letter.
struct GroupWord {
    int alphabet = 1;
    std::vector<std::pair<int, int>> syllables;

    static GroupWord unit(int alphabet) { return GroupWord{alphabet, {}}; }

    bool is_unit() const { return syllables.empty(); }
    // Signed exponent sum; the grading used by series truncation.
    int degree() const;
    int partial_degree(int letter) const;
    // Count of letters in the fully spelled-out reduced word.
    int total_letters() const;

    bool operator==(const GroupWord&) const = default;
};

GroupWord from_monoid(const MonoidWord& w);
GroupWord group_mul(const GroupWord& a, const GroupWord& b);
GroupWord group_inv(const GroupWord& a);
GroupWord group_pow(const GroupWord& a, int k);
GroupWord conjugate_word(const GroupWord& a, const GroupWord& by);

// Generator precedence and Magnus depth policy for the two total orders.
// rank[i] is the position of letter i in decreasing precedence: rank 0 is
// the greatest letter.  An empty rank vector means the identity (x1 > x2 >
// ... > xn).
struct OrderConfig {
    std::vector<int> rank;
    int initial_depth = 4;
};

// Throws std::invalid_argument unless cfg.rank is empty or a permutation of
// [0, alphabet).
void validate_order(const OrderConfig& cfg, int alphabet);
int rank_of(const OrderConfig& cfg, int letter);

// Degree first, ties broken letterwise by precedence.  Greater means larger
// in the monomial order.
std::strong_ordering deglex_compare(const MonoidWord& u, const MonoidWord& v,
                                    const OrderConfig& cfg);

// Truncated integer series in the commutator variables t_1..t_n, keyed by
// t-monomials (reusing MonoidWord).  The map order is the enumeration the
// group order scans: total degree ascending, then precedence-lexicographic.
struct MagnusMonomialLess {
    std::vector<int> rank;
    bool operator()(const MonoidWord& a, const MonoidWord& b) const;
};

using MagnusSeries = std::map<MonoidWord, BigInt, MagnusMonomialLess>;

// Image of a group word under x_i -> 1 + t_i, x_i^-1 -> 1 - t_i + t_i^2 - ...
// with every product truncated beyond total degree `depth`.
MagnusSeries magnus_expand(const GroupWord& a, int depth,
                           const OrderConfig& cfg);

// Bi-invariant total order on the free group extending exponent-sum degree.
// Equal degrees are decided by the first t-monomial (in MagnusMonomialLess
// order) where the Magnus expansions differ; the larger coefficient wins.
// Throws std::logic_error if the expansions still agree at the injectivity
// cap (total letters of a*b^-1) for distinct words.
std::strong_ordering group_compare(const GroupWord& a, const GroupWord& b,
                                   const OrderConfig& cfg);

bool group_less(const GroupWord& a, const GroupWord& b,
                const OrderConfig& cfg);

// Printing.  Names default to x, y, z, w for alphabets up to four letters
// and x1..xn beyond; a custom name list overrides both.
std::vector<std::string> default_names(int alphabet);
std::string word_str(const MonoidWord& w,
                     const std::vector<std::string>& names = {});
std::string word_str(const GroupWord& w,
                     const std::vector<std::string>& names = {});

}  // namespace ncdeg
