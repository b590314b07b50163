#include "ncdeg/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdeg {

namespace {

void check_same_alphabet(int a, int b, const char* who) {
    if (a != b)
        throw std::invalid_argument(std::string(who) + ": alphabet mismatch");
}

void check_letter(int letter, int alphabet, const char* who) {
    if (letter < 0 || letter >= alphabet)
        throw std::invalid_argument(std::string(who) + ": letter out of range");
}

}  // namespace

int MonoidWord::partial_degree(int letter) const {
    check_letter(letter, alphabet, "partial_degree");
    return static_cast<int>(
        std::count(letters.begin(), letters.end(), letter));
}

MonoidWord concat(const MonoidWord& u, const MonoidWord& v) {
    check_same_alphabet(u.alphabet, v.alphabet, "concat");
    MonoidWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

MonoidWord monoid_pow(const MonoidWord& w, int k) {
    if (k < 0) throw std::invalid_argument("monoid_pow: negative exponent");
    MonoidWord r = MonoidWord::unit(w.alphabet);
    r.letters.reserve(w.letters.size() * k);
    for (int i = 0; i < k; ++i)
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

bool commutes(const MonoidWord& u, const MonoidWord& v) {
    check_same_alphabet(u.alphabet, v.alphabet, "commutes");
    return concat(u, v) == concat(v, u);
}

PrimitiveRoot primitive_root(const MonoidWord& w) {
    if (w.is_unit())
        throw std::invalid_argument("primitive_root: empty word");
    const int len = w.degree();
    for (int period = 1; period <= len; ++period) {
        if (len % period != 0) continue;
        bool periodic = true;
        for (int i = period; i < len && periodic; ++i)
            periodic = w.letters[i] == w.letters[i - period];
        if (periodic) {
            MonoidWord root{w.alphabet,
                            {w.letters.begin(), w.letters.begin() + period}};
            return PrimitiveRoot{std::move(root), len / period};
        }
    }
    return PrimitiveRoot{w, 1};
}

int GroupWord::degree() const {
    int d = 0;
    for (const auto& [letter, exp] : syllables) {
        (void)letter;
        d += exp;
    }
    return d;
}

int GroupWord::partial_degree(int letter) const {
    check_letter(letter, alphabet, "partial_degree");
    int d = 0;
    for (const auto& [l, exp] : syllables)
        if (l == letter) d += exp;
    return d;
}

int GroupWord::total_letters() const {
    int d = 0;
    for (const auto& [letter, exp] : syllables) {
        (void)letter;
        d += exp < 0 ? -exp : exp;
    }
    return d;
}

GroupWord from_monoid(const MonoidWord& w) {
    GroupWord r = GroupWord::unit(w.alphabet);
    for (int letter : w.letters) {
        if (!r.syllables.empty() && r.syllables.back().first == letter)
            ++r.syllables.back().second;
        else
            r.syllables.emplace_back(letter, 1);
    }
    return r;
}

GroupWord group_mul(const GroupWord& a, const GroupWord& b) {
    check_same_alphabet(a.alphabet, b.alphabet, "group_mul");
    GroupWord r = a;
    for (const auto& syl : b.syllables) {
        if (!r.syllables.empty() && r.syllables.back().first == syl.first) {
            r.syllables.back().second += syl.second;
            if (r.syllables.back().second == 0) r.syllables.pop_back();
        } else {
            r.syllables.push_back(syl);
        }
    }
    return r;
}

GroupWord group_inv(const GroupWord& a) {
    GroupWord r = GroupWord::unit(a.alphabet);
    r.syllables.reserve(a.syllables.size());
    for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
        r.syllables.emplace_back(it->first, -it->second);
    return r;
}

GroupWord group_pow(const GroupWord& a, int k) {
    GroupWord base = k < 0 ? group_inv(a) : a;
    int reps = k < 0 ? -k : k;
    GroupWord r = GroupWord::unit(a.alphabet);
    for (int i = 0; i < reps; ++i) r = group_mul(r, base);
    return r;
}

GroupWord conjugate_word(const GroupWord& a, const GroupWord& by) {
    return group_mul(group_mul(by, a), group_inv(by));
}

void validate_order(const OrderConfig& cfg, int alphabet) {
    if (cfg.rank.empty()) return;
    if (static_cast<int>(cfg.rank.size()) != alphabet)
        throw std::invalid_argument("OrderConfig: rank size != alphabet");
    std::vector<bool> seen(alphabet, false);
    for (int r : cfg.rank) {
        if (r < 0 || r >= alphabet || seen[r])
            throw std::invalid_argument("OrderConfig: rank is not a permutation");
        seen[r] = true;
    }
}

int rank_of(const OrderConfig& cfg, int letter) {
    if (cfg.rank.empty()) return letter;
    return cfg.rank.at(static_cast<size_t>(letter));
}

std::strong_ordering deglex_compare(const MonoidWord& u, const MonoidWord& v,
                                    const OrderConfig& cfg) {
    check_same_alphabet(u.alphabet, v.alphabet, "deglex_compare");
    if (u.degree() != v.degree())
        return u.degree() <=> v.degree();
    for (size_t i = 0; i < u.letters.size(); ++i) {
        int ru = rank_of(cfg, u.letters[i]);
        int rv = rank_of(cfg, v.letters[i]);
        // Lower rank means higher precedence, hence the greater word.
        if (ru != rv) return rv <=> ru;
    }
    return std::strong_ordering::equal;
}

bool MagnusMonomialLess::operator()(const MonoidWord& a,
                                    const MonoidWord& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.letters.size(); ++i) {
        int ra = rank.empty() ? a.letters[i]
                              : rank[static_cast<size_t>(a.letters[i])];
        int rb = rank.empty() ? b.letters[i]
                              : rank[static_cast<size_t>(b.letters[i])];
        if (ra != rb) return ra < rb;
    }
    return false;
}

namespace {

MagnusSeries magnus_zero(int alphabet, const OrderConfig& cfg) {
    (void)alphabet;
    return MagnusSeries(MagnusMonomialLess{cfg.rank});
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b,
                        int depth, int alphabet, const OrderConfig& cfg) {
    MagnusSeries r = magnus_zero(alphabet, cfg);
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            if (wa.degree() + wb.degree() > depth) continue;
            BigInt c = ca * cb;
            auto [it, inserted] = r.emplace(concat(wa, wb), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

// Binomial coefficient C(e, k) for any integer e and k >= 0; exact.
BigInt general_binomial(int e, int k) {
    BigInt num = 1;
    for (int j = 0; j < k; ++j) num *= BigInt(e - j);
    BigInt den = 1;
    for (int j = 2; j <= k; ++j) den *= j;
    return num / den;
}

// Expansion of (1 + t_letter)^exp truncated beyond `depth`.
MagnusSeries magnus_syllable(int letter, int exp, int depth, int alphabet,
                             const OrderConfig& cfg) {
    MagnusSeries r = magnus_zero(alphabet, cfg);
    for (int k = 0; k <= depth; ++k) {
        BigInt c = general_binomial(exp, k);
        if (c == 0) continue;
        MonoidWord mono{alphabet, std::vector<int>(static_cast<size_t>(k),
                                                   letter)};
        r.emplace(std::move(mono), std::move(c));
    }
    return r;
}

}  // namespace

MagnusSeries magnus_expand(const GroupWord& a, int depth,
                           const OrderConfig& cfg) {
    if (depth < 1)
        throw std::invalid_argument("magnus_expand: depth must be positive");
    validate_order(cfg, a.alphabet);
    MagnusSeries r = magnus_zero(a.alphabet, cfg);
    r.emplace(MonoidWord::unit(a.alphabet), BigInt(1));
    for (const auto& [letter, exp] : a.syllables)
        r = magnus_mul(r, magnus_syllable(letter, exp, depth, a.alphabet, cfg),
                       depth, a.alphabet, cfg);
    return r;
}

namespace {

std::strong_ordering cmp_bigint(const BigInt& a, const BigInt& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Scan two expansions for the first monomial with differing coefficients.
// Returns the comparison of those coefficients, or equal if none differ.
std::strong_ordering first_coefficient_difference(const MagnusSeries& a,
                                                  const MagnusSeries& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    const auto& less = a.key_comp();
    const BigInt zero(0);
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && less(ia->first, ib->first))) {
            // Monomial present only in a; b's coefficient there is 0.
            if (ia->second != 0) return cmp_bigint(ia->second, zero);
            ++ia;
        } else if (ia == a.end() || less(ib->first, ia->first)) {
            if (ib->second != 0) return cmp_bigint(zero, ib->second);
            ++ib;
        } else {
            if (ia->second != ib->second)
                return cmp_bigint(ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering group_compare(const GroupWord& a, const GroupWord& b,
                                   const OrderConfig& cfg) {
    check_same_alphabet(a.alphabet, b.alphabet, "group_compare");
    validate_order(cfg, a.alphabet);
    if (a == b) return std::strong_ordering::equal;
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();

    // Distinct reduced words must separate by the total letter count of
    // a*b^-1: that word's full-block t-monomial has coefficient +-1 there.
    const int cap = group_mul(a, group_inv(b)).total_letters();
    int depth = std::max(1, std::min(cfg.initial_depth, cap));
    while (true) {
        auto cmp = first_coefficient_difference(magnus_expand(a, depth, cfg),
                                                magnus_expand(b, depth, cfg));
        if (cmp != std::strong_ordering::equal) return cmp;
        if (depth >= cap)
            throw std::logic_error(
                "group_compare: Magnus expansions agree at the injectivity "
                "cap for distinct words");
        depth = std::min(depth * 2, cap);
    }
}

bool group_less(const GroupWord& a, const GroupWord& b,
                const OrderConfig& cfg) {
    return group_compare(a, b, cfg) == std::strong_ordering::less;
}

std::vector<std::string> default_names(int alphabet) {
    if (alphabet <= 4) {
        static const char* short_names[] = {"x", "y", "z", "w"};
        std::vector<std::string> names;
        for (int i = 0; i < alphabet; ++i) names.emplace_back(short_names[i]);
        return names;
    }
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(alphabet));
    for (int i = 1; i <= alphabet; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

const std::string& name_of(int letter, const std::vector<std::string>& names,
                           std::vector<std::string>& fallback, int alphabet) {
    if (!names.empty()) return names.at(static_cast<size_t>(letter));
    if (fallback.empty()) fallback = default_names(alphabet);
    return fallback[static_cast<size_t>(letter)];
}

}  // namespace

std::string word_str(const MonoidWord& w,
                     const std::vector<std::string>& names) {
    if (w.is_unit()) return "1";
    std::vector<std::string> fallback;
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!out.empty()) out += "*";
        out += name_of(w.letters[i], names, fallback, w.alphabet);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string word_str(const GroupWord& w,
                     const std::vector<std::string>& names) {
    if (w.is_unit()) return "1";
    std::vector<std::string> fallback;
    std::string out;
    for (const auto& [letter, exp] : w.syllables) {
        if (!out.empty()) out += "*";
        out += name_of(letter, names, fallback, w.alphabet);
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace ncdeg
