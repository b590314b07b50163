#pragma once

#include "ncdeg/fields.hpp"
#include "ncdeg/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncdeg {

// Deterministic storage order for polynomial supports: length first, then
// the raw letter sequence.  Independent of any OrderConfig; leading-term
// queries rescan with the order they are given.
struct WordStorageLess {
    bool operator()(const MonoidWord& a, const MonoidWord& b) const {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

// A sparse element of the free associative algebra K<x1..xn>: a finite map
// from monoid words to nonzero coefficients sharing one field tag.
class NcPoly {
public:
    using Terms = std::map<MonoidWord, FieldScalar, WordStorageLess>;

    NcPoly() = default;

    static NcPoly zero(int alphabet, FieldTag tag);
    static NcPoly constant(int alphabet, FieldScalar c);
    static NcPoly monomial(MonoidWord w, FieldScalar c);
    static NcPoly variable(int alphabet, FieldTag tag, int letter);

    int alphabet() const { return alphabet_; }
    FieldTag tag() const { return tag_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // Zero when the word is not in the support.
    FieldScalar coefficient(const MonoidWord& w) const;

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly scalar_mul(const FieldScalar& c) const;
    NcPoly pow(int k) const;

    bool operator==(const NcPoly& o) const = default;

    // Empty optionals stand for the degree of the zero polynomial; they
    // deliberately do not mix with integer arithmetic.
    std::optional<int> degree() const;
    std::optional<int> partial_degree(int letter) const;
    std::optional<long long> weighted_degree(
        const std::vector<long long>& weights) const;

    // Greatest support word under deglex and its coefficient.
    // Throws std::domain_error on the zero polynomial.
    std::pair<MonoidWord, FieldScalar> leading(
        const OrderConfig& cfg = {}) const;

    // Sum of the terms attaining the weighted degree.
    // Throws std::domain_error on the zero polynomial.
    NcPoly leading_part(const std::vector<long long>& weights) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const MonoidWord& w, const FieldScalar& c);
    void check_compatible(const NcPoly& o) const;

    int alphabet_ = 0;
    FieldTag tag_{};
    Terms terms_;

    friend NcPoly substitute(const NcPoly& P, const std::vector<NcPoly>& images);
};

inline NcPoly commutator(const NcPoly& f, const NcPoly& g) {
    return f * g - g * f;
}

// Algebra-homomorphism image of P under x_i -> images[i].  The images must
// agree with each other in alphabet and field tag (their alphabet need not
// match P's).
NcPoly substitute(const NcPoly& P, const std::vector<NcPoly>& images);

// Algebraic independence of two nonconstant elements, decided by the
// commutator test: in a free algebra the centralizer of a nonconstant
// element is a polynomial ring in one variable, so dependence is the same
// as commuting.  Throws std::invalid_argument on constant input.
bool independent_pair(const NcPoly& f, const NcPoly& g);

}  // namespace ncdeg
