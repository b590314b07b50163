#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ncdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A coefficient field: the rationals (characteristic 0) or a prime field
// GF(p).  Tags are tiny value types; two scalars may be combined only when
// their tags agree.
struct FieldTag {
    std::uint64_t characteristic = 0;

    bool operator==(const FieldTag&) const = default;
};

FieldTag field_rationals();

// Throws std::invalid_argument unless p is prime.
FieldTag field_gf(std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

// An element of the field named by `tag`.  For characteristic 0 the value
// lives in `rat`; otherwise `res` holds the canonical residue in [0, p).
class FieldScalar {
public:
    FieldScalar() = default;
    explicit FieldScalar(FieldTag tag);                 // zero
    FieldScalar(FieldTag tag, const BigInt& n);         // image of an integer
    FieldScalar(FieldTag tag, const BigRat& q);         // char 0 only

    FieldTag tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator-() const;

    // Throws std::domain_error when *this is zero.
    FieldScalar inv() const;
    FieldScalar operator/(const FieldScalar& o) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    // Exact value for characteristic 0; throws otherwise.
    const BigRat& rational() const;
    // Canonical residue for positive characteristic; throws otherwise.
    const BigInt& residue() const;

    // "3", "-1/2", "4" (already reduced / already a residue).
    std::string str() const;

private:
    void check_same(const FieldScalar& o) const;

    FieldTag tag_{};
    BigRat rat_{};
    BigInt res_{};
};

FieldScalar scalar_zero(FieldTag tag);
FieldScalar scalar_one(FieldTag tag);

// Parses "3", "-7", "2/5" (the latter only in characteristic 0).
// Throws std::invalid_argument on malformed input or a zero denominator.
FieldScalar parse_scalar(const std::string& text, FieldTag tag);

}  // namespace ncdeg
