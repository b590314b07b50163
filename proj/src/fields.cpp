#include "ncdeg/fields.hpp"

#include <stdexcept>

namespace ncdeg {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldTag field_rationals() { return FieldTag{0}; }

FieldTag field_gf(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("field_gf: modulus " + std::to_string(p) +
                                    " is not prime");
    return FieldTag{p};
}

namespace {

BigInt reduce_mod(const BigInt& n, std::uint64_t p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid on residues; m is prime so every nonzero a is invertible.
BigInt invmod(const BigInt& a, std::uint64_t m) {
    BigInt old_r = a, r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return reduce_mod(old_s, m);
}

}  // namespace

FieldScalar::FieldScalar(FieldTag tag) : tag_(tag) {}

FieldScalar::FieldScalar(FieldTag tag, const BigInt& n) : tag_(tag) {
    if (tag_.characteristic == 0)
        rat_ = BigRat(n);
    else
        res_ = reduce_mod(n, tag_.characteristic);
}

FieldScalar::FieldScalar(FieldTag tag, const BigRat& q) : tag_(tag) {
    if (tag_.characteristic != 0)
        throw std::invalid_argument(
            "FieldScalar: rational value in positive characteristic");
    rat_ = q;
}

bool FieldScalar::is_zero() const {
    return tag_.characteristic == 0 ? rat_ == 0 : res_ == 0;
}

bool FieldScalar::is_one() const {
    return tag_.characteristic == 0 ? rat_ == 1 : res_ == 1;
}

void FieldScalar::check_same(const FieldScalar& o) const {
    if (tag_ != o.tag_)
        throw std::invalid_argument(
            "FieldScalar: operands belong to different fields");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same(o);
    FieldScalar r(tag_);
    if (tag_.characteristic == 0)
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = reduce_mod(res_ + o.res_, tag_.characteristic);
    return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    check_same(o);
    FieldScalar r(tag_);
    if (tag_.characteristic == 0)
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = reduce_mod(res_ - o.res_, tag_.characteristic);
    return r;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same(o);
    FieldScalar r(tag_);
    if (tag_.characteristic == 0)
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = reduce_mod(res_ * o.res_, tag_.characteristic);
    return r;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r(tag_);
    if (tag_.characteristic == 0)
        r.rat_ = -rat_;
    else
        r.res_ = reduce_mod(-res_, tag_.characteristic);
    return r;
}

FieldScalar FieldScalar::inv() const {
    if (is_zero()) throw std::domain_error("FieldScalar: inverse of zero");
    FieldScalar r(tag_);
    if (tag_.characteristic == 0)
        r.rat_ = 1 / rat_;
    else
        r.res_ = invmod(res_, tag_.characteristic);
    return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inv();
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    check_same(o);
    return tag_.characteristic == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

const BigRat& FieldScalar::rational() const {
    if (tag_.characteristic != 0)
        throw std::logic_error("FieldScalar: not a rational");
    return rat_;
}

const BigInt& FieldScalar::residue() const {
    if (tag_.characteristic == 0)
        throw std::logic_error("FieldScalar: not a residue");
    return res_;
}

std::string FieldScalar::str() const {
    if (tag_.characteristic == 0) {
        std::string s = numerator(rat_).str();
        if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
        return s;
    }
    return res_.str();
}

FieldScalar scalar_zero(FieldTag tag) { return FieldScalar(tag); }

FieldScalar scalar_one(FieldTag tag) { return FieldScalar(tag, BigInt(1)); }

FieldScalar parse_scalar(const std::string& text, FieldTag tag) {
    if (text.empty() ||
        text.find_first_not_of("+-/0123456789") != std::string::npos)
        throw std::invalid_argument("parse_scalar: bad number '" + text + "'");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return FieldScalar(tag, BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("parse_scalar: zero denominator");
        if (tag.characteristic != 0)
            throw std::invalid_argument(
                "parse_scalar: fractions need characteristic 0");
        return FieldScalar(tag, BigRat(num, den));
    } catch (const std::runtime_error&) {
        // cpp_int reports malformed digits as runtime_error.
        throw std::invalid_argument("parse_scalar: bad number '" + text + "'");
    }
}

}  // namespace ncdeg
