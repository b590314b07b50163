#include "ncdeg/freealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdeg {

NcPoly NcPoly::zero(int alphabet, FieldTag tag) {
    NcPoly p;
    p.alphabet_ = alphabet;
    p.tag_ = tag;
    return p;
}

NcPoly NcPoly::constant(int alphabet, FieldScalar c) {
    NcPoly p = zero(alphabet, c.tag());
    p.add_term(MonoidWord::unit(alphabet), c);
    return p;
}

NcPoly NcPoly::monomial(MonoidWord w, FieldScalar c) {
    NcPoly p = zero(w.alphabet, c.tag());
    p.add_term(w, c);
    return p;
}

NcPoly NcPoly::variable(int alphabet, FieldTag tag, int letter) {
    if (letter < 0 || letter >= alphabet)
        throw std::invalid_argument("NcPoly::variable: letter out of range");
    return monomial(MonoidWord{alphabet, {letter}}, scalar_one(tag));
}

FieldScalar NcPoly::coefficient(const MonoidWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? scalar_zero(tag_) : it->second;
}

void NcPoly::add_term(const MonoidWord& w, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPoly::check_compatible(const NcPoly& o) const {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("NcPoly: alphabet mismatch");
    if (!(tag_ == o.tag_))
        throw std::invalid_argument("NcPoly: field mismatch");
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    check_compatible(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    check_compatible(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    check_compatible(o);
    NcPoly r = zero(alphabet_, tag_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            r.add_term(concat(wa, wb), ca * cb);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NcPoly NcPoly::scalar_mul(const FieldScalar& c) const {
    if (c.is_zero()) return zero(alphabet_, tag_);
    NcPoly r = *this;
    for (auto& [w, coeff] : r.terms_) coeff = coeff * c;
    return r;
}

NcPoly NcPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("NcPoly::pow: negative exponent");
    NcPoly r = constant(alphabet_, scalar_one(tag_));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::optional<int> NcPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    // Storage order is length-first, so the last key is longest.
    return terms_.rbegin()->first.degree();
}

std::optional<int> NcPoly::partial_degree(int letter) const {
    if (terms_.empty()) return std::nullopt;
    int best = 0;
    for (const auto& [w, c] : terms_) {
        (void)c;
        best = std::max(best, w.partial_degree(letter));
    }
    return best;
}

std::optional<long long> NcPoly::weighted_degree(
    const std::vector<long long>& weights) const {
    if (static_cast<int>(weights.size()) != alphabet_)
        throw std::invalid_argument("weighted_degree: weights size mismatch");
    for (long long k : weights)
        if (k <= 0)
            throw std::invalid_argument("weighted_degree: weights must be positive");
    if (terms_.empty()) return std::nullopt;
    std::optional<long long> best;
    for (const auto& [w, c] : terms_) {
        (void)c;
        long long value = 0;
        for (int letter : w.letters) value += weights[static_cast<size_t>(letter)];
        if (!best || value > *best) best = value;
    }
    return best;
}

std::pair<MonoidWord, FieldScalar> NcPoly::leading(
    const OrderConfig& cfg) const {
    if (terms_.empty())
        throw std::domain_error("NcPoly::leading: zero polynomial");
    validate_order(cfg, alphabet_);
    const MonoidWord* best = nullptr;
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (!best || deglex_compare(w, *best, cfg) == std::strong_ordering::greater)
            best = &w;
    }
    return {*best, terms_.at(*best)};
}

NcPoly NcPoly::leading_part(const std::vector<long long>& weights) const {
    if (terms_.empty())
        throw std::domain_error("NcPoly::leading_part: zero polynomial");
    long long top = *weighted_degree(weights);
    NcPoly r = zero(alphabet_, tag_);
    for (const auto& [w, c] : terms_) {
        long long value = 0;
        for (int letter : w.letters) value += weights[static_cast<size_t>(letter)];
        if (value == top) r.add_term(w, c);
    }
    return r;
}

namespace {

bool scalar_is_negative(const FieldScalar& c) {
    return c.tag().characteristic == 0 && c.rational() < 0;
}

std::string abs_str(const FieldScalar& c) {
    return scalar_is_negative(c) ? (-c).str() : c.str();
}

}  // namespace

std::string NcPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) order.push_back(&term);
    OrderConfig cfg;
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        return deglex_compare(a->first, b->first, cfg) ==
               std::strong_ordering::greater;
    });
    std::string out;
    for (const auto* term : order) {
        const auto& [w, c] = *term;
        if (out.empty()) {
            if (scalar_is_negative(c)) out += "-";
        } else {
            out += scalar_is_negative(c) ? " - " : " + ";
        }
        std::string mag = abs_str(c);
        if (w.is_unit())
            out += mag;
        else if (mag == "1")
            out += word_str(w, names);
        else
            out += mag + "*" + word_str(w, names);
    }
    return out;
}

NcPoly substitute(const NcPoly& P, const std::vector<NcPoly>& images) {
    if (static_cast<int>(images.size()) != P.alphabet())
        throw std::invalid_argument("substitute: one image per letter required");
    if (images.empty())
        throw std::invalid_argument("substitute: empty alphabet");
    for (const auto& img : images) images.front().check_compatible(img);
    const int alphabet = images.front().alphabet();
    const FieldTag tag = images.front().tag();
    if (!(tag == P.tag()))
        throw std::invalid_argument("substitute: field mismatch");

    NcPoly r = NcPoly::zero(alphabet, tag);
    for (const auto& [w, c] : P.terms()) {
        NcPoly prod = NcPoly::constant(alphabet, c);
        for (int letter : w.letters)
            prod = prod * images[static_cast<size_t>(letter)];
        r = r + prod;
    }
    return r;
}

bool independent_pair(const NcPoly& f, const NcPoly& g) {
    auto nonconstant = [](const NcPoly& p) {
        auto d = p.degree();
        return d && *d >= 1;
    };
    if (!nonconstant(f) || !nonconstant(g))
        throw std::invalid_argument("independent_pair: constant input");
    return !commutator(f, g).is_zero();
}

}  // namespace ncdeg
