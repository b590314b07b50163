#include "ncdeg/mnseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdeg {

TruncatedGroupSeries TruncatedGroupSeries::zero(int alphabet, FieldTag tag,
                                                int floor) {
    TruncatedGroupSeries s;
    s.alphabet_ = alphabet;
    s.tag_ = tag;
    s.floor_ = floor;
    return s;
}

TruncatedGroupSeries TruncatedGroupSeries::monomial(GroupWord w, FieldScalar c,
                                                    int floor) {
    TruncatedGroupSeries s = zero(w.alphabet, c.tag(), floor);
    s.insert_term(w, c);
    return s;
}

TruncatedGroupSeries TruncatedGroupSeries::unit(int alphabet, FieldTag tag,
                                                int floor) {
    return monomial(GroupWord::unit(alphabet), scalar_one(tag), floor);
}

TruncatedGroupSeries TruncatedGroupSeries::from_poly(const NcPoly& f,
                                                     int floor) {
    TruncatedGroupSeries s = zero(f.alphabet(), f.tag(), floor);
    for (const auto& [w, c] : f.terms()) s.insert_term(from_monoid(w), c);
    return s;
}

void TruncatedGroupSeries::insert_term(const GroupWord& w,
                                       const FieldScalar& c) {
    if (c.is_zero() || w.degree() <= floor_) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TruncatedGroupSeries::check_compatible(
    const TruncatedGroupSeries& o) const {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("TruncatedGroupSeries: alphabet mismatch");
    if (!(tag_ == o.tag_))
        throw std::invalid_argument("TruncatedGroupSeries: field mismatch");
}

FieldScalar TruncatedGroupSeries::coefficient(const GroupWord& w) const {
    if (w.degree() <= floor_)
        throw std::domain_error(
            "TruncatedGroupSeries: coefficient below the floor is unknown");
    auto it = terms_.find(w);
    return it == terms_.end() ? scalar_zero(tag_) : it->second;
}

namespace {

// Upper bound on the degree of any word a series can contain, visible or
// not: the maximum stored degree when something is visible (the order
// extends degree, so this is deg v), otherwise the floor itself.
int degree_bound_of(const TruncatedGroupSeries& s) {
    if (s.is_empty()) return s.floor();
    int best = s.terms().begin()->first.degree();
    for (const auto& [w, c] : s.terms()) {
        (void)c;
        best = std::max(best, w.degree());
    }
    return best;
}

}  // namespace

TruncatedGroupSeries TruncatedGroupSeries::operator+(
    const TruncatedGroupSeries& o) const {
    check_compatible(o);
    TruncatedGroupSeries r = zero(alphabet_, tag_, std::max(floor_, o.floor_));
    for (const auto& [w, c] : terms_) r.insert_term(w, c);
    for (const auto& [w, c] : o.terms_) r.insert_term(w, c);
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::operator-(
    const TruncatedGroupSeries& o) const {
    return *this + (-o);
}

TruncatedGroupSeries TruncatedGroupSeries::operator-() const {
    TruncatedGroupSeries r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::operator*(
    const TruncatedGroupSeries& o) const {
    check_compatible(o);
    int f = std::max(floor_ + degree_bound_of(o), o.floor_ + degree_bound_of(*this));
    TruncatedGroupSeries r = zero(alphabet_, tag_, f);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            if (wa.degree() + wb.degree() <= f) continue;
            r.insert_term(group_mul(wa, wb), ca * cb);
        }
    }
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::scalar_mul(
    const FieldScalar& c) const {
    TruncatedGroupSeries r = zero(alphabet_, tag_, floor_);
    for (const auto& [w, coeff] : terms_) r.insert_term(w, coeff * c);
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::mul_monomial_left(
    const GroupWord& w, const FieldScalar& c) const {
    TruncatedGroupSeries r = zero(alphabet_, tag_, floor_ + w.degree());
    for (const auto& [wa, ca] : terms_) r.insert_term(group_mul(w, wa), c * ca);
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::mul_monomial_right(
    const GroupWord& w, const FieldScalar& c) const {
    TruncatedGroupSeries r = zero(alphabet_, tag_, floor_ + w.degree());
    for (const auto& [wa, ca] : terms_) r.insert_term(group_mul(wa, w), ca * c);
    return r;
}

TruncatedGroupSeries TruncatedGroupSeries::truncate_to(int floor) const {
    if (floor < floor_)
        throw std::invalid_argument(
            "TruncatedGroupSeries: cannot lower a floor");
    TruncatedGroupSeries r = zero(alphabet_, tag_, floor);
    for (const auto& [w, c] : terms_) r.insert_term(w, c);
    return r;
}

std::pair<GroupWord, FieldScalar> TruncatedGroupSeries::leading(
    const OrderConfig& cfg) const {
    if (terms_.empty())
        throw std::domain_error("TruncatedGroupSeries: no visible terms");
    const GroupWord* best = nullptr;
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (!best || group_less(*best, w, cfg)) best = &w;
    }
    return {*best, terms_.at(*best)};
}

int TruncatedGroupSeries::max_degree() const {
    if (terms_.empty())
        throw std::domain_error("TruncatedGroupSeries: no visible terms");
    return degree_bound_of(*this);
}

bool TruncatedGroupSeries::equal_above(const TruncatedGroupSeries& o,
                                       int floor) const {
    check_compatible(o);
    if (floor < floor_ || floor < o.floor_)
        throw std::domain_error(
            "TruncatedGroupSeries: comparison reaches below a floor");
    for (const auto& [w, c] : terms_)
        if (w.degree() > floor && !(o.coefficient(w) == c)) return false;
    for (const auto& [w, c] : o.terms_)
        if (w.degree() > floor && !(coefficient(w) == c)) return false;
    return true;
}

std::string TruncatedGroupSeries::str(
    const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    OrderConfig cfg;
    std::vector<const Terms::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) order.push_back(&term);
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        return group_less(b->first, a->first, cfg);
    });
    std::string out;
    for (const auto* term : order) {
        const auto& [w, c] = *term;
        bool negative = c.tag().characteristic == 0 && c.rational() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mag = negative ? (-c).str() : c.str();
        if (w.is_unit())
            out += mag;
        else if (mag == "1")
            out += word_str(w, names);
        else
            out += mag + "*" + word_str(w, names);
    }
    return out;
}

TruncatedGroupSeries invert(const TruncatedGroupSeries& a,
                            const OrderConfig& cfg) {
    if (a.is_empty())
        throw std::domain_error("invert: no visible terms");
    auto [u, c] = a.leading(cfg);
    const int du = u.degree();
    auto lead = TruncatedGroupSeries::monomial(u, c, a.floor());
    auto tail = a - lead;
    // T = (c u)^-1 (a - c u); every word of T is strictly below the unit.
    auto T = tail.mul_monomial_left(group_inv(u), c.inv());

    if (T.is_empty())
        return TruncatedGroupSeries::monomial(group_inv(u), c.inv(),
                                              a.floor() - 2 * du);

    for (const auto& [w, coeff] : T.terms()) {
        (void)coeff;
        // A degree-0 tail word makes (1+T)^-1 have infinite support at
        // degree 0, so nothing survives above the inverse's own lead.
        if (w.degree() == 0)
            return TruncatedGroupSeries::zero(a.alphabet(), a.tag(), -du);
    }

    const int f = T.floor();
    auto geo = TruncatedGroupSeries::unit(a.alphabet(), a.tag(), f);
    auto power = geo;
    auto neg_t = -T;
    while (true) {
        power = power * neg_t;
        if (power.is_empty() || power.max_degree() <= f) break;
        geo = geo + power;
    }
    return geo.mul_monomial_right(group_inv(u), c.inv());
}

TruncatedGroupSeries conjugate(const TruncatedGroupSeries& a,
                               const TruncatedGroupSeries& t,
                               const OrderConfig& cfg) {
    return t * a * invert(t, cfg);
}

GroupWord ratio(const GroupWord& t, const GroupWord& u,
                const OrderConfig& cfg) {
    GroupWord right = group_mul(t, group_inv(u));
    GroupWord left = group_mul(group_inv(u), t);
    return group_less(right, left, cfg) ? left : right;
}

TruncatedGroupSeries substitute_series(
    const NcPoly& P, const std::vector<TruncatedGroupSeries>& images) {
    if (static_cast<int>(images.size()) != P.alphabet())
        throw std::invalid_argument(
            "substitute_series: one image per letter required");
    if (images.empty())
        throw std::invalid_argument("substitute_series: empty alphabet");
    int min_floor = images.front().floor();
    for (const auto& img : images) {
        if (img.alphabet() != images.front().alphabet() ||
            !(img.tag() == images.front().tag()))
            throw std::invalid_argument("substitute_series: image mismatch");
        min_floor = std::min(min_floor, img.floor());
    }
    const int alphabet = images.front().alphabet();
    const FieldTag tag = images.front().tag();
    if (!(tag == P.tag()))
        throw std::invalid_argument("substitute_series: field mismatch");

    auto r = TruncatedGroupSeries::zero(alphabet, tag, min_floor);
    bool first = true;
    for (const auto& [w, c] : P.terms()) {
        TruncatedGroupSeries prod =
            TruncatedGroupSeries::unit(alphabet, tag, min_floor);
        for (size_t i = 0; i < w.letters.size(); ++i) {
            const auto& img = images[static_cast<size_t>(w.letters[i])];
            prod = i == 0 ? img : prod * img;
        }
        prod = prod.scalar_mul(c);
        r = first ? prod : r + prod;
        first = false;
    }
    return r;
}

ConjugationState conjugation_initial(const TruncatedGroupSeries& a,
                                     const OrderConfig& cfg) {
    if (a.is_empty())
        throw std::domain_error("conjugation_initial: no visible terms");
    auto [u, c] = a.leading(cfg);
    ConjugationState st;
    st.b = TruncatedGroupSeries::monomial(u, c, a.floor());
    st.e = TruncatedGroupSeries::unit(a.alphabet(), a.tag(),
                                      a.floor() - u.degree());
    st.residual = st.e * a - st.b * st.e;
    if (!st.residual.is_empty()) st.residual_lead = st.residual.leading(cfg);
    return st;
}

ConjugationState conjugation_step(const ConjugationState& state,
                                  const TruncatedGroupSeries& a,
                                  const OrderConfig& cfg,
                                  ConjugationTraceStep* trace) {
    if (!state.residual_lead)
        throw std::logic_error("conjugation_step: already finished");
    const auto& [t, alpha] = *state.residual_lead;
    auto [u, cu] = a.leading(cfg);

    ConjugationState next;
    next.b = state.b;
    next.e = state.e;
    next.step_count = state.step_count + 1;

    GroupWord applied = t;
    FieldScalar applied_coeff = alpha;
    StepKind kind;

    if (group_mul(t, u) == group_mul(u, t)) {
        kind = StepKind::absorb;
        next.b = state.b +
                 TruncatedGroupSeries::monomial(t, alpha, state.b.floor());
    } else {
        GroupWord right = group_mul(t, group_inv(u));
        GroupWord left = group_mul(group_inv(u), t);
        // The smaller quotient is the correction word; the sign makes the
        // residual's leading term cancel.
        if (group_less(left, right, cfg)) {
            kind = StepKind::correct_left;
            applied = left;
            applied_coeff = alpha / cu;
        } else {
            kind = StepKind::correct_right;
            applied = right;
            applied_coeff = -(alpha / cu);
        }
        next.e = state.e + TruncatedGroupSeries::monomial(applied, applied_coeff,
                                                          state.e.floor());
    }

    next.residual = next.e * a - next.b * next.e;
    if (!next.residual.is_empty()) {
        next.residual_lead = next.residual.leading(cfg);
        if (!group_less(next.residual_lead->first, t, cfg))
            throw std::logic_error(
                "conjugation_step: residual leading word failed to decrease");
    }

    if (trace) {
        trace->index = next.step_count;
        trace->kind = kind;
        trace->residual_word = t;
        trace->residual_coeff = alpha;
        trace->applied_word = applied;
        trace->applied_coeff = applied_coeff;
        trace->residual_floor = next.residual.floor();
    }
    return next;
}

namespace {

bool conjugator_eats_inverse(const TruncatedGroupSeries& e) {
    for (const auto& [w, c] : e.terms()) {
        (void)c;
        if (w.degree() == 0 && !w.is_unit()) return true;
    }
    return false;
}

}  // namespace

CentralizeResult centralize(const TruncatedGroupSeries& a,
                            const OrderConfig& cfg, int step_budget) {
    if (a.is_empty())
        throw std::domain_error("centralize: no visible terms");
    if (step_budget < 1)
        throw std::invalid_argument("centralize: budget must be positive");

    ConjugationState st = conjugation_initial(a, cfg);
    CentralizeResult result;
    while (true) {
        if (!st.residual_lead) {
            result.status = CentralizeStatus::complete;
            result.valid_floor = st.residual.floor();
            break;
        }
        if (conjugator_eats_inverse(st.e)) {
            // e's inverse has no visible terms above degree 0, so the true
            // residual e*a*e^-1 - b vanishes above the tracked residual's
            // leading degree; the iteration would otherwise slide forever
            // at that degree.
            result.status = CentralizeStatus::complete;
            result.valid_floor = st.residual.max_degree();
            break;
        }
        if (st.step_count >= step_budget) {
            result.status = CentralizeStatus::truncated;
            result.valid_floor = std::max(
                st.residual.floor(), st.e.floor() + st.residual.max_degree());
            result.residual_lead = st.residual_lead;
            break;
        }
        ConjugationTraceStep ts;
        st = conjugation_step(st, a, cfg, &ts);
        result.trace.push_back(ts);
    }
    result.b = st.b;
    result.e = st.e;
    result.steps = st.step_count;
    return result;
}

}  // namespace ncdeg
