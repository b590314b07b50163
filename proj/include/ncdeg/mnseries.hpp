#pragma once

#include "ncdeg/freealg.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ncdeg {

struct GroupWordStorageLess {
    bool operator()(const GroupWord& a, const GroupWord& b) const {
        return a.syllables < b.syllables;
    }
};

// A truncated series over the ordered free group.  Coefficients of every
// group word of degree strictly above `floor` are represented exactly;
// anything at or below the floor is unknown.  Arithmetic propagates floors
// pessimistically, so precision loss is always visible, never silent.
class TruncatedGroupSeries {
public:
    using Terms = std::map<GroupWord, FieldScalar, GroupWordStorageLess>;

    static TruncatedGroupSeries zero(int alphabet, FieldTag tag, int floor);
    static TruncatedGroupSeries monomial(GroupWord w, FieldScalar c, int floor);
    static TruncatedGroupSeries unit(int alphabet, FieldTag tag, int floor);
    static TruncatedGroupSeries from_poly(const NcPoly& f, int floor);

    int alphabet() const { return alphabet_; }
    FieldTag tag() const { return tag_; }
    int floor() const { return floor_; }
    // No visible terms; the series may still be nonzero below the floor.
    bool is_empty() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // Exact for words above the floor; throws std::domain_error for words
    // at or below it (those coefficients are unknown).
    FieldScalar coefficient(const GroupWord& w) const;

    TruncatedGroupSeries operator+(const TruncatedGroupSeries& o) const;
    TruncatedGroupSeries operator-(const TruncatedGroupSeries& o) const;
    TruncatedGroupSeries operator*(const TruncatedGroupSeries& o) const;
    TruncatedGroupSeries operator-() const;
    TruncatedGroupSeries scalar_mul(const FieldScalar& c) const;

    // Exact one-sided products by a single term; the floor shifts by the
    // term's degree instead of paying the general product penalty.
    TruncatedGroupSeries mul_monomial_left(const GroupWord& w,
                                           const FieldScalar& c) const;
    TruncatedGroupSeries mul_monomial_right(const GroupWord& w,
                                            const FieldScalar& c) const;

    // Raises the floor, discarding newly hidden terms.  Throws
    // std::invalid_argument on an attempt to lower it.
    TruncatedGroupSeries truncate_to(int floor) const;

    // Greatest visible word and its coefficient.
    // Throws std::domain_error when nothing is visible.
    std::pair<GroupWord, FieldScalar> leading(const OrderConfig& cfg = {}) const;
    // Degree of the greatest visible word (the order extends degree, so
    // this is also the maximum stored degree).  Throws when empty.
    int max_degree() const;

    bool equal_above(const TruncatedGroupSeries& o, int floor) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void insert_term(const GroupWord& w, const FieldScalar& c);
    void check_compatible(const TruncatedGroupSeries& o) const;

    int alphabet_ = 0;
    FieldTag tag_{};
    int floor_ = 0;
    Terms terms_;
};

// Series inverse around the leading term, by geometric expansion.  When the
// tail contains a degree-0 word the inverse has infinite support at the
// degree of its own leading word, and the honest truncation is an empty
// series whose floor sits exactly there.  Throws std::domain_error when
// nothing is visible.
TruncatedGroupSeries invert(const TruncatedGroupSeries& a,
                            const OrderConfig& cfg = {});

// t * a * t^-1.
TruncatedGroupSeries conjugate(const TruncatedGroupSeries& a,
                               const TruncatedGroupSeries& t,
                               const OrderConfig& cfg = {});

// The larger of t*u^-1 and u^-1*t under the group order.
GroupWord ratio(const GroupWord& t, const GroupWord& u,
                const OrderConfig& cfg = {});

// Image of a polynomial under x_i -> images[i], with series arithmetic.
TruncatedGroupSeries substitute_series(
    const NcPoly& P, const std::vector<TruncatedGroupSeries>& images);

enum class StepKind { absorb, correct_left, correct_right };

struct ConjugationTraceStep {
    int index = 0;
    StepKind kind = StepKind::absorb;
    GroupWord residual_word;
    FieldScalar residual_coeff;
    GroupWord applied_word;
    FieldScalar applied_coeff;
    int residual_floor = 0;
};

// One state of the centralizing iteration for a fixed input a: the
// centralizer-supported part b, the accumulating conjugator e (leading term
// always the unit with coefficient 1), the tracked residual e*a - b*e, and
// its leading term (absent exactly when the residual has no visible terms).
struct ConjugationState {
    TruncatedGroupSeries b;
    TruncatedGroupSeries e;
    TruncatedGroupSeries residual;
    std::optional<std::pair<GroupWord, FieldScalar>> residual_lead;
    int step_count = 0;
};

ConjugationState conjugation_initial(const TruncatedGroupSeries& a,
                                     const OrderConfig& cfg = {});

// Applies one case of the iteration: absorb a commuting residual lead into
// b, or correct e by a quotient term chosen so the recomputed residual's
// leading word strictly decreases (asserted; std::logic_error otherwise).
// Throws std::logic_error when called on a finished state.
ConjugationState conjugation_step(const ConjugationState& state,
                                  const TruncatedGroupSeries& a,
                                  const OrderConfig& cfg = {},
                                  ConjugationTraceStep* trace = nullptr);

enum class CentralizeStatus { complete, truncated };

struct CentralizeResult {
    TruncatedGroupSeries b;
    TruncatedGroupSeries e;
    CentralizeStatus status = CentralizeStatus::complete;
    int steps = 0;
    // The contract e*a*e^-1 = b + r holds with r zero above this floor.
    int valid_floor = 0;
    // Leading term of the remaining residual, for truncated outcomes.
    std::optional<std::pair<GroupWord, FieldScalar>> residual_lead;
    std::vector<ConjugationTraceStep> trace;
};

// Iterates conjugation_step from (b = c(a)v(a), e = 1) until the residual
// is zero above the floor or the budget runs out.  Truncation is an
// ordinary outcome, not an error.  Throws std::domain_error on an empty
// input and std::invalid_argument on a non-positive budget.
CentralizeResult centralize(const TruncatedGroupSeries& a,
                            const OrderConfig& cfg, int step_budget);

}  // namespace ncdeg
