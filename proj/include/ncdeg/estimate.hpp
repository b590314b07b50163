#pragma once

#include "ncdeg/mnseries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncdeg {

struct HypothesisReport {
    bool f_nonconstant = false;
    bool g_nonconstant = false;
    // [f,g] != 0, which for nonconstant elements of a free algebra is
    // algebraic independence.
    bool independent = false;
    // v(f) and v(g) commute as words.
    bool leading_dependent = false;
    std::optional<int> m;
    std::optional<int> n;
    // Neither degree divides the other.
    bool divisibility_ok = false;
    bool all_satisfied = false;
};

HypothesisReport check_hypotheses(const NcPoly& f, const NcPoly& g,
                                  const OrderConfig& cfg = {});

// w_{deg f, deg g}(P) * deg([f,g]) / (deg f + deg g), exact.
// Throws std::invalid_argument on constant inputs or commuting f, g.
BigRat degree_bound(const NcPoly& P, const NcPoly& f, const NcPoly& g);

struct EstimateReport {
    HypothesisReport hypothesis;
    std::optional<int> lhs_degree;
    std::optional<long long> weighted_N;
    std::optional<int> commutator_degree;
    std::optional<BigRat> bound;
    std::optional<BigRat> slack;
    std::optional<bool> holds;
    // Set when v(f), v(g) do not commute and lhs = weighted_N was verified.
    bool independent_leading_exact_checked = false;
};

// Direct verification by exact polynomial arithmetic: expands P(f,g) and
// compares its degree against the bound.  Throws std::invalid_argument on
// constant P.  Fields stay empty when the quantities they depend on are
// undefined (zero commutator, constant inputs).
EstimateReport verify_instance(const NcPoly& P, const NcPoly& f,
                               const NcPoly& g, const OrderConfig& cfg = {});

// Strips leading terms that are powers of h until the lead leaves h's
// centralizer.  Works on polynomials (monoid powers) and on truncated
// series (integer powers of h in the group).
struct PolyPeel {
    std::map<int, FieldScalar> coefficients;
    NcPoly remainder;
    int steps_used = 0;
    bool budget_exhausted = false;
};

PolyPeel peel_decomposition(const NcPoly& g, const MonoidWord& h,
                            const OrderConfig& cfg, int max_steps);

struct SeriesPeel {
    std::map<int, FieldScalar> coefficients;
    TruncatedGroupSeries remainder;
    int steps_used = 0;
    bool budget_exhausted = false;
};

SeriesPeel peel_decomposition(const TruncatedGroupSeries& g,
                              const MonoidWord& h, const OrderConfig& cfg,
                              int max_steps);

// Q(t,s) = P_bar(t^m, t^n + s), expanded exactly over the two-letter
// alphabet {t, s}.  The brute-force oracle for the witness construction.
NcPoly expand_Q(const NcPoly& P_bar, int m, int n);

struct WitnessTrace {
    MonoidWord z;
    std::vector<int> alphas;
    std::vector<int> betas;
    int I = 0;
    int J = 0;
    long long N = 0;
    int q = 0;
    MonoidWord u;
    FieldScalar u_coefficient;
    bool special_case = false;
    int deg_t_u = 0;
    int deg_s_u = 0;
    int m = 0;
    int n = 0;
};

// Constructs a monomial u of Q(t,s) = P_bar(t^m, t^n + s) with nonzero
// coefficient and deg_s(u) <= floor(N / (m+n)), then checks it against the
// expand_Q oracle (std::logic_error on mismatch, which would mean a bug,
// not a valid outcome).  Requires P_bar nonzero and homogeneous for the
// weights (m,n), m < n, and m not dividing n.  The source monomial is
// selected by maximal y-degree, ties broken lexicographically with x
// ranked above y.
WitnessTrace witness_monomial(const NcPoly& P_bar, int m, int n);

enum class PipelineStatus { complete, truncation_insufficient, hypotheses_failed };

struct PipelineBudgets {
    int centralize_steps = 50;
    int peel_steps = 64;
};

struct PipelineTrace {
    HypothesisReport hypothesis;
    EstimateReport report;
    PipelineStatus status = PipelineStatus::complete;
    std::string detail;

    bool swapped = false;
    std::optional<int> m, n;
    std::optional<MonoidWord> h;
    std::optional<int> root_degree;      // deg h
    std::optional<int> q_exp, p_exp;     // v(f) = h^q, v(g) = h^p
    std::optional<int> commutator_degree;
    std::optional<long long> N;
    std::optional<BigRat> bound;
    std::optional<NcPoly> P_bar;
    std::optional<CentralizeResult> centralized;
    std::optional<SeriesPeel> peel;
    int peel_step_bound = 0;             // deg(fg) - deg([f,g])
    std::optional<int> s_lead_degree;
    std::optional<int> leading_image_degree;  // deg v(P_bar(f~', g~'))
    std::optional<long long> witness_degree;  // deg of u's image in the group
    std::optional<WitnessTrace> witness;
    std::optional<int> lhs;
};

// Replays the degree-estimate argument end to end on one instance:
// centralize f, conjugate g, peel off the powers of h, take leading parts,
// build the witness monomial, and report the inequality chain
// lhs >= leading-image degree >= witness degree >= bound next to the
// directly computed lhs.  Truncation shortfalls surface as the
// truncation_insufficient status with a human-readable detail.
PipelineTrace pipeline_trace(const NcPoly& P, const NcPoly& f, const NcPoly& g,
                             const OrderConfig& cfg = {}, int floor = -10,
                             PipelineBudgets budgets = {});

struct InstanceConfig {
    int alphabet = 2;
    FieldTag field;
    int root_length_max = 2;
    int exponent_max = 5;
    int tail_terms = 2;
    int P_support_max = 4;
    long long weight_budget = 18;
    int retry_budget = 200;
};

struct Instance {
    NcPoly P;
    NcPoly f;
    NcPoly g;
};

// Deterministic in (config, seed): f and g are built on a shared primitive
// root with mutually non-dividing degrees plus lower-degree tails, P with
// bounded weighted degree, resampled until every hypothesis holds.
// Throws std::runtime_error when the retry budget runs out.
Instance random_instance(const InstanceConfig& config, std::uint64_t seed);

}  // namespace ncdeg
