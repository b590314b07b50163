#include "ncdeg/estimate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ncdeg {

HypothesisReport check_hypotheses(const NcPoly& f, const NcPoly& g,
                                  const OrderConfig& cfg) {
    HypothesisReport r;
    auto df = f.degree();
    auto dg = g.degree();
    r.f_nonconstant = df && *df >= 1;
    r.g_nonconstant = dg && *dg >= 1;
    if (r.f_nonconstant) r.m = *df;
    if (r.g_nonconstant) r.n = *dg;
    if (r.f_nonconstant && r.g_nonconstant) {
        r.independent = !commutator(f, g).is_zero();
        r.leading_dependent =
            commutes(f.leading(cfg).first, g.leading(cfg).first);
        r.divisibility_ok = (*df % *dg != 0) && (*dg % *df != 0);
    }
    r.all_satisfied = r.f_nonconstant && r.g_nonconstant && r.independent &&
                      r.leading_dependent && r.divisibility_ok;
    return r;
}

BigRat degree_bound(const NcPoly& P, const NcPoly& f, const NcPoly& g) {
    auto nonconstant = [](const NcPoly& p) {
        auto d = p.degree();
        return d && *d >= 1;
    };
    if (!nonconstant(P) || !nonconstant(f) || !nonconstant(g))
        throw std::invalid_argument("degree_bound: inputs must be nonconstant");
    auto comm = commutator(f, g);
    if (comm.is_zero())
        throw std::invalid_argument("degree_bound: f and g commute");
    long long m = *f.degree();
    long long n = *g.degree();
    long long N = *P.weighted_degree({m, n});
    return BigRat(BigInt(N) * BigInt(*comm.degree()), BigInt(m + n));
}

EstimateReport verify_instance(const NcPoly& P, const NcPoly& f,
                               const NcPoly& g, const OrderConfig& cfg) {
    auto dP = P.degree();
    if (!dP || *dP < 1)
        throw std::invalid_argument("verify_instance: P must be nonconstant");

    EstimateReport rep;
    rep.hypothesis = check_hypotheses(f, g, cfg);

    auto image = substitute(P, {f, g});
    if (auto d = image.degree()) rep.lhs_degree = *d;

    if (!rep.hypothesis.f_nonconstant || !rep.hypothesis.g_nonconstant)
        return rep;
    long long m = *f.degree();
    long long n = *g.degree();
    rep.weighted_N = *P.weighted_degree({m, n});

    auto comm = commutator(f, g);
    if (!comm.is_zero()) {
        rep.commutator_degree = *comm.degree();
        rep.bound = BigRat(BigInt(*rep.weighted_N) * BigInt(*rep.commutator_degree),
                           BigInt(m + n));
        if (rep.lhs_degree) {
            rep.slack = BigRat(*rep.lhs_degree) - *rep.bound;
            rep.holds = *rep.slack >= 0;
        } else {
            rep.holds = false;
        }
    }

    if (!rep.hypothesis.leading_dependent) {
        // Non-commuting leading words generate a free monoid, so the top
        // terms of distinct monomial images never collide: the degree is
        // exactly the weighted degree.
        if (!rep.lhs_degree || *rep.lhs_degree != *rep.weighted_N)
            throw std::logic_error(
                "verify_instance: independent leading words must give "
                "degree equal to the weighted degree");
        rep.independent_leading_exact_checked = true;
    }
    return rep;
}

namespace {

void check_peel_root(const MonoidWord& h) {
    if (h.is_unit() || primitive_root(h).exponent != 1)
        throw std::invalid_argument("peel_decomposition: root must be primitive");
}

}  // namespace

PolyPeel peel_decomposition(const NcPoly& g, const MonoidWord& h,
                            const OrderConfig& cfg, int max_steps) {
    if (g.is_zero())
        throw std::invalid_argument("peel_decomposition: zero input");
    check_peel_root(h);
    if (max_steps < 0)
        throw std::invalid_argument("peel_decomposition: negative budget");

    PolyPeel r;
    r.remainder = g;
    while (!r.remainder.is_zero()) {
        auto [v, c] = r.remainder.leading(cfg);
        if (!commutes(v, h)) break;
        if (r.steps_used >= max_steps) {
            r.budget_exhausted = true;
            break;
        }
        int j = v.degree() / h.degree();
        r.coefficients[j] = c;
        r.remainder = r.remainder - NcPoly::monomial(v, c);
        ++r.steps_used;
    }
    return r;
}

SeriesPeel peel_decomposition(const TruncatedGroupSeries& g,
                              const MonoidWord& h, const OrderConfig& cfg,
                              int max_steps) {
    check_peel_root(h);
    if (max_steps < 0)
        throw std::invalid_argument("peel_decomposition: negative budget");
    const GroupWord hg = from_monoid(h);

    SeriesPeel r;
    r.remainder = g;
    while (!r.remainder.is_empty()) {
        auto [v, c] = r.remainder.leading(cfg);
        if (!(group_mul(v, hg) == group_mul(hg, v))) break;
        if (r.steps_used >= max_steps) {
            r.budget_exhausted = true;
            break;
        }
        int j = v.degree() / hg.degree();
        if (!(group_pow(hg, j) == v))
            throw std::logic_error(
                "peel_decomposition: commuting lead is not a power of the root");
        r.coefficients[j] = c;
        r.remainder =
            r.remainder - TruncatedGroupSeries::monomial(v, c, r.remainder.floor());
        ++r.steps_used;
    }
    return r;
}

NcPoly expand_Q(const NcPoly& P_bar, int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("expand_Q: weights must be positive");
    const FieldTag tag = P_bar.tag();
    auto tm = NcPoly::monomial(
        MonoidWord{2, std::vector<int>(static_cast<size_t>(m), 0)},
        scalar_one(tag));
    auto tn = NcPoly::monomial(
        MonoidWord{2, std::vector<int>(static_cast<size_t>(n), 0)},
        scalar_one(tag));
    return substitute(P_bar, {tm, tn + NcPoly::variable(2, tag, 1)});
}

WitnessTrace witness_monomial(const NcPoly& P_bar, int m, int n) {
    if (P_bar.is_zero())
        throw std::invalid_argument("witness_monomial: zero input");
    if (P_bar.alphabet() != 2)
        throw std::invalid_argument("witness_monomial: two-letter input required");
    if (m < 1 || n <= m)
        throw std::invalid_argument("witness_monomial: requires n > m >= 1");
    if (n % m == 0)
        throw std::invalid_argument(
            "witness_monomial: requires that m does not divide n");

    WitnessTrace tr;
    tr.m = m;
    tr.n = n;
    const std::vector<long long> weights{m, n};
    tr.N = *P_bar.weighted_degree(weights);
    for (const auto& [w, c] : P_bar.terms()) {
        (void)c;
        long long weight = 0;
        for (int letter : w.letters) weight += weights[static_cast<size_t>(letter)];
        if (weight != tr.N)
            throw std::invalid_argument(
                "witness_monomial: input is not homogeneous for these weights");
    }

    // Pick z with maximal y-degree, then lexicographically maximal for
    // x above y (all candidates share a length, so deglex is plain lex).
    const MonoidWord* z = nullptr;
    int best_y = -1;
    for (const auto& [w, c] : P_bar.terms()) {
        (void)c;
        int dy = w.partial_degree(1);
        if (dy > best_y ||
            (dy == best_y &&
             deglex_compare(w, *z, {}) == std::strong_ordering::greater)) {
            z = &w;
            best_y = dy;
        }
    }
    tr.z = *z;

    size_t i = 0;
    const auto& zl = z->letters;
    while (i < zl.size()) {
        int alpha = 0;
        while (i < zl.size() && zl[i] == 0) ++alpha, ++i;
        int beta = 0;
        while (i < zl.size() && zl[i] == 1) ++beta, ++i;
        tr.alphas.push_back(alpha);
        tr.betas.push_back(beta);
    }
    for (int a : tr.alphas) tr.I += a;
    for (int b : tr.betas) tr.J += b;

    tr.q = static_cast<int>(tr.N / (m + n));
    int s_degree = 0;
    for (int b : tr.betas) s_degree += (b + 1) / 2;
    if (s_degree > tr.q) {
        if (s_degree != tr.q + 1 || tr.alphas.empty() || tr.alphas[0] != 0 ||
            tr.betas[0] % 2 == 0)
            throw std::logic_error(
                "witness_monomial: s-degree overshoot outside the provable shape");
        tr.special_case = true;
    }

    std::vector<int> letters;
    auto append_t = [&letters](int count) {
        letters.insert(letters.end(), static_cast<size_t>(count), 0);
    };
    for (size_t block = 0; block < tr.alphas.size(); ++block) {
        append_t(m * tr.alphas[block]);
        int beta = tr.betas[block];
        int sigma = beta / 2;
        if (tr.special_case && block == 0) {
            // (t^n s)^sigma t^n in place of the odd first y-run.
            for (int k = 0; k < sigma; ++k) {
                append_t(n);
                letters.push_back(1);
            }
            append_t(n);
        } else {
            for (int k = 0; k < sigma; ++k) {
                letters.push_back(1);
                append_t(n);
            }
            if (beta % 2 == 1) letters.push_back(1);
        }
    }
    tr.u = MonoidWord{2, std::move(letters)};
    tr.deg_t_u = tr.u.partial_degree(0);
    tr.deg_s_u = tr.u.partial_degree(1);

    auto oracle = expand_Q(P_bar, m, n);
    tr.u_coefficient = oracle.coefficient(tr.u);
    if (tr.u_coefficient.is_zero() ||
        !(tr.u_coefficient == P_bar.coefficient(tr.z)))
        throw std::logic_error("witness_monomial: oracle coefficient mismatch");
    if (tr.N != tr.deg_t_u + static_cast<long long>(n) * tr.deg_s_u)
        throw std::logic_error("witness_monomial: weight identity failed");
    if (tr.deg_s_u > tr.q)
        throw std::logic_error("witness_monomial: s-degree exceeds its cap");
    return tr;
}

namespace {

bool has_degree_zero_tail(const TruncatedGroupSeries& e) {
    for (const auto& [w, c] : e.terms()) {
        (void)c;
        if (w.degree() == 0 && !w.is_unit()) return true;
    }
    return false;
}

PipelineTrace& insufficient(PipelineTrace& tr, const std::string& why) {
    tr.status = PipelineStatus::truncation_insufficient;
    tr.detail = why;
    return tr;
}

}  // namespace

PipelineTrace pipeline_trace(const NcPoly& P, const NcPoly& f, const NcPoly& g,
                             const OrderConfig& cfg, int floor,
                             PipelineBudgets budgets) {
    PipelineTrace tr;
    tr.hypothesis = check_hypotheses(f, g, cfg);
    tr.report = verify_instance(P, f, g, cfg);
    if (!tr.hypothesis.all_satisfied) {
        tr.status = PipelineStatus::hypotheses_failed;
        tr.detail = "hypotheses not satisfied";
        return tr;
    }

    NcPoly Pw = P;
    NcPoly fw = f;
    NcPoly gw = g;
    if (*f.degree() > *g.degree()) {
        tr.swapped = true;
        std::swap(fw, gw);
        Pw = substitute(P, {NcPoly::variable(2, P.tag(), 1),
                            NcPoly::variable(2, P.tag(), 0)});
    }
    const int m = *fw.degree();
    const int n = *gw.degree();
    tr.m = m;
    tr.n = n;

    auto [vf, cf] = fw.leading(cfg);
    auto [vg, cg] = gw.leading(cfg);
    auto root = primitive_root(vf);
    const MonoidWord h = root.root;
    const int d = h.degree();
    tr.h = h;
    tr.root_degree = d;
    tr.q_exp = root.exponent;
    tr.p_exp = n / d;

    auto comm = commutator(fw, gw);
    const int D = *comm.degree();
    tr.commutator_degree = D;
    const long long N = *Pw.weighted_degree({m, n});
    tr.N = N;
    tr.bound = BigRat(BigInt(N) * BigInt(D), BigInt(m + n));
    tr.peel_step_bound = m + n - D;
    tr.P_bar = Pw.leading_part({m, n});
    tr.lhs = tr.report.lhs_degree;

    auto fS = TruncatedGroupSeries::from_poly(fw, floor);
    auto gS = TruncatedGroupSeries::from_poly(gw, floor);
    tr.centralized = centralize(fS, cfg, budgets.centralize_steps);
    if (tr.centralized->status != CentralizeStatus::complete)
        return insufficient(tr, "centralizing f exhausted its step budget");
    if (has_degree_zero_tail(tr.centralized->e))
        return insufficient(tr,
                            "the conjugator's inverse has no visible terms");

    auto gprime = conjugate(gS, tr.centralized->e, cfg);
    if (gprime.is_empty())
        return insufficient(tr, "conjugating g lost all terms to the floor");

    tr.peel = peel_decomposition(gprime, h, cfg, budgets.peel_steps);
    if (tr.peel->budget_exhausted)
        return insufficient(tr, "peeling exhausted its step budget");
    if (tr.peel->remainder.is_empty())
        return insufficient(
            tr, "the non-centralizer tail vanished above the floor");
    tr.s_lead_degree = tr.peel->remainder.leading(cfg).first.degree();
    if (*tr.s_lead_degree != D - m)
        return insufficient(
            tr, "the tail's leading degree was lost to truncation");

    auto ftilde = TruncatedGroupSeries::monomial(from_monoid(vf), cf, floor);
    auto gtilde = TruncatedGroupSeries::monomial(
                      from_monoid(vg), cg, tr.peel->remainder.floor()) +
                  tr.peel->remainder;
    auto image = substitute_series(*tr.P_bar, {ftilde, gtilde});
    if (image.is_empty())
        return insufficient(tr, "the leading image vanished above the floor");
    tr.leading_image_degree = image.max_degree();

    tr.witness = witness_monomial(*tr.P_bar, *tr.q_exp, *tr.p_exp);
    tr.witness_degree = static_cast<long long>(d) * tr.witness->deg_t_u +
                        static_cast<long long>(D - m) * tr.witness->deg_s_u;

    if (*tr.lhs < *tr.leading_image_degree)
        throw std::logic_error("pipeline_trace: direct degree fell below the "
                               "leading-image degree");
    if (*tr.leading_image_degree < *tr.witness_degree)
        throw std::logic_error("pipeline_trace: leading-image degree fell "
                               "below the witness degree");
    if (BigRat(BigInt(*tr.witness_degree)) < *tr.bound)
        throw std::logic_error("pipeline_trace: witness degree fell below the bound");

    tr.status = PipelineStatus::complete;
    return tr;
}

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

FieldScalar nonzero_scalar(std::mt19937_64& rng, FieldTag tag) {
    if (tag.characteristic == 0) {
        int v = pick(rng, 1, 3) * (rng() % 2 == 0 ? 1 : -1);
        return FieldScalar(tag, BigInt(v));
    }
    auto p = tag.characteristic;
    return FieldScalar(tag, BigInt(1 + rng() % (p - 1)));
}

MonoidWord random_word(std::mt19937_64& rng, int alphabet, int length) {
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i)
        letters.push_back(pick(rng, 0, alphabet - 1));
    return MonoidWord{alphabet, std::move(letters)};
}

}  // namespace

Instance random_instance(const InstanceConfig& config, std::uint64_t seed) {
    if (config.alphabet < 2 || config.root_length_max < 1 ||
        config.exponent_max < 3 || config.tail_terms < 0 ||
        config.P_support_max < 1 || config.weight_budget < 1 ||
        config.retry_budget < 1)
        throw std::invalid_argument("random_instance: unusable configuration");

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < config.retry_budget; ++attempt) {
        MonoidWord h = random_word(rng, config.alphabet,
                                   pick(rng, 1, config.root_length_max));
        if (primitive_root(h).exponent != 1) continue;

        int a = pick(rng, 2, config.exponent_max);
        int b = pick(rng, 2, config.exponent_max);
        if (a == b || a % b == 0 || b % a == 0) continue;

        const int m0 = a * h.degree();
        const int n0 = b * h.degree();

        auto build = [&](int exponent, int top_degree) {
            NcPoly p = NcPoly::monomial(monoid_pow(h, exponent),
                                        nonzero_scalar(rng, config.field));
            for (int t = 0; t < config.tail_terms; ++t) {
                auto w = random_word(rng, config.alphabet,
                                     pick(rng, 0, top_degree - 1));
                p = p + NcPoly::monomial(w, nonzero_scalar(rng, config.field));
            }
            return p;
        };
        NcPoly f = build(a, m0);
        NcPoly g = build(b, n0);

        NcPoly P = NcPoly::zero(2, config.field);
        int support = pick(rng, 1, config.P_support_max);
        for (int t = 0; t < support; ++t) {
            std::vector<int> letters;
            long long budget = config.weight_budget;
            while (true) {
                int letter = pick(rng, 0, 1);
                long long w = letter == 0 ? m0 : n0;
                if (w > budget) break;
                letters.push_back(letter);
                budget -= w;
                if (rng() % 3 == 0) break;
            }
            P = P + NcPoly::monomial(MonoidWord{2, std::move(letters)},
                                     nonzero_scalar(rng, config.field));
        }
        auto dP = P.degree();
        if (!dP || *dP < 1) continue;

        auto hyp = check_hypotheses(f, g);
        if (!hyp.all_satisfied) continue;
        if (f.leading().first != monoid_pow(h, a)) continue;
        if (g.leading().first != monoid_pow(h, b)) continue;
        return Instance{std::move(P), std::move(f), std::move(g)};
    }
    throw std::runtime_error("random_instance: retry budget exhausted");
}

}  // namespace ncdeg
