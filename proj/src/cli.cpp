#include "ncdeg/cli.hpp"

#include "ncdeg/estimate.hpp"
#include "ncdeg/parser.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ncdeg {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string field_text = "q";
    int vars = 2;
    std::string order_text;
    int floor = -10;
    int budget_centralize = 50;
    int budget_peel = 64;
    std::uint64_t seed = 1;
    std::string format = "human";
    std::string out_path;

    std::string P_text;
    std::string f_text;
    std::string g_text;
    std::string a_text;
    int m = 0;
    int n = 0;
    int count = 100;
    int n_max = 5;
    int m_max = 5;
    int k_max = 3;
};

FieldTag parse_field(const std::string& text) {
    if (text == "q") return field_rationals();
    if (text.rfind("gf:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (!digits.empty() &&
            digits.find_first_not_of("0123456789") == std::string::npos)
            return field_gf(std::stoull(digits));
    }
    throw std::invalid_argument("bad field '" + text + "': use q or gf:<prime>");
}

std::string field_str(FieldTag tag) {
    if (tag.characteristic == 0) return "q";
    return "gf:" + std::to_string(tag.characteristic);
}

std::string trimmed(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

OrderConfig parse_order(const std::string& text, int alphabet) {
    OrderConfig cfg;
    if (!text.empty()) {
        auto names = default_names(alphabet);
        cfg.rank.assign(names.size(), -1);
        int pos = 0;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            std::string tok = trimmed(
                comma == std::string::npos ? text.substr(start)
                                           : text.substr(start, comma - start));
            auto it = std::find(names.begin(), names.end(), tok);
            if (it == names.end())
                throw std::invalid_argument("--order: unknown variable '" + tok +
                                            "'");
            auto idx = static_cast<std::size_t>(it - names.begin());
            if (cfg.rank[idx] != -1)
                throw std::invalid_argument("--order: variable '" + tok +
                                            "' repeated");
            cfg.rank[idx] = pos++;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    validate_order(cfg, alphabet);
    return cfg;
}

std::string rat_str(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

const char* kind_str(StepKind k) {
    switch (k) {
        case StepKind::absorb: return "absorb";
        case StepKind::correct_left: return "correct_left";
        default: return "correct_right";
    }
}

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
    if (v) return ordered_json(*v);
    return ordered_json(nullptr);
}

ordered_json rat_json(const std::optional<BigRat>& v) {
    if (v) return ordered_json(rat_str(*v));
    return ordered_json(nullptr);
}

ordered_json hyp_json(const HypothesisReport& h) {
    ordered_json j;
    j["f_nonconstant"] = h.f_nonconstant;
    j["g_nonconstant"] = h.g_nonconstant;
    j["independent"] = h.independent;
    j["leading_dependent"] = h.leading_dependent;
    j["divisibility_ok"] = h.divisibility_ok;
    j["all"] = h.all_satisfied;
    return j;
}

void print_hypotheses(std::ostream& s, const HypothesisReport& h) {
    s << "hypotheses:\n"
      << "  f nonconstant          " << yn(h.f_nonconstant) << "\n"
      << "  g nonconstant          " << yn(h.g_nonconstant) << "\n"
      << "  [f,g] nonzero          " << yn(h.independent) << "\n"
      << "  leading words commute  " << yn(h.leading_dependent) << "\n"
      << "  degrees non-dividing   " << yn(h.divisibility_ok) << "\n";
}

ordered_json instance_json(const std::string& f, const std::string& g,
                           const std::string& P, FieldTag tag,
                           const EstimateReport& rep) {
    ordered_json j;
    j["f"] = f;
    j["g"] = g;
    j["P"] = P;
    j["field"] = field_str(tag);
    j["m"] = opt_json(rep.hypothesis.m);
    j["n"] = opt_json(rep.hypothesis.n);
    j["N"] = opt_json(rep.weighted_N);
    j["comm_deg"] = opt_json(rep.commutator_degree);
    j["bound"] = rat_json(rep.bound);
    j["lhs"] = opt_json(rep.lhs_degree);
    j["slack"] = rat_json(rep.slack);
    j["holds"] = opt_json(rep.holds);
    j["hypotheses"] = hyp_json(rep.hypothesis);
    return j;
}

void print_report_human(std::ostream& s, const EstimateReport& rep) {
    print_hypotheses(s, rep.hypothesis);
    if (rep.hypothesis.m && rep.hypothesis.n)
        s << "deg f = " << *rep.hypothesis.m << ", deg g = " << *rep.hypothesis.n
          << "\n";
    if (rep.weighted_N) s << "weighted degree N = " << *rep.weighted_N << "\n";
    if (rep.commutator_degree)
        s << "deg [f,g] = " << *rep.commutator_degree << "\n";
    if (rep.bound) s << "bound = " << rat_str(*rep.bound) << "\n";
    if (rep.lhs_degree)
        s << "deg P(f,g) = " << *rep.lhs_degree << "\n";
    else
        s << "P(f,g) = 0\n";
    if (rep.slack) s << "slack = " << rat_str(*rep.slack) << "\n";
    if (rep.holds)
        s << (*rep.holds ? "estimate holds\n" : "estimate violated\n");
}

int cmd_verify(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto cfg = parse_order(o.order_text, o.vars);
    auto names = default_names(o.vars);
    auto names2 = default_names(2);

    NcPoly P = parse_poly(o.P_text, 2, tag);
    NcPoly f = parse_poly(o.f_text, o.vars, tag);
    NcPoly g = parse_poly(o.g_text, o.vars, tag);
    auto rep = verify_instance(P, f, g, cfg);

    if (o.format == "json") {
        s << instance_json(f.str(names), g.str(names), P.str(names2), tag, rep)
                 .dump(2)
          << "\n";
    } else {
        s << "P = " << P.str(names2) << "\n"
          << "f = " << f.str(names) << "\n"
          << "g = " << g.str(names) << "\n"
          << "field: " << field_str(tag) << "\n";
        print_report_human(s, rep);
    }
    bool ok = rep.hypothesis.all_satisfied && rep.holds && *rep.holds;
    return ok ? 0 : 1;
}

int cmd_centralize(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto cfg = parse_order(o.order_text, o.vars);
    auto names = default_names(o.vars);

    NcPoly a = parse_poly(o.a_text, o.vars, tag);
    auto series = TruncatedGroupSeries::from_poly(a, o.floor);
    auto res = centralize(series, cfg, o.budget_centralize);
    const bool truncated = res.status == CentralizeStatus::truncated;

    if (o.format == "json") {
        ordered_json j;
        j["input"] = a.str(names);
        j["field"] = field_str(tag);
        j["floor"] = o.floor;
        j["budget"] = o.budget_centralize;
        j["status"] = truncated ? "truncated" : "complete";
        j["steps"] = res.steps;
        j["b"] = res.b.str(names);
        j["e"] = res.e.str(names);
        j["valid_floor"] = res.valid_floor;
        if (res.residual_lead) {
            j["residual_lead"] = {
                {"word", word_str(res.residual_lead->first, names)},
                {"coeff", res.residual_lead->second.str()}};
        } else {
            j["residual_lead"] = nullptr;
        }
        ordered_json steps = ordered_json::array();
        for (const auto& st : res.trace) {
            ordered_json e;
            e["step"] = st.index;
            e["kind"] = kind_str(st.kind);
            e["lead_word"] = word_str(st.residual_word, names);
            e["lead_coeff"] = st.residual_coeff.str();
            e["applied_word"] = word_str(st.applied_word, names);
            e["applied_coeff"] = st.applied_coeff.str();
            steps.push_back(std::move(e));
        }
        j["trace"] = std::move(steps);
        s << j.dump(2) << "\n";
    } else {
        s << "centralize " << a.str(names) << "  (field " << field_str(tag)
          << ", floor " << o.floor << ", budget " << o.budget_centralize
          << ")\n";
        for (const auto& st : res.trace) {
            s << "step " << st.index << ": " << kind_str(st.kind) << ": lead "
              << word_str(st.residual_word, names) << " ("
              << st.residual_coeff.str() << ")";
            if (st.kind == StepKind::absorb)
                s << " moved into b";
            else
                s << ", applied " << word_str(st.applied_word, names) << " ("
                  << st.applied_coeff.str() << ")";
            s << "\n";
        }
        s << "status: " << (truncated ? "truncated" : "complete") << "\n"
          << "steps: " << res.steps << "\n"
          << "b = " << res.b.str(names) << "\n"
          << "e = " << res.e.str(names) << "\n"
          << "valid floor: " << res.valid_floor << "\n";
        if (res.residual_lead)
            s << "residual lead: " << word_str(res.residual_lead->first, names)
              << " (" << res.residual_lead->second.str() << ")\n";
    }
    return 0;
}

const std::vector<std::string>& witness_names() {
    static const std::vector<std::string> names{"t", "s"};
    return names;
}

ordered_json witness_json(const WitnessTrace& tr,
                          const std::vector<std::string>& names2) {
    ordered_json j;
    j["m"] = tr.m;
    j["n"] = tr.n;
    j["N"] = tr.N;
    j["q"] = tr.q;
    j["z"] = word_str(tr.z, names2);
    j["alphas"] = tr.alphas;
    j["betas"] = tr.betas;
    j["u"] = word_str(tr.u, witness_names());
    j["deg_t"] = tr.deg_t_u;
    j["deg_s"] = tr.deg_s_u;
    j["coefficient"] = tr.u_coefficient.str();
    j["special_case"] = tr.special_case;
    return j;
}

int cmd_witness(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto names2 = default_names(2);

    NcPoly P = parse_poly(o.P_text, 2, tag);
    auto tr = witness_monomial(P, o.m, o.n);

    if (o.format == "json") {
        ordered_json j;
        j["P"] = P.str(names2);
        j["field"] = field_str(tag);
        auto body = witness_json(tr, names2);
        j.update(body);
        s << j.dump(2) << "\n";
    } else {
        s << "P = " << P.str(names2) << "  (weights " << tr.m << "," << tr.n
          << ")\n"
          << "N = " << tr.N << ", q = " << tr.q << "\n"
          << "z = " << word_str(tr.z, names2) << "\n";
        s << "x-runs:";
        for (int a : tr.alphas) s << " " << a;
        s << "   y-runs:";
        for (int b : tr.betas) s << " " << b;
        s << "\n"
          << "u = " << word_str(tr.u, witness_names()) << "   (deg_t "
          << tr.deg_t_u << ", deg_s " << tr.deg_s_u << ")\n"
          << "coefficient of u in Q(t,s): " << tr.u_coefficient.str() << "\n"
          << "special case: " << yn(tr.special_case) << "\n";
    }
    return 0;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

template <typename T>
std::string csv_opt(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, bool>)
        return *v ? "true" : "false";
    else
        return std::to_string(*v);
}

int cmd_campaign(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto cfg = parse_order(o.order_text, 2);
    auto names = default_names(2);

    InstanceConfig icfg;
    icfg.field = tag;

    if (o.format == "csv")
        s << "f,g,P,field,m,n,N,comm_deg,bound,lhs,slack,holds\n";

    int failures = 0;
    std::optional<BigRat> min_slack;
    for (int i = 0; i < o.count; ++i) {
        auto inst = random_instance(icfg, o.seed + static_cast<std::uint64_t>(i));
        auto rep = verify_instance(inst.P, inst.f, inst.g, cfg);
        bool ok = rep.hypothesis.all_satisfied && rep.holds && *rep.holds;
        if (!ok) ++failures;
        if (rep.slack && (!min_slack || *rep.slack < *min_slack))
            min_slack = rep.slack;

        auto fs = inst.f.str(names);
        auto gs = inst.g.str(names);
        auto Ps = inst.P.str(names);
        if (o.format == "json") {
            s << instance_json(fs, gs, Ps, tag, rep).dump() << "\n";
        } else if (o.format == "csv") {
            s << csv_quote(fs) << "," << csv_quote(gs) << "," << csv_quote(Ps)
              << "," << field_str(tag) << "," << csv_opt(rep.hypothesis.m)
              << "," << csv_opt(rep.hypothesis.n) << ","
              << csv_opt(rep.weighted_N) << "," << csv_opt(rep.commutator_degree)
              << "," << (rep.bound ? rat_str(*rep.bound) : "") << ","
              << csv_opt(rep.lhs_degree) << ","
              << (rep.slack ? rat_str(*rep.slack) : "") << ","
              << csv_opt(rep.holds) << "\n";
        } else {
            s << "instance " << i << ": deg P(f,g) = ";
            if (rep.lhs_degree)
                s << *rep.lhs_degree;
            else
                s << "-";
            s << ", bound = " << (rep.bound ? rat_str(*rep.bound) : "-")
              << ", slack = " << (rep.slack ? rat_str(*rep.slack) : "-") << ", "
              << (ok ? "holds" : "VIOLATED") << "\n";
        }
    }
    if (o.format == "human") {
        s << "campaign: " << (o.count - failures) << "/" << o.count << " hold";
        if (min_slack) s << ", min slack " << rat_str(*min_slack);
        s << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_sharpness(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto cfg = parse_order(o.order_text, 2);

    NcPoly X = NcPoly::variable(2, tag, 0);
    NcPoly Y = NcPoly::variable(2, tag, 1);

    if (o.format == "csv")
        s << "n,m,k,field,N,comm_deg,bound,lhs,slack,sharp\n";
    else if (o.format == "human")
        s << std::setw(3) << "n" << std::setw(4) << "m" << std::setw(4) << "k"
          << std::setw(6) << "N" << std::setw(4) << "D" << std::setw(8)
          << "bound" << std::setw(6) << "lhs" << "  sharp\n";

    int cells = 0;
    int off = 0;
    for (int n = 2; n <= o.n_max; ++n) {
        for (int m = 2; m <= o.m_max; ++m) {
            if (n == m) continue;
            for (int k = 1; k <= o.k_max; ++k) {
                NcPoly f = X.pow(n);
                NcPoly g = X.pow(m) + Y;
                NcPoly P = commutator(X, Y).pow(k);
                auto rep = verify_instance(P, f, g, cfg);
                bool sharp = rep.slack.has_value() && *rep.slack == BigRat(0);
                ++cells;
                if (!sharp) ++off;

                if (o.format == "json") {
                    ordered_json j;
                    j["n"] = n;
                    j["m"] = m;
                    j["k"] = k;
                    j["field"] = field_str(tag);
                    j["N"] = opt_json(rep.weighted_N);
                    j["comm_deg"] = opt_json(rep.commutator_degree);
                    j["bound"] = rat_json(rep.bound);
                    j["lhs"] = opt_json(rep.lhs_degree);
                    j["slack"] = rat_json(rep.slack);
                    j["sharp"] = sharp;
                    s << j.dump() << "\n";
                } else if (o.format == "csv") {
                    s << n << "," << m << "," << k << "," << field_str(tag)
                      << "," << csv_opt(rep.weighted_N) << ","
                      << csv_opt(rep.commutator_degree) << ","
                      << (rep.bound ? rat_str(*rep.bound) : "") << ","
                      << csv_opt(rep.lhs_degree) << ","
                      << (rep.slack ? rat_str(*rep.slack) : "") << ","
                      << (sharp ? "true" : "false") << "\n";
                } else {
                    s << std::setw(3) << n << std::setw(4) << m << std::setw(4)
                      << k << std::setw(6)
                      << (rep.weighted_N ? std::to_string(*rep.weighted_N) : "-")
                      << std::setw(4)
                      << (rep.commutator_degree
                              ? std::to_string(*rep.commutator_degree)
                              : "-")
                      << std::setw(8) << (rep.bound ? rat_str(*rep.bound) : "-")
                      << std::setw(6)
                      << (rep.lhs_degree ? std::to_string(*rep.lhs_degree) : "-")
                      << "  " << yn(sharp) << "\n";
                }
            }
        }
    }
    if (o.format == "human")
        s << "sharpness: " << (cells - off) << "/" << cells
          << " cells attain the bound\n";
    return off == 0 ? 0 : 1;
}

const char* pipeline_status_str(PipelineStatus st) {
    switch (st) {
        case PipelineStatus::complete: return "complete";
        case PipelineStatus::truncation_insufficient:
            return "truncation_insufficient";
        default: return "hypotheses_failed";
    }
}

int cmd_pipeline(const Options& o, std::ostream& s) {
    auto tag = parse_field(o.field_text);
    auto cfg = parse_order(o.order_text, o.vars);
    auto names = default_names(o.vars);
    auto names2 = default_names(2);

    NcPoly P = parse_poly(o.P_text, 2, tag);
    NcPoly f = parse_poly(o.f_text, o.vars, tag);
    NcPoly g = parse_poly(o.g_text, o.vars, tag);
    PipelineBudgets budgets{o.budget_centralize, o.budget_peel};
    auto tr = pipeline_trace(P, f, g, cfg, o.floor, budgets);

    if (o.format == "json") {
        ordered_json j;
        j["P"] = P.str(names2);
        j["f"] = f.str(names);
        j["g"] = g.str(names);
        j["field"] = field_str(tag);
        j["status"] = pipeline_status_str(tr.status);
        j["detail"] = tr.detail;
        j["hypotheses"] = hyp_json(tr.hypothesis);
        j["swapped"] = tr.swapped;
        j["m"] = opt_json(tr.m);
        j["n"] = opt_json(tr.n);
        j["h"] = tr.h ? ordered_json(word_str(*tr.h, names))
                      : ordered_json(nullptr);
        j["root_degree"] = opt_json(tr.root_degree);
        j["q_exp"] = opt_json(tr.q_exp);
        j["p_exp"] = opt_json(tr.p_exp);
        j["comm_deg"] = opt_json(tr.commutator_degree);
        j["N"] = opt_json(tr.N);
        j["bound"] = rat_json(tr.bound);
        j["peel_step_bound"] = tr.peel_step_bound;
        j["P_bar"] = tr.P_bar ? ordered_json(tr.P_bar->str(names2))
                              : ordered_json(nullptr);
        if (tr.centralized) {
            ordered_json c;
            c["status"] = tr.centralized->status == CentralizeStatus::complete
                              ? "complete"
                              : "truncated";
            c["steps"] = tr.centralized->steps;
            c["b"] = tr.centralized->b.str(names);
            c["e"] = tr.centralized->e.str(names);
            c["valid_floor"] = tr.centralized->valid_floor;
            j["centralize"] = std::move(c);
        } else {
            j["centralize"] = nullptr;
        }
        if (tr.peel) {
            ordered_json p;
            p["steps"] = tr.peel->steps_used;
            ordered_json powers;
            for (const auto& [exp, c] : tr.peel->coefficients)
                powers[std::to_string(exp)] = c.str();
            p["powers"] = std::move(powers);
            p["remainder"] = tr.peel->remainder.str(names);
            j["peel"] = std::move(p);
        } else {
            j["peel"] = nullptr;
        }
        j["s_lead_degree"] = opt_json(tr.s_lead_degree);
        j["leading_image_degree"] = opt_json(tr.leading_image_degree);
        j["witness"] = tr.witness ? witness_json(*tr.witness, names2)
                                  : ordered_json(nullptr);
        j["witness_degree"] = opt_json(tr.witness_degree);
        j["lhs"] = opt_json(tr.lhs);
        s << j.dump(2) << "\n";
    } else {
        s << "P = " << P.str(names2) << "\n"
          << "f = " << f.str(names) << "\n"
          << "g = " << g.str(names) << "\n"
          << "field: " << field_str(tag) << "\n";
        if (!tr.hypothesis.all_satisfied) {
            print_hypotheses(s, tr.hypothesis);
            s << "status: hypotheses_failed\n";
            return 1;
        }
        s << "hypotheses: satisfied\n";
        s << "m = " << *tr.m << ", n = " << *tr.n
          << (tr.swapped ? "  (f and g swapped)" : "") << "\n";
        s << "root h = " << word_str(*tr.h, names) << " (degree "
          << *tr.root_degree << "); v(f) = h^" << *tr.q_exp << ", v(g) = h^"
          << *tr.p_exp << "\n";
        s << "deg [f,g] = " << *tr.commutator_degree << "; N = " << *tr.N
          << "; bound = " << rat_str(*tr.bound) << "\n";
        s << "leading part = " << tr.P_bar->str(names2) << "\n";
        if (tr.centralized) {
            s << "centralize f: "
              << (tr.centralized->status == CentralizeStatus::complete
                      ? "complete"
                      : "truncated")
              << " after " << tr.centralized->steps << " steps, b = "
              << tr.centralized->b.str(names) << "\n";
        }
        if (tr.peel) {
            s << "peel g': " << tr.peel->steps_used
              << (tr.peel->steps_used == 1 ? " power" : " powers")
              << " of h stripped (budget bound " << tr.peel_step_bound << ")";
            if (tr.s_lead_degree)
                s << ", tail lead degree " << *tr.s_lead_degree;
            s << "\n";
        }
        if (tr.witness)
            s << "witness u = " << word_str(tr.witness->u, witness_names())
              << " (deg_t " << tr.witness->deg_t_u << ", deg_s "
              << tr.witness->deg_s_u << ")\n";
        if (tr.status == PipelineStatus::complete) {
            s << "chain: deg P(f,g) = " << *tr.lhs << " >= leading image "
              << *tr.leading_image_degree << " >= witness " << *tr.witness_degree
              << " >= bound " << rat_str(*tr.bound) << "\n";
            s << "status: complete\n";
        } else {
            s << "status: truncation_insufficient (" << tr.detail << ")\n";
        }
    }
    return tr.status == PipelineStatus::hypotheses_failed ? 1 : 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
    Options o;
    CLI::App app{"Exact degree estimates for substitution in free associative "
                 "algebras"};
    app.name("ncdeg");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--field", o.field_text, "Coefficient field: q or gf:<prime>")
        ->capture_default_str();
    app.add_option("--vars", o.vars, "Alphabet size for f, g, and series input")
        ->check(CLI::Range(1, 26))
        ->capture_default_str();
    app.add_option("--order", o.order_text,
                   "Variable precedence, greatest first (e.g. y,x)");
    app.add_option("--floor", o.floor, "Truncation floor for series")
        ->capture_default_str();
    app.add_option("--budget-centralize", o.budget_centralize,
                   "Step budget for the conjugation iteration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget-peel", o.budget_peel,
                   "Step budget for peeling powers of the root")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Base seed for randomized commands")
        ->capture_default_str();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", o.out_path, "Write the report to this file");

    auto* verify =
        app.add_subcommand("verify", "Check the degree estimate on one instance");
    verify->add_option("P", o.P_text, "Polynomial in x and y")->required();
    verify->add_option("f", o.f_text, "First substituted element")->required();
    verify->add_option("g", o.g_text, "Second substituted element")->required();

    auto* centralize_cmd = app.add_subcommand(
        "centralize", "Run the conjugation iteration on one element");
    centralize_cmd->add_option("a", o.a_text, "Element to centralize")
        ->required();

    auto* witness = app.add_subcommand(
        "witness", "Build the witness monomial for a weighted-homogeneous P");
    witness->add_option("P", o.P_text, "Homogeneous polynomial in x and y")
        ->required();
    witness->add_option("m", o.m, "Weight of x")
        ->required()
        ->check(CLI::PositiveNumber);
    witness->add_option("n", o.n, "Weight of y")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* campaign = app.add_subcommand(
        "campaign", "Verify the estimate on seeded random instances");
    campaign->add_option("--count", o.count, "Number of instances")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* sharp = app.add_subcommand(
        "sharpness", "Sweep the family on which the bound is attained");
    sharp->add_option("n_max", o.n_max, "Largest exponent of f = x^n")
        ->check(CLI::Range(2, 12));
    sharp->add_option("m_max", o.m_max, "Largest exponent in g = x^m + y")
        ->check(CLI::Range(2, 12));
    sharp->add_option("k_max", o.k_max, "Largest power of [x,y]")
        ->check(CLI::Range(1, 8));

    auto* pipe = app.add_subcommand(
        "pipeline", "Replay the full degree-estimate argument on one instance");
    pipe->add_option("P", o.P_text, "Polynomial in x and y")->required();
    pipe->add_option("f", o.f_text, "First substituted element")->required();
    pipe->add_option("g", o.g_text, "Second substituted element")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!o.out_path.empty()) {
            file.open(o.out_path);
            if (!file) {
                err << "cannot open '" << o.out_path << "' for writing\n";
                return 2;
            }
            sink = &file;
        }
        if (o.format == "csv" && !app.got_subcommand(campaign) &&
            !app.got_subcommand(sharp))
            throw std::invalid_argument(
                "csv output is only available for campaign and sharpness");

        if (app.got_subcommand(verify)) return cmd_verify(o, *sink);
        if (app.got_subcommand(centralize_cmd)) return cmd_centralize(o, *sink);
        if (app.got_subcommand(witness)) return cmd_witness(o, *sink);
        if (app.got_subcommand(campaign)) return cmd_campaign(o, *sink);
        if (app.got_subcommand(sharp)) return cmd_sharpness(o, *sink);
        if (app.got_subcommand(pipe)) return cmd_pipeline(o, *sink);
        err << "no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ncdeg
