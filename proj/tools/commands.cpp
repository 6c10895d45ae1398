#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfzeta/bigint.hpp"
#include "cfzeta/cont_frac.hpp"
#include "cfzeta/gen_fun.hpp"
#include "cfzeta/int_matrix.hpp"
#include "cfzeta/levy.hpp"
#include "cfzeta/polynomial.hpp"
#include "cfzeta/power_series.hpp"
#include "cfzeta/rational_function.hpp"
#include "cfzeta/real.hpp"
#include "cfzeta/surd.hpp"
#include "cfzeta/torus.hpp"
#include "cfzeta/zeta_identity.hpp"
#include "parse.hpp"

namespace cfzeta::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Lebesgue-a.e. value of the Levy constant, pi^2 / (12 log 2), to double
// precision; the Monte Carlo report quotes the estimate against it.
constexpr double kAlmostEverywhereLevy = 1.1865691104156255;
constexpr const char* kAlmostEverywhereLevyText = "1.1865691104156255";

struct Config {
    std::vector<std::string> cf_texts;
    std::vector<std::string> surd_texts;
    std::vector<std::string> matrix_texts;
    std::size_t order = 40;
    long precision = 128;
    std::size_t level = 1;
    std::size_t depth = 10000;
    std::size_t samples = 100;
    std::size_t mc_depth = 500;
    std::uint64_t seed = 1;
    bool json_out = false;
};

/// Usage problems detected after flag parsing (missing input, wrong input
/// kind for the subcommand). Reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& message)
        : std::runtime_error(message) {}
};

struct InputCase {
    std::string kind;  // "surd", "cf", or "matrix"
    std::string text;  // the flag value as typed
    std::optional<QuadraticSurd> surd;
    std::optional<CFExpansion> cf;
    std::optional<IntMatrix> matrix;
};

struct CaseResult {
    ordered_json j;
    std::string text;
    bool ok = true;
};

// ---------------------------------------------------------------------
// Serialization helpers. Exact values become decimal strings (or arrays
// of them); only machine-sized counts stay JSON numbers.
// ---------------------------------------------------------------------

std::string double_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

std::string real_string(const Real& x) { return x.to_string(0); }

ordered_json poly_json(const Polynomial& p) {
    ordered_json a = ordered_json::array();
    for (const Rat& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

ordered_json ratfun_json(const RationalFunction& f) {
    return ordered_json{{"num", poly_json(f.num())},
                        {"den", poly_json(f.den())}};
}

ordered_json series_json(const PowerSeries& s) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i <= s.order(); ++i) {
        a.push_back(to_string(s.coeff(i)));
    }
    return a;
}

ordered_json int_list_json(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(to_string(x));
    return a;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json input_json(const InputCase& in) {
    ordered_json j{{"kind", in.kind}, {"text", in.text}};
    if (in.surd) j["value"] = in.surd->to_string();
    if (in.cf) j["cf"] = in.cf->to_string();
    if (in.matrix) j["matrix"] = matrix_json(*in.matrix);
    return j;
}

std::string series_text(const PowerSeries& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i) os << ", ";
        os << to_string(s.coeff(i));
    }
    return os.str();
}

/// "p^2 q" style label for the monomial p^(r-s) q^s tracked by entry s of
/// a level-r generating vector.
std::string monomial_label(std::size_t r, std::size_t s) {
    std::string out;
    const auto append = [&out](const char* var, std::size_t e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += var;
        if (e > 1) out += '^' + std::to_string(e);
    };
    append("p", r - s);
    append("q", s);
    return out;
}

// ---------------------------------------------------------------------
// Input collection.
// ---------------------------------------------------------------------

std::vector<InputCase> collect_inputs(const Config& cfg, bool allow_matrix,
                                      bool default_corpus,
                                      const std::string& command) {
    std::vector<InputCase> cases;
    for (const std::string& text : cfg.surd_texts) {
        InputCase c;
        c.kind = "surd";
        c.text = text;
        c.surd = parse_surd(text);
        c.cf = CFExpansion::expand(*c.surd);
        cases.push_back(std::move(c));
    }
    for (const std::string& text : cfg.cf_texts) {
        InputCase c;
        c.kind = "cf";
        c.text = text;
        c.cf = parse_cf(text);
        cases.push_back(std::move(c));
    }
    for (const std::string& text : cfg.matrix_texts) {
        InputCase c;
        c.kind = "matrix";
        c.text = text;
        c.matrix = parse_matrix(text);
        cases.push_back(std::move(c));
    }
    if (cases.empty()) {
        if (!default_corpus) {
            throw UsageError("the " + command +
                             " command needs at least one input; pass --surd "
                             "or --cf" +
                             (allow_matrix ? " or --matrix" : ""));
        }
        // The canonical trio: golden ratio, silver ratio, sqrt(2)/2.
        for (const char* text : {"[;(1)]", "[;(2)]", "[1;(2)]"}) {
            InputCase c;
            c.kind = "cf";
            c.text = text;
            c.cf = parse_cf(text);
            cases.push_back(std::move(c));
        }
    }
    return cases;
}

/// The automorphism named by a case: a matrix verbatim, or the conjugated
/// periodic-part matrix of a continued fraction.
ToralAutomorphism case_automorphism(const InputCase& in) {
    if (in.matrix) return ToralAutomorphism(*in.matrix);
    return from_quadratic(*in.cf);
}

/// Run one case builder over every case, fanning out across threads when
/// there is more than one; results keep input order.
template <typename F>
std::vector<CaseResult> map_cases(const std::vector<InputCase>& cases, F fn) {
    std::vector<CaseResult> out(cases.size());
    if (cases.size() <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) out[i] = fn(cases[i]);
        return out;
    }
    std::vector<std::future<CaseResult>> futures;
    futures.reserve(cases.size());
    for (const InputCase& c : cases) {
        futures.push_back(
            std::async(std::launch::async, [&fn, &c] { return fn(c); }));
    }
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = futures[i].get();
    return out;
}

int emit(const Config& cfg, ordered_json top,
         const std::vector<CaseResult>& results, bool gate_exit,
         std::ostream& out) {
    bool all_ok = true;
    for (const CaseResult& r : results) all_ok = all_ok && r.ok;
    if (cfg.json_out) {
        ordered_json arr = ordered_json::array();
        for (const CaseResult& r : results) arr.push_back(r.j);
        top["cases"] = std::move(arr);
        if (gate_exit) top["all_passed"] = all_ok;
        out << top.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) out << "\n";
            out << results[i].text;
        }
        if (gate_exit) {
            out << "\n"
                << (all_ok ? "all cases passed" : "VERIFICATION FAILED")
                << "\n";
        }
    }
    return (gate_exit && !all_ok) ? 1 : 0;
}

// ---------------------------------------------------------------------
// Per-case builders.
// ---------------------------------------------------------------------

CaseResult expand_case(const InputCase& in, const Config& cfg) {
    const CFExpansion& cf = *in.cf;
    const QuadraticSurd value = in.surd ? *in.surd : cf.value();
    CaseResult r;
    r.j = ordered_json{
        {"input", input_json(in)},
        {"value", value.to_string()},
        {"approx", real_string(value.to_real(cfg.precision))},
        {"cf", cf.to_string()},
        {"preperiod", int_list_json(cf.preperiod())},
        {"period", int_list_json(cf.period())},
        {"preperiod_length", cf.preperiod_length()},
        {"period_length", cf.period_length()},
    };
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "value: " << value.to_string() << "\n"
       << "approx: " << real_string(value.to_real(cfg.precision)) << "\n"
       << "cf: " << cf.to_string() << "\n"
       << "preperiod length: " << cf.preperiod_length() << "\n"
       << "period length: " << cf.period_length() << "\n";
    r.text = os.str();
    return r;
}

CaseResult convergents_case(const InputCase& in, const Config& cfg) {
    const auto conv = convergents(*in.cf, cfg.order + 1);
    CaseResult r;
    ordered_json rows = ordered_json::array();
    for (const auto& [p, q] : conv) {
        rows.push_back(ordered_json::array({to_string(p), to_string(q)}));
    }
    r.j = ordered_json{{"input", input_json(in)}, {"convergents", rows}};
    std::ostringstream os;
    os << "input: " << in.text << "\n";
    os << "n\tp\tq\n";
    for (std::size_t n = 0; n < conv.size(); ++n) {
        os << n << "\t" << conv[n].first << "\t" << conv[n].second << "\n";
    }
    r.text = os.str();
    return r;
}

CaseResult genfun_case(const InputCase& in, const Config& cfg) {
    const GenFunVector gv = generating_vector(*in.cf, cfg.level);
    const Real radius = radius_of_convergence(*in.cf, cfg.level, cfg.precision);
    CaseResult r;
    ordered_json entries = ordered_json::array();
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "level: " << cfg.level << "\n";
    for (std::size_t s = 0; s <= cfg.level; ++s) {
        const RationalFunction& f = gv.entries[s];
        const PowerSeries series = PowerSeries::expand(f, cfg.order);
        entries.push_back(ordered_json{
            {"monomial", monomial_label(cfg.level, s)},
            {"closed_form", ratfun_json(f)},
            {"series", series_json(series)},
        });
        os << "F[" << monomial_label(cfg.level, s) << "] = " << f.to_string()
           << "\n"
           << "  series: " << series_text(series) << "\n";
    }
    os << "radius of convergence: " << real_string(radius) << "\n";
    r.j = ordered_json{{"input", input_json(in)},
                       {"level", cfg.level},
                       {"entries", std::move(entries)},
                       {"radius", real_string(radius)}};
    r.text = os.str();
    return r;
}

CaseResult levy_case(const InputCase& in, const Config& cfg) {
    const LevyReport rep = levy_report(*in.cf, cfg.depth, cfg.precision);
    CaseResult r;
    r.j = ordered_json{
        {"input", input_json(in)},
        {"period_length", rep.ell},
        {"trace", to_string(rep.trace)},
        {"det", to_string(rep.det)},
        {"exact", real_string(rep.exact)},
        {"birkhoff", real_string(rep.birkhoff)},
        {"depth", rep.depth},
        {"empirical", real_string(rep.empirical)},
        {"discrepancy_birkhoff", real_string(rep.discrepancy_birkhoff)},
        {"discrepancy_empirical", real_string(rep.discrepancy_empirical)},
    };
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "period length: " << rep.ell << "\n"
       << "periodic matrix: trace " << rep.trace << ", det " << rep.det
       << "\n"
       << "exact: " << real_string(rep.exact) << "\n"
       << "birkhoff: " << real_string(rep.birkhoff) << "\n"
       << "empirical (depth " << rep.depth
       << "): " << real_string(rep.empirical) << "\n"
       << "|exact - birkhoff|: " << real_string(rep.discrepancy_birkhoff)
       << "\n"
       << "|exact - empirical|: " << real_string(rep.discrepancy_empirical)
       << "\n";
    r.text = os.str();
    return r;
}

CaseResult torus_case(const InputCase& in, const Config& cfg) {
    const ToralAutomorphism f = case_automorphism(in);
    const Real h = entropy(f, cfg.precision);
    const RationalFunction zf = zeta(f);
    const NormLength nl = norm_and_geodesic_length(f, cfg.precision);
    std::vector<Int> counts;
    counts.reserve(cfg.order);
    for (unsigned long n = 1; n <= cfg.order; ++n) {
        counts.push_back(fix_count(f, n));
    }
    CaseResult r;
    r.j = ordered_json{
        {"input", input_json(in)},
        {"matrix", matrix_json(f.matrix())},
        {"trace", to_string(f.trace())},
        {"det", to_string(f.det())},
        {"entropy", real_string(h)},
        {"zeta", ratfun_json(zf)},
        {"fix_counts", int_list_json(counts)},
        {"norm", real_string(nl.norm)},
        {"geodesic_length", real_string(nl.length)},
    };
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "matrix: " << f.matrix().to_string() << "\n"
       << "trace: " << f.trace() << "\n"
       << "det: " << f.det() << "\n"
       << "entropy: " << real_string(h) << "\n"
       << "zeta: " << zf.to_string() << "\n"
       << "fix counts (n = 1.." << cfg.order << "): ";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ", ";
        os << counts[i];
    }
    os << "\n"
       << "norm: " << real_string(nl.norm) << "\n"
       << "geodesic length: " << real_string(nl.length) << "\n";
    if (in.cf) {
        const PrimalityReport pr = is_prime_hyperbolic(*in.cf);
        r.j["prime"] = pr.prime;
        r.j["prime_case"] =
            pr.which == PrimeCase::A
                ? ordered_json("A")
                : (pr.which == PrimeCase::B ? ordered_json("B")
                                            : ordered_json(nullptr));
        os << "prime: "
           << (pr.prime
                   ? std::string("yes (case ") +
                         (pr.which == PrimeCase::A ? "A" : "B") + ")"
                   : std::string("no"))
           << "\n";
    }
    r.text = os.str();
    return r;
}

CaseResult zeta_case(const InputCase& in, const Config& cfg) {
    const ToralAutomorphism f = case_automorphism(in);
    const RationalFunction zf = zeta(f);
    const PowerSeries series = zeta_series(f, cfg.order);
    const bool match = series == PowerSeries::expand(zf, cfg.order);
    CaseResult r;
    r.ok = match;
    r.j = ordered_json{
        {"input", input_json(in)},
        {"matrix", matrix_json(f.matrix())},
        {"zeta", ratfun_json(zf)},
        {"series", series_json(series)},
        {"series_matches_closed_form", match},
    };
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "matrix: " << f.matrix().to_string() << "\n"
       << "zeta: " << zf.to_string() << "\n"
       << "series: " << series_text(series) << "\n"
       << "series matches closed form: " << (match ? "yes" : "NO") << "\n";
    r.text = os.str();
    return r;
}

CaseResult verify_case(const InputCase& in, const Config& cfg) {
    const IdentityReport rep = main_identity_check(*in.cf, cfg.order);
    CaseResult r;
    r.ok = rep.equal_exact && !rep.witness;
    r.j = ordered_json{
        {"input", input_json(in)},
        {"lhs", ratfun_json(rep.lhs)},
        {"rhs", ratfun_json(rep.rhs)},
        {"lhs_text", rep.lhs.to_string()},
        {"rhs_text", rep.rhs.to_string()},
        {"equal_exact", rep.equal_exact},
        {"series_checked_to", rep.series_checked_to},
        {"witness", rep.witness ? ordered_json(*rep.witness)
                                : ordered_json(nullptr)},
    };
    std::ostringstream os;
    os << "input: " << in.text << "\n"
       << "lhs: " << rep.lhs.to_string() << "\n"
       << "rhs: " << rep.rhs.to_string() << "\n"
       << "equal exact: " << (rep.equal_exact ? "yes" : "NO") << "\n"
       << "series cross-checked to order " << rep.series_checked_to << "\n";
    if (rep.witness) {
        os << "first differing coefficient: z^" << *rep.witness << "\n";
    }
    r.text = os.str();
    return r;
}

ordered_json montecarlo_json(const Config& cfg, const MonteCarloResult& mc) {
    return ordered_json{
        {"samples", cfg.samples},
        {"depth", cfg.mc_depth},
        {"seed", cfg.seed},
        {"mean", double_string(mc.mean)},
        {"stddev", double_string(mc.stddev)},
        {"reference", kAlmostEverywhereLevyText},
        {"relative_error",
         double_string(std::abs(mc.mean - kAlmostEverywhereLevy) /
                       kAlmostEverywhereLevy)},
    };
}

std::string montecarlo_text(const Config& cfg, const MonteCarloResult& mc) {
    std::ostringstream os;
    os << "samples: " << cfg.samples << "\n"
       << "depth: " << cfg.mc_depth << "\n"
       << "seed: " << cfg.seed << "\n"
       << "mean: " << double_string(mc.mean) << "\n"
       << "stddev: " << double_string(mc.stddev) << "\n"
       << "reference (pi^2 / (12 log 2)): " << kAlmostEverywhereLevyText
       << "\n"
       << "relative error: "
       << double_string(std::abs(mc.mean - kAlmostEverywhereLevy) /
                        kAlmostEverywhereLevy)
       << "\n";
    return os.str();
}

// ---------------------------------------------------------------------
// Subcommand drivers.
// ---------------------------------------------------------------------

int cmd_expand(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, false, "expand");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return expand_case(c, cfg); });
    ordered_json top{{"command", "expand"}, {"precision", cfg.precision}};
    return emit(cfg, std::move(top), results, false, out);
}

int cmd_convergents(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, false, "convergents");
    const auto results = map_cases(cases, [&cfg](const InputCase& c) {
        return convergents_case(c, cfg);
    });
    ordered_json top{{"command", "convergents"}, {"order", cfg.order}};
    return emit(cfg, std::move(top), results, false, out);
}

int cmd_genfun(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, false, "genfun");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return genfun_case(c, cfg); });
    ordered_json top{{"command", "genfun"},
                     {"order", cfg.order},
                     {"level", cfg.level},
                     {"precision", cfg.precision}};
    return emit(cfg, std::move(top), results, false, out);
}

int cmd_levy(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, false, "levy");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return levy_case(c, cfg); });
    ordered_json top{{"command", "levy"},
                     {"depth", cfg.depth},
                     {"precision", cfg.precision}};
    return emit(cfg, std::move(top), results, false, out);
}

int cmd_torus(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, true, false, "torus");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return torus_case(c, cfg); });
    ordered_json top{{"command", "torus"},
                     {"order", cfg.order},
                     {"precision", cfg.precision}};
    return emit(cfg, std::move(top), results, false, out);
}

int cmd_zeta(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, true, false, "zeta");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return zeta_case(c, cfg); });
    ordered_json top{{"command", "zeta"}, {"order", cfg.order}};
    return emit(cfg, std::move(top), results, true, out);
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, true, "verify");
    const auto results = map_cases(
        cases, [&cfg](const InputCase& c) { return verify_case(c, cfg); });
    ordered_json top{{"command", "verify"}, {"order", cfg.order}};
    return emit(cfg, std::move(top), results, true, out);
}

int cmd_montecarlo(const Config& cfg, std::ostream& out) {
    const MonteCarloResult mc =
        levy_ae_montecarlo(cfg.samples, cfg.mc_depth, cfg.seed);
    if (cfg.json_out) {
        const ordered_json section = montecarlo_json(cfg, mc);
        ordered_json top{{"command", "montecarlo"}};
        for (auto it = section.begin(); it != section.end(); ++it) {
            top[it.key()] = it.value();
        }
        out << top.dump(2) << "\n";
    } else {
        out << montecarlo_text(cfg, mc);
    }
    return 0;
}

int cmd_report(const Config& cfg, std::ostream& out) {
    const auto cases = collect_inputs(cfg, false, true, "report");
    const auto results = map_cases(cases, [&cfg](const InputCase& c) {
        const CaseResult expand_r = expand_case(c, cfg);
        const CaseResult conv_r = convergents_case(c, cfg);
        const CaseResult genfun_r = genfun_case(c, cfg);
        const CaseResult levy_r = levy_case(c, cfg);
        const CaseResult torus_r = torus_case(c, cfg);
        const CaseResult zeta_r = zeta_case(c, cfg);
        const CaseResult verify_r = verify_case(c, cfg);
        CaseResult r;
        r.ok = zeta_r.ok && verify_r.ok;
        r.j = ordered_json{
            {"input", input_json(c)},
            {"expand", expand_r.j},
            {"convergents", conv_r.j["convergents"]},
            {"genfun", genfun_r.j},
            {"levy", levy_r.j},
            {"torus", torus_r.j},
            {"zeta", zeta_r.j},
            {"verify", verify_r.j},
        };
        std::ostringstream os;
        os << "==== input: " << c.text << " ====\n"
           << "-- expansion --\n"
           << expand_r.text << "-- convergents --\n"
           << conv_r.text << "-- generating functions --\n"
           << genfun_r.text << "-- levy constants --\n"
           << levy_r.text << "-- toral automorphism --\n"
           << torus_r.text << "-- zeta --\n"
           << zeta_r.text << "-- identity --\n"
           << verify_r.text;
        r.text = os.str();
        return r;
    });
    const MonteCarloResult mc =
        levy_ae_montecarlo(cfg.samples, cfg.mc_depth, cfg.seed);
    ordered_json top{{"command", "report"}, {"order", cfg.order},
                     {"level", cfg.level},   {"depth", cfg.depth},
                     {"samples", cfg.samples}, {"mc_depth", cfg.mc_depth},
                     {"seed", cfg.seed},     {"precision", cfg.precision},
                     {"montecarlo", montecarlo_json(cfg, mc)}};
    if (!cfg.json_out) {
        bool all_ok = true;
        for (const CaseResult& r : results) all_ok = all_ok && r.ok;
        std::ostringstream os;
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) os << "\n";
            os << results[i].text;
        }
        os << "\n==== monte carlo ====\n" << montecarlo_text(cfg, mc);
        os << "\n"
           << (all_ok ? "all cases passed" : "VERIFICATION FAILED") << "\n";
        out << os.str();
        return all_ok ? 0 : 1;
    }
    return emit(cfg, std::move(top), results, true, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Config cfg;
    CLI::App app{
        "Exact continued fractions, convergent generating functions, Levy "
        "constants, and dynamical zeta functions of hyperbolic toral "
        "automorphisms",
        "cfzeta"};
    app.require_subcommand(1);

    // allow_extra_args(false) takes exactly one token per flag occurrence,
    // which also stops CLI11 from re-parsing "[...]" values as its own
    // bracketed-array notation; the grammars here use brackets literally.
    const auto add_inputs = [&cfg](CLI::App* sub, bool with_matrix) {
        sub->add_option("--cf", cfg.cf_texts,
                        "continued fraction \"[a1,...;(b1,...)]\"; repeatable")
            ->allow_extra_args(false);
        sub->add_option(
               "--surd", cfg.surd_texts,
               "quadratic surd \"(p+sqrt(d))/q\" or \"sqrt(d)/q\"; repeatable")
            ->allow_extra_args(false);
        if (with_matrix) {
            sub->add_option("--matrix", cfg.matrix_texts,
                            "2x2 integer matrix \"[[a,b],[c,d]]\"; repeatable")
                ->allow_extra_args(false);
        }
    };
    const auto add_json = [&cfg](CLI::App* sub) {
        sub->add_flag("--json", cfg.json_out, "emit a JSON report");
    };
    const auto add_order = [&cfg](CLI::App* sub, const char* what) {
        sub->add_option("--order", cfg.order, what)
            ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    };
    const auto add_precision = [&cfg](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision,
                        "working precision in bits (default 128)")
            ->check(CLI::Range(53L, 16384L));
    };
    const auto add_mc = [&cfg](CLI::App* sub) {
        sub->add_option("--samples", cfg.samples,
                        "number of Monte Carlo samples (default 100)")
            ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
        sub->add_option("--depth", cfg.mc_depth,
                        "partial quotients per sample (default 500)")
            ->check(CLI::Range(std::size_t{100}, std::size_t{5000}));
        sub->add_option("--seed", cfg.seed,
                        "random seed; fixes the result bit for bit");
    };

    CLI::App* sc_expand = app.add_subcommand(
        "expand", "expand a quadratic surd into its periodic continued "
                  "fraction");
    add_inputs(sc_expand, false);
    add_precision(sc_expand);
    add_json(sc_expand);

    CLI::App* sc_conv = app.add_subcommand(
        "convergents", "list the convergents p_n/q_n for n = 0..order");
    add_inputs(sc_conv, false);
    add_order(sc_conv, "largest convergent index (default 40)");
    add_json(sc_conv);

    CLI::App* sc_genfun = app.add_subcommand(
        "genfun", "closed-form generating functions of convergent monomials "
                  "with their series and radius of convergence");
    add_inputs(sc_genfun, false);
    add_order(sc_genfun, "series truncation order (default 40)");
    add_precision(sc_genfun);
    sc_genfun
        ->add_option("--r", cfg.level,
                     "monomial degree: entries track p^(r-s) q^s (default 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
    add_json(sc_genfun);

    CLI::App* sc_levy = app.add_subcommand(
        "levy", "Levy constant: exact, Birkhoff average, and empirical "
                "(1/n) log q_n");
    add_inputs(sc_levy, false);
    sc_levy
        ->add_option("--depth", cfg.depth,
                     "index n for the empirical estimate (default 10000)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    add_precision(sc_levy);
    add_json(sc_levy);

    CLI::App* sc_torus = app.add_subcommand(
        "torus", "hyperbolic toral automorphism: fixed points, entropy, "
                 "zeta function, norm and geodesic length");
    add_inputs(sc_torus, true);
    add_order(sc_torus, "count fixed points of f^n for n = 1..order "
                        "(default 40)");
    add_precision(sc_torus);
    add_json(sc_torus);

    CLI::App* sc_zeta = app.add_subcommand(
        "zeta", "dynamical zeta function: closed form and series, "
                "cross-checked against the fixed-point counts");
    add_inputs(sc_zeta, true);
    add_order(sc_zeta, "series truncation order (default 40)");
    add_json(sc_zeta);

    CLI::App* sc_verify = app.add_subcommand(
        "verify", "certify the trace identity linking convergent generating "
                  "functions to the zeta function (canonical trio when no "
                  "input is given)");
    add_inputs(sc_verify, false);
    add_order(sc_verify, "series cross-check order (default 40)");
    add_json(sc_verify);

    CLI::App* sc_mc = app.add_subcommand(
        "montecarlo", "Monte Carlo estimate of the almost-everywhere Levy "
                      "constant from exact rational samples");
    add_mc(sc_mc);
    add_json(sc_mc);

    CLI::App* sc_report = app.add_subcommand(
        "report", "run every analysis on each input (canonical trio when no "
                  "input is given)");
    add_inputs(sc_report, false);
    add_order(sc_report, "series truncation order (default 40)");
    sc_report
        ->add_option("--r", cfg.level,
                     "monomial degree for the genfun section (default 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
    sc_report
        ->add_option("--depth", cfg.depth,
                     "index n for the empirical Levy estimate (default "
                     "10000)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    sc_report
        ->add_option("--samples", cfg.samples,
                     "Monte Carlo samples (default 100)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    sc_report
        ->add_option("--mc-depth", cfg.mc_depth,
                     "Monte Carlo partial quotients per sample (default 500)")
        ->check(CLI::Range(std::size_t{100}, std::size_t{5000}));
    sc_report->add_option("--seed", cfg.seed, "Monte Carlo seed");
    add_precision(sc_report);
    add_json(sc_report);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("cfzeta");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_expand->parsed()) return cmd_expand(cfg, out);
        if (sc_conv->parsed()) return cmd_convergents(cfg, out);
        if (sc_genfun->parsed()) return cmd_genfun(cfg, out);
        if (sc_levy->parsed()) return cmd_levy(cfg, out);
        if (sc_torus->parsed()) return cmd_torus(cfg, out);
        if (sc_zeta->parsed()) return cmd_zeta(cfg, out);
        if (sc_verify->parsed()) return cmd_verify(cfg, out);
        if (sc_mc->parsed()) return cmd_montecarlo(cfg, out);
        if (sc_report->parsed()) return cmd_report(cfg, out);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cfzeta::cli
