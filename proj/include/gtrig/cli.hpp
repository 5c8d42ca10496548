#ifndef GTRIG_CLI_HPP
#define GTRIG_CLI_HPP

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "error.hpp"
#include "format.hpp"
#include "inversion.hpp"
#include "params.hpp"
#include "pqtrig.hpp"
#include "propcheck.hpp"

/*
 * Command-line front end: `eval`, `table`, `figure1` and `check`.
 *
 * Exit codes are part of the interface:
 *   0 success, 2 domain error or bad arguments, 3 convergence failure,
 *   4 a Theorem/Lemma/Identity predicate failed.
 */

namespace gtrig::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 2;
inline constexpr int exit_convergence = 3;
inline constexpr int exit_predicate = 4;

struct Options
{
    double p = 2.5;
    double q = 3.0;
    std::optional<double> x;
    std::vector<double> xs;
    std::string format;
    bool full_precision = false;
    double eps = 1e-9;
    std::string grid = "default";

    std::string fn;
    std::string kind = "forward";
    double p_min = 1.1;
    double p_max = 10.0;
    int n = 100;
    std::vector<std::string> suite;
};

namespace detail {

inline std::string cell(double v, bool full)
{
    return full ? fmt::shortest(v) : fmt::rounded(v, 4);
}

inline int cmd_eval(const Options& o, std::ostream& out)
{
    const PqParams pq(o.p, o.q);
    const bool needs_x = o.fn != "pi" && o.fn != "m";
    if (needs_x && !o.x)
        throw DomainError("eval --fn " + o.fn + " requires --x");
    const double x = o.x.value_or(0.0);

    double value = 0.0;
    std::string method;
    if (o.fn == "arcsin" || o.fn == "arccos" || o.fn == "arsinh") {
        const EvalResult r = o.fn == "arcsin" ? arcsin_pq_eval(pq, x)
                             : o.fn == "arccos" ? arccos_pq_eval(pq, x)
                                                : arsinh_pq_eval(pq, x);
        value = r.value;
        method = to_string(r.method);
    } else if (o.fn == "sin") {
        value = sin_pq(pq, x);
        method = "NewtonBisection";
    } else if (o.fn == "cos") {
        value = cos_pq(pq, x);
        method = "NewtonBisection";
    } else if (o.fn == "sinh") {
        value = sinh_pq(pq, x);
        method = "NewtonBisection";
    } else if (o.fn == "pi") {
        value = pi_pq(pq);
        method = "BetaFunction";
    } else if (o.fn == "m") {
        value = m_pq(pq);
        method = "PfaffSeries";
    } else {
        throw DomainError("unknown function '" + o.fn + "'");
    }
    out << (o.full_precision ? fmt::shortest(value) : fmt::significant(value, 15)) << " method=" << method
        << "\n";
    return exit_ok;
}

inline int cmd_table(const Options& o, std::ostream& out)
{
    const PqParams pq(o.p, o.q);
    const std::vector<double> xs = o.xs.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0} : o.xs;
    const bool full = o.full_precision;
    std::string body;
    bool note_sinh = false;

    if (o.kind == "forward") {
        body += "x,arcsin,arccos,arsinh\n";
        for (double x : xs)
            body += cell(x, full) + "," + cell(arcsin_pq(pq, x), full) + "," + cell(arccos_pq(pq, x), full) + ","
                    + cell(arsinh_pq(pq, x), full) + "\n";
    } else if (o.kind == "inverse") {
        body += "x,sin,cos,sinh\n";
        const SinPq sin(pq);
        const SinhPq sinh(pq);
        for (double y : xs) {
            body += cell(y, full) + "," + cell(sin(y), full) + "," + cell(sin.cos(y), full) + ","
                    + cell(sinh(y), full) + "\n";
            note_sinh = note_sinh || (y == 1.0 && o.p == 2.5 && o.q == 3.0);
        }
    } else {
        throw DomainError("table --kind must be 'forward' or 'inverse'");
    }
    out << body;
    if (note_sinh)
        out << "# NOTE: sinh_{2.5,3}(1) = 1.1003. A published value of 0.1003 for this entry is a misprint: "
               "arsinh_{2.5,3}(1) = 0.9262 < 1 forces sinh_{2.5,3}(1) > 1.\n";
    return exit_ok;
}

inline int cmd_figure1(const Options& o, std::ostream& out)
{
    if (!(o.p_min > 1.0 && o.p_min < o.p_max) || !std::isfinite(o.p_max))
        throw DomainError("figure1 requires 1 < p-min < p-max");
    if (o.n < 2)
        throw DomainError("figure1 requires n >= 2");
    std::string body = "p,low,pi,up\n";
    for (int i = 0; i < o.n; ++i) {
        const double p = i == o.n - 1 ? o.p_max : o.p_min + (o.p_max - o.p_min) * i / (o.n - 1);
        const Envelope e = pi_conj_envelope(p);
        const double pi = pi_pq(PqParams(p, p / (p - 1.0)));
        body += fmt::shortest(p) + "," + fmt::shortest(e.lower) + "," + fmt::shortest(pi) + ","
                + fmt::shortest(e.upper) + "\n";
    }
    out << body;
    return exit_ok;
}

inline int cmd_check(const Options& o, std::ostream& out)
{
    const propcheck::GridSpec grid = propcheck::grid_preset(o.grid);
    std::vector<std::string> ids;
    for (const std::string& s : o.suite) {
        if (s == "all") {
            for (const auto& spec : propcheck::list_predicates())
                ids.push_back(spec.id);
        } else {
            propcheck::lookup(s); // throws UnknownPredicate
            ids.push_back(s);
        }
    }
    const std::string format = o.format.empty() ? "text" : o.format;
    if (format != "text" && format != "records")
        throw DomainError("check --format must be 'text' or 'records'");

    std::vector<propcheck::PredicateReport> reports;
    for (const std::string& id : ids)
        reports.push_back(propcheck::sweep(id, grid, o.eps));

    std::string body;
    for (const auto& r : reports)
        body += format == "records" ? propcheck::format_record(r) : propcheck::format_text(r);
    const bool ok = propcheck::all_passed(reports);
    if (format == "text")
        body += std::string(ok ? "OK" : "FAILED") + ": " + std::to_string(reports.size()) + " predicates\n";
    out << body;
    return ok ? exit_ok : exit_predicate;
}

} // namespace detail

/// Parse argv and run one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Generalized (p,q)-trigonometric functions: evaluation, tables and property checks", "gtrig"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--p", o.p, "exponent p > 1");
    app.add_option("--q", o.q, "exponent q > 1");
    app.add_option("--x", o.x, "argument");
    app.add_option("--xs", o.xs, "comma-separated arguments")->delimiter(',');
    app.add_option("--format", o.format, "output format: csv, text or records");
    app.add_flag("--full-precision", o.full_precision, "print shortest round-trip values instead of rounding");
    app.add_option("--eps", o.eps, "relative slack tolerance for check");
    app.add_option("--grid", o.grid, "grid preset for check")->check(CLI::IsMember({"default", "fine", "coarse"}));

    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->add_option("--fn", o.fn, "arcsin, arccos, arsinh, sin, cos, sinh, pi or m")
        ->required()
        ->check(CLI::IsMember({"arcsin", "arccos", "arsinh", "sin", "cos", "sinh", "pi", "m"}));

    auto* table = app.add_subcommand("table", "CSV table of the inverse or forward functions");
    table->add_option("--kind", o.kind, "forward (arcsin, arccos, arsinh) or inverse (sin, cos, sinh)")
        ->check(CLI::IsMember({"forward", "inverse"}));

    auto* figure = app.add_subcommand("figure1", "CSV of the bounds on pi_{p,p'} over a range of p");
    figure->add_option("--p-min", o.p_min, "smallest p");
    figure->add_option("--p-max", o.p_max, "largest p");
    figure->add_option("--n", o.n, "number of rows");

    auto* check = app.add_subcommand("check", "sweep predicates over a parameter grid");
    o.suite = {"all"};
    check->add_option("--suite", o.suite, "'all' or comma-separated predicate ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_domain;
    }

    try {
        if (*eval)
            return detail::cmd_eval(o, out);
        if (*table)
            return detail::cmd_table(o, out);
        if (*figure)
            return detail::cmd_figure1(o, out);
        return detail::cmd_check(o, out);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_convergence;
    } catch (const std::logic_error& e) { // DomainError, UnknownPredicate
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

} // namespace gtrig::cli

#endif
