#include "anhosc/cli.hpp"

#include "anhosc/errors.hpp"
#include "anhosc/lattice.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace anhosc {

RunOutcome evaluate_point(const ModelParams& params, const TruncationPolicy& policy) {
    RunOutcome o;
    o.result.truncation = policy;
    try {
        o.result = full_propagator(params, policy);
    } catch (const SingularFrequencyError& e) {
        o.status = "singular";
        o.message = e.what();
    } catch (const SingularLatticeError& e) {
        o.status = "singular";
        o.message = e.what();
    } catch (const AccuracyError& e) {
        o.status = "accuracy";
        o.achieved = e.achieved;
        o.requested = e.requested;
        o.message = e.what();
    } catch (const DomainError& e) {
        o.status = "domain";
        o.message = e.what();
    }
    o.result.status = o.status;
    return o;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) v = 0.0;  // drop the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quoted(const std::string& s) {
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') r += '\\';
        r += ch;
    }
    return r + "\"";
}

std::string cell(double v, bool ok) { return ok && std::isfinite(v) ? format_double(v) : ""; }

}  // namespace

std::string propagate_json(const RunConfig& cfg, const RunOutcome& o) {
    const ModelParams& p = cfg.params;
    const TruncationPolicy& t = cfg.policy;
    const bool ok = o.status == "ok";
    auto num = [&](double v) { return ok ? format_double(v) : std::string("null"); };
    std::ostringstream s;
    s << "{\"params\":{\"a\":" << format_double(p.a) << ",\"b\":" << format_double(p.b)
      << ",\"c\":" << format_double(p.c) << ",\"beta\":" << format_double(p.beta)
      << ",\"xf\":" << format_double(p.x_f) << "},";
    s << "\"truncation\":{\"order\":" << t.poincare_order << ",\"pmax\":" << t.p_max
      << ",\"tol\":" << format_double(t.quad_rel_tol) << ",\"cutoff\":" << t.series_cutoff << "},";
    s << "\"result\":{\"harmonic_prefactor\":" << num(o.result.harmonic_prefactor)
      << ",\"harmonic_exponent\":" << num(o.result.harmonic_exponent)
      << ",\"universal_exponent\":" << num(o.result.universal_exponent)
      << ",\"polynomial_factor\":" << num(o.result.polynomial_factor)
      << ",\"propagator\":" << num(o.result.value) << "},";
    s << "\"diagnostics\":{\"tail_estimates\":[";
    if (ok)
        for (std::size_t i = 0; i < o.result.tail_estimates.size(); ++i)
            s << (i ? "," : "") << format_double(o.result.tail_estimates[i]);
    s << "],\"status\":" << quoted(o.status);
    if (o.status == "accuracy")
        s << ",\"achieved\":" << format_double(o.achieved) << ",\"requested\":" << format_double(o.requested);
    s << "}}";
    return s.str();
}

std::string csv_header() {
    return "param,value,harmonic_prefactor,harmonic_exponent,universal_exponent,polynomial_factor,propagator,status";
}

std::string csv_row(const std::string& param, double value, const RunOutcome& o) {
    const bool ok = o.status == "ok";
    std::ostringstream s;
    s << param << ',' << (param.empty() ? "" : format_double(value)) << ',' << cell(o.result.harmonic_prefactor, ok)
      << ',' << cell(o.result.harmonic_exponent, ok) << ',' << cell(o.result.universal_exponent, ok) << ','
      << cell(o.result.polynomial_factor, ok) << ',' << cell(o.result.value, ok) << ',' << o.status;
    return s.str();
}

std::string report_json(const SuiteReport& report) {
    std::ostringstream s;
    s << "{\"suite\":" << quoted(report.suite) << ",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const Check& c = report.checks[i];
        s << (i ? "," : "") << "{\"name\":" << quoted(c.name) << ",\"status\":" << quoted(c.passed ? "pass" : "fail")
          << ",\"measured\":" << format_double(c.measured) << ",\"tolerance\":" << format_double(c.tolerance) << "}";
    }
    s << "]}";
    return s.str();
}

namespace {

unsigned worker_count(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ANHOSC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

void set_param(ModelParams& p, const std::string& name, double v) {
    if (name == "a") p.a = v;
    else if (name == "b") p.b = v;
    else if (name == "beta") p.beta = v;
    else if (name == "xf") p.x_f = v;
    else throw DomainError("sweep parameter must be one of a, b, beta, xf");
}

}  // namespace

std::vector<std::pair<double, RunOutcome>> run_sweep(const RunConfig& cfg) {
    if (!cfg.sweep) throw DomainError("sweep specification missing");
    const SweepSpec& sp = *cfg.sweep;
    if (sp.steps < 2) throw DomainError("sweep needs at least 2 steps");
    ModelParams probe = cfg.params;
    set_param(probe, sp.param, sp.from);

    std::vector<std::pair<double, RunOutcome>> rows(sp.steps);
    for (int i = 0; i < sp.steps; ++i)
        rows[i].first = sp.from + (sp.to - sp.from) * static_cast<double>(i) / (sp.steps - 1);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < sp.steps; i = next++) {
            ModelParams p = cfg.params;
            set_param(p, sp.param, rows[i].first);
            rows[i].second = evaluate_point(p, cfg.policy);
        }
    };
    const unsigned n = worker_count(rows.size());
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

namespace {

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path);
        if (!f) {
            err << "cannot open output file " << *cfg.output_path << "\n";
            return exit_usage;
        }
        f << text;
        return exit_ok;
    }
    out << text;
    return exit_ok;
}

int exit_for(const std::string& status) {
    if (status == "ok") return exit_ok;
    if (status == "singular") return exit_singular;
    if (status == "accuracy") return exit_accuracy;
    return exit_usage;
}

std::string oracle_json(const RunConfig& cfg) {
    std::ostringstream s;
    s << "{\"oracle\":[";
    bool first = true;
    for (int N = 2; N <= 3; ++N) {
        const double series = wn_series_exact(cfg.params, N, cfg.policy);
        const double quad = wn_quadrature(cfg.params, N, cfg.policy);
        s << (first ? "" : ",") << "{\"N\":" << N << ",\"series\":" << format_double(series)
          << ",\"quadrature\":" << format_double(quad)
          << ",\"relative_difference\":" << format_double(std::abs(series - quad) / std::abs(quad)) << "}";
        first = false;
    }
    s << "]}";
    return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string format = "json", out_path, sweep_param, suite = "all";
    double from = 0.0, to = 0.0;
    int steps = 0;

    CLI::App app{"Quartic anharmonic oscillator propagator"};
    app.set_config("--config", "", "line-based key = value file; explicit flags win");
    app.add_option("--a", cfg.params.a, "quartic coefficient");
    app.add_option("--b", cfg.params.b, "quadratic coefficient");
    app.add_option("--c", cfg.params.c, "kinetic coefficient");
    app.add_option("--beta", cfg.params.beta, "imaginary time");
    app.add_option("--xf", cfg.params.x_f, "end point");
    app.add_option("--order", cfg.policy.poincare_order, "Poincare order J");
    app.add_option("--pmax", cfg.policy.p_max, "highest correction order p");
    app.add_option("--tol", cfg.policy.quad_rel_tol, "relative quadrature tolerance");
    app.add_option("--cutoff", cfg.policy.series_cutoff, "series cutoff");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "output file");
    app.add_option("--sweep", sweep_param, "sweep parameter")->check(CLI::IsMember({"a", "b", "beta", "xf"}));
    app.add_option("--from", from, "sweep start");
    app.add_option("--to", to, "sweep end");
    app.add_option("--steps", steps, "sweep points");
    app.add_option("--suite", suite, "validation suite");
    auto* propagate = app.add_subcommand("propagate", "evaluate one propagator value");
    auto* sweep = app.add_subcommand("sweep", "CSV table over one parameter");
    auto* validate = app.add_subcommand("validate", "run validation suites");
    auto* oracle = app.add_subcommand("oracle", "lattice series against direct quadrature");
    for (auto* s : {propagate, sweep, validate, oracle}) s->fallthrough();
    app.require_subcommand(1, 1);

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    cfg.output = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.suite = suite;
    try {
        cfg.params.validate();
        cfg.policy.validate();
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    if (sweep->parsed()) {
        cfg.command = Command::sweep;
        if (sweep_param.empty() || steps < 2) {
            err << "sweep needs --sweep PARAM --from F --to T --steps K with K >= 2\n";
            return exit_usage;
        }
        cfg.sweep = SweepSpec{sweep_param, from, to, steps};
        std::string text = csv_header() + "\n";
        for (const auto& [v, o] : run_sweep(cfg)) text += csv_row(sweep_param, v, o) + "\n";
        return emit(cfg, text, out, err);
    }
    if (!sweep_param.empty()) {
        err << "--sweep is only valid with the sweep command\n";
        return exit_usage;
    }
    if (validate->parsed()) {
        cfg.command = Command::validate;
        if (!is_known_suite(suite)) {
            err << "unknown suite: " << suite << "\n";
            return exit_usage;
        }
        const SuiteReport rep = run_suite(suite);
        const int rc = emit(cfg, report_json(rep) + "\n", out, err);
        if (rc != exit_ok) return rc;
        return rep.all_passed() ? exit_ok : exit_validation;
    }
    if (oracle->parsed()) {
        cfg.command = Command::oracle;
        try {
            return emit(cfg, oracle_json(cfg) + "\n", out, err);
        } catch (const AccuracyError& e) {
            err << e.what() << "\n";
            return exit_accuracy;
        } catch (const Error& e) {
            err << e.what() << "\n";
            return exit_usage;
        }
    }

    cfg.command = Command::propagate;
    const RunOutcome o = evaluate_point(cfg.params, cfg.policy);
    if (o.status != "ok") err << o.status << ": " << o.message << "\n";
    std::string text = cfg.output == OutputFormat::csv ? csv_header() + "\n" + csv_row("", 0.0, o) + "\n"
                                                       : propagate_json(cfg, o) + "\n";
    const int rc = emit(cfg, text, out, err);
    if (rc != exit_ok) return rc;
    return exit_for(o.status);
}

}  // namespace anhosc
