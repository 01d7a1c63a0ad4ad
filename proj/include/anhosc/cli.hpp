#pragma once

#include "anhosc/correction.hpp"
#include "anhosc/params.hpp"
#include "anhosc/validation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace anhosc {

enum class Command { propagate, sweep, validate, oracle };
enum class OutputFormat { json, csv };

struct SweepSpec {
    std::string param;  // a, b, beta or xf
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
};

struct RunConfig {
    ModelParams params;
    TruncationPolicy policy;
    Command command = Command::propagate;
    std::optional<SweepSpec> sweep;
    OutputFormat output = OutputFormat::json;
    std::optional<std::string> output_path;
    std::string suite = "all";
};

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_singular = 2, exit_accuracy = 3, exit_validation = 4 };

// One evaluated point with its outcome.
struct RunOutcome {
    PropagatorResult result;
    std::string status = "ok";  // ok, singular, accuracy, domain
    double achieved = 0.0;      // set for accuracy failures
    double requested = 0.0;
    std::string message;
};

RunOutcome evaluate_point(const ModelParams& params, const TruncationPolicy& policy);

std::string format_double(double v);  // %.17g, non-finite as null
std::string propagate_json(const RunConfig& cfg, const RunOutcome& outcome);
std::string csv_header();
std::string csv_row(const std::string& param, double value, const RunOutcome& outcome);
std::string report_json(const SuiteReport& report);

// Rows of a sweep, evaluated on up to ANHOSC_THREADS workers, returned in sweep order.
std::vector<std::pair<double, RunOutcome>> run_sweep(const RunConfig& cfg);

// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anhosc
