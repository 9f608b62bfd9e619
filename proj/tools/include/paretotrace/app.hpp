#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paretotrace/run_config.hpp"

namespace pareto::cli {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 2, kExitNumericalError = 3 };

struct RunOptions {
  /// Overrides RunConfig::output_dir.
  std::optional<std::filesystem::path> output_dir;
  bool verbose = false;
  /// Progress messages when verbose.
  std::ostream* log = nullptr;
};

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json manifest;
  std::filesystem::path output_dir;
};

/// A point the front is traced from.
struct StartPoint {
  std::string name;
  double lambda0 = 0.0;
  Vector x;
};

struct Initialization {
  StartPoint main;
  /// Logged Armijo iterates.
  std::vector<StartPoint> extra;
  nlohmann::json report;
};

Initialization initialize(const BiCriteriaProblem& problem, const RunConfig& config);

/// Runs the initializer and the bidirectional traces and writes the
/// configured artifacts. Partial traces (definiteness lost) still exit 0;
/// a trace cut short by any other error exits kExitNumericalError after the
/// artifacts are written.
RunResult run_trace(const RunConfig& config, const RunOptions& options);

/// Endpoint errors for each step size, against the analytic front for
/// exact-oracle quadratic runs and a trace at min(steps)/16 otherwise.
/// Writes order_study.csv and order_study.json.
RunResult run_order_study(const RunConfig& config, const std::vector<double>& steps,
                          const RunOptions& options);

/// Dry run: parses the configuration and builds the problem.
nlohmann::json validate_config(const RunConfig& config);

/// "0.1,0.05,0.025" -> {0.1, 0.05, 0.025}; throws ConfigError.
std::vector<double> parse_steps(const std::string& list);

/// Runs `body`, mapping exceptions to exit codes and writing a one-line
/// JSON error record to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace pareto::cli
