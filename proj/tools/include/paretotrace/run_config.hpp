#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pareto/descent.hpp"
#include "pareto/ode_rhs.hpp"
#include "pareto/quadratic.hpp"
#include "pareto/shape/geometry.hpp"
#include "pareto/tracing.hpp"

namespace pareto::cli {

struct QuadraticSpec {
  Eigen::Index n = 10;
  std::uint64_t seed = 0;
};

struct QuadraticExplicitSpec {
  nlohmann::json matrices;
};

struct ShapeSpec {
  shape::ShapeConfig config;
};

using ProblemSpec = std::variant<QuadraticSpec, QuadraticExplicitSpec, ShapeSpec>;

/// Start at the analytic front point for lambda0 (quadratic problems only).
struct ExactOracleInit {
  double lambda0 = 0.5;
};

/// Armijo descent on J_lambda0 from x_start; the iterates listed in
/// log_iterations are traced as additional perturbed starts.
struct ArmijoInit {
  double lambda0 = 0.5;
  std::optional<Vector> x_start;
  DescentConfig descent;
  std::vector<int> log_iterations;
};

struct GivenPointInit {
  Vector x;
  double lambda0 = 0.5;
};

/// lambda0 is the weight for which x is closest to critical. For shape
/// problems x may be the initial design.
struct RecoverLambdaInit {
  std::optional<Vector> x;
};

using InitializerSpec = std::variant<ExactOracleInit, ArmijoInit, GivenPointInit, RecoverLambdaInit>;

/// The trace interval is either absolute (lambda_low / lambda_high) or
/// relative to lambda0 (span_backward / span_forward, clipped to [0, 1]);
/// the latter is needed when lambda0 is only known after initialization.
struct TraceSpec {
  std::optional<double> lambda_low;
  std::optional<double> lambda_high;
  std::optional<double> span_backward;
  std::optional<double> span_forward;
  double step = 0.05;
  std::string method = "rk4";
  bool stop_on_definiteness = true;
  double epsilon = 1e-6;

  /// Interval around lambda0, validated.
  TraceConfig resolve(double lambda0) const;
};

/// Inputs of the continuous-dependence bound written to the manifest.
struct DiagnosticsSpec {
  bool gronwall = true;
  /// Radius of the ball the Lipschitz data is sampled on.
  double delta = 1e-2;
  double rho = kDefaultRho;
  int samples = kDefaultLipschitzSamples;
};

enum class Output { kCsv, kJson, kSvgFront, kSvgDiagnostics };

std::string to_string(Output o);

struct RunConfig {
  ProblemSpec problem;
  InitializerSpec initializer;
  TraceSpec trace;
  DiagnosticsSpec diagnostics;
  std::vector<Output> outputs{Output::kCsv, Output::kJson};
  std::filesystem::path output_dir = "out";
  /// Parsed document, echoed into the manifest.
  nlohmann::json source;

  bool wants(Output o) const;
};

/// Parses and validates a run configuration. Unknown keys, missing fields
/// and inconsistent combinations raise ConfigError.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

/// Builds the problem described by the configuration.
std::unique_ptr<BiCriteriaProblem> make_problem(const RunConfig& config);

}  // namespace pareto::cli
