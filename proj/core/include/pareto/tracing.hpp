#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pareto/problem.hpp"
#include "pareto/runge_kutta.hpp"

namespace pareto {

struct TraceConfig {
  Weight lambda0{0.5};
  Weight lambda_low{0.0};
  Weight lambda_high{1.0};
  /// Positive step length; the direction comes from the trace call.
  double step = 0.05;
  ButcherTableau tableau = rk4_tableau();
  /// Truncate the trace (instead of throwing) when the scalarized Hessian
  /// stops being positive definite.
  bool stop_on_definiteness = true;
  /// Criticality tolerance reported alongside the diagnostics.
  double epsilon = 1e-6;

  /// Throws InputError for an inconsistent configuration.
  void validate() const;
};

enum class Direction { kForward, kBackward };

enum class TerminationReason { kCompleted, kDefinitenessLost, kRhsError };

std::string to_string(Direction d);
std::string to_string(TerminationReason r);

/// One traced point together with its first and second order optimality
/// diagnostics.
struct TraceRecord {
  double lambda = 0.0;
  Vector x;
  double j0 = 0.0;
  double j1 = 0.0;
  /// ||grad J_lambda(x)||
  double grad_norm = 0.0;
  /// Smallest eigenvalue of grad^2 J_lambda(x)
  double min_eigenvalue = 0.0;
};

struct ParetoTrace {
  /// Ordered by integration progress; the first record is the start point.
  std::vector<TraceRecord> records;
  Direction direction = Direction::kForward;
  TerminationReason termination = TerminationReason::kCompleted;
  /// Human readable detail when termination is not kCompleted.
  std::string message;
};

/// Grid of lambda values visited when integrating from lambda0 to `target`
/// with step h: lambda0 + i*h (computed by multiplication), followed by a
/// shortened final step that lands exactly on the target.
std::vector<double> lambda_grid(double lambda0, double target, double step);

/// Integrates the tracing ODE from config.lambda0 towards lambda_high
/// (forward) or lambda_low (backward, negative step).
///
/// Errors at the start point propagate. Losing positive definiteness later
/// truncates the trace when config.stop_on_definiteness is set; any other
/// error truncates it with TerminationReason::kRhsError.
ParetoTrace trace(const BiCriteriaProblem& problem, const TraceConfig& config, const Vector& x0,
                  Direction direction = Direction::kForward);

/// Forward and backward traces from the same start, run concurrently.
std::pair<ParetoTrace, ParetoTrace> trace_bidirectional(const BiCriteriaProblem& problem,
                                                        const TraceConfig& config,
                                                        const Vector& x0);

/// Records of a bidirectional trace ordered by increasing lambda, with the
/// shared start record kept once.
std::vector<TraceRecord> merge_by_lambda(const ParetoTrace& forward, const ParetoTrace& backward);

using ReferenceSolution = std::function<Vector(double lambda)>;

struct OrderSample {
  double step = 0.0;
  double error = 0.0;
  /// error(previous step) / error(this step)
  std::optional<double> ratio;
};

struct OrderStudy {
  std::vector<OrderSample> samples;
  /// Least-squares slope of log(error) against log(step). Empty when every
  /// error is at round-off level, i.e. the field is integrated exactly.
  std::optional<double> slope;
  bool exact() const { return !slope.has_value(); }
};

/// Endpoint errors of traces from config.lambda0 to lambda_high (or to
/// lambda_low when lambda_high == lambda0) for each step in `steps`.
OrderStudy order_study(const BiCriteriaProblem& problem, const TraceConfig& config,
                       const Vector& x0, const std::vector<double>& steps,
                       const ReferenceSolution& reference);

/// order_study at config.step, step/2 and step/4.
OrderStudy empirical_order(const BiCriteriaProblem& problem, const TraceConfig& config,
                           const Vector& x0, const ReferenceSolution& reference);

/// Reference solution from a trace with the same tableau at `step`. Only
/// lambda values on that trace's grid can be queried.
ReferenceSolution fine_trace_reference(const BiCriteriaProblem& problem, const TraceConfig& config,
                                       const Vector& x0, double step);

}  // namespace pareto
