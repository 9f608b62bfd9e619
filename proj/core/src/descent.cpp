#include "pareto/descent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pareto/scalarization.hpp"

namespace pareto {
namespace {

constexpr double kMinimumStep = 1e-20;

[[noreturn]] void throw_non_finite(const Vector& x) {
  std::ostringstream msg;
  msg << "non-finite objective value at x = [" << x.transpose() << "]";
  throw NumericalError(msg.str());
}

}  // namespace

void DescentConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw InputError("Armijo backtracking factor must lie in (0, 1)");
  if (!(armijo_slope > 0.0 && armijo_slope < 1.0)) {
    throw InputError("Armijo slope must lie in (0, 1)");
  }
  if (max_iterations < 0) throw InputError("max_iterations must be non-negative");
  if (!(grad_tolerance > 0.0)) throw InputError("gradient tolerance must be positive");
  if (!(initial_step > 0.0)) throw InputError("initial step must be positive");
}

DescentResult armijo_descent(const BiCriteriaProblem& problem, Weight w, const Vector& start,
                             const DescentConfig& config) {
  config.validate();
  problem.check_dimension(start);

  DescentResult result;
  Vector x = start;
  double value = scalarized_value(problem, w, x);
  if (!std::isfinite(value)) throw_non_finite(x);
  if (config.log_iterates) result.iterates.push_back(x);

  Vector g = scalarized_gradient(problem, w, x);
  int k = 0;
  for (; g.norm() > config.grad_tolerance && k < config.max_iterations; ++k) {
    const double slope = g.squaredNorm();
    double t = config.initial_step;
    bool accepted = false;
    Vector trial;
    double trial_value = 0.0;
    while (t >= kMinimumStep) {
      trial = x - t * g;
      try {
        trial_value = scalarized_value(problem, w, trial);
      } catch (const GeometryError&) {
        t *= config.rho;
        continue;
      }
      if (std::isnan(trial_value)) throw_non_finite(trial);
      if (trial_value <= value - config.armijo_slope * t * slope) {
        accepted = true;
        break;
      }
      t *= config.rho;
    }
    if (!accepted) break;  // No decrease representable in floating point.
    x = std::move(trial);
    value = trial_value;
    g = scalarized_gradient(problem, w, x);
    if (config.log_iterates) result.iterates.push_back(x);
  }

  result.x = std::move(x);
  result.iterations = k;
  result.final_grad_norm = g.norm();
  result.converged = result.final_grad_norm <= config.grad_tolerance;
  return result;
}

CriticalWeight lambda_for_critical(const Vector& g0, const Vector& g1) {
  if (g0.size() != g1.size()) throw InputError("gradients have different lengths");
  const Vector diff = g0 - g1;
  const double scale = std::max(g0.norm(), g1.norm());
  if (diff.norm() <= 1e-14 * scale || scale == 0.0) {
    throw InputError("gradients coincide; every weight is equally critical");
  }
  const double unclamped = g0.dot(diff) / diff.squaredNorm();
  const double lambda = std::clamp(unclamped, 0.0, 1.0);
  return {Weight(lambda), ((1.0 - lambda) * g0 + lambda * g1).norm()};
}

}  // namespace pareto
