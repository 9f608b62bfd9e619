#pragma once

#include <vector>

#include "pareto/problem.hpp"

namespace pareto {

struct DescentConfig {
  /// Backtracking factor.
  double rho = 0.5;
  /// Sufficient-decrease constant of the Armijo condition.
  double armijo_slope = 1e-4;
  int max_iterations = 10000;
  /// Stop once ||grad J_lambda|| <= grad_tolerance.
  double grad_tolerance = 1e-6;
  double initial_step = 1.0;
  bool log_iterates = false;

  void validate() const;
};

struct DescentResult {
  Vector x;
  int iterations = 0;
  double final_grad_norm = 0.0;
  bool converged = false;
  /// x_{0,0}, x_{0,1}, ... when DescentConfig::log_iterates is set.
  std::vector<Vector> iterates;
};

/// Steepest descent on J_lambda with backtracking Armijo line search.
///
/// A trial point whose geometry is invalid (GeometryError) is treated as a
/// failed Armijo test and the step is shrunk. Non-finite objective values
/// raise NumericalError naming the offending point.
DescentResult armijo_descent(const BiCriteriaProblem& problem, Weight w, const Vector& start,
                             const DescentConfig& config = {});

struct CriticalWeight {
  Weight lambda{0.0};
  /// ||(1 - lambda) g0 + lambda g1|| at the returned weight.
  double residual = 0.0;
};

/// Weight for which x is closest to critical: the minimizer of
/// ||(1 - lambda) g0 + lambda g1|| over [0, 1], given g0 = grad J0(x) and
/// g1 = grad J1(x). Throws InputError when g0 and g1 coincide (every weight
/// is equivalent).
CriticalWeight lambda_for_critical(const Vector& g0, const Vector& g1);

}  // namespace pareto
