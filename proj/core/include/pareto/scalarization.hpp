#pragma once

#include <optional>

#include "pareto/problem.hpp"

namespace pareto {

/// (1 - lambda) J0(x) + lambda J1(x)
double scalarized_value(const BiCriteriaProblem& problem, Weight w, const Vector& x);

Vector scalarized_gradient(const BiCriteriaProblem& problem, Weight w, const Vector& x);

Matrix scalarized_hessian(const BiCriteriaProblem& problem, Weight w, const Vector& x);

struct CriticalityReport {
  double grad_norm = 0.0;
  double epsilon = 0.0;
  bool is_critical = false;
  /// epsilon / min(lambda, 1 - lambda). Only defined for lambda strictly inside (0, 1).
  std::optional<double> pareto_epsilon;
};

/// epsilon-criticality of x with respect to J_lambda. Requires epsilon > 0.
CriticalityReport criticality(const BiCriteriaProblem& problem, Weight w, const Vector& x,
                              double epsilon);

/// Same classification from an already computed gradient norm.
CriticalityReport criticality_from_norm(double grad_norm, Weight w, double epsilon);

}  // namespace pareto
