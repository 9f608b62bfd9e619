#include "pareto/scalarization.hpp"

#include <algorithm>
#include <string>

namespace pareto {

double scalarized_value(const BiCriteriaProblem& problem, Weight w, const Vector& x) {
  problem.check_dimension(x);
  const auto [j0, j1] = problem.values(x);
  return w.complement() * j0 + w.value() * j1;
}

Vector scalarized_gradient(const BiCriteriaProblem& problem, Weight w, const Vector& x) {
  problem.check_dimension(x);
  const auto [g0, g1] = problem.gradients(x);
  return w.complement() * g0 + w.value() * g1;
}

Matrix scalarized_hessian(const BiCriteriaProblem& problem, Weight w, const Vector& x) {
  problem.check_dimension(x);
  const auto [h0, h1] = problem.hessians(x);
  Matrix h = w.complement() * h0 + w.value() * h1;
  // Both inputs are symmetric; the combination only needs exact symmetry restored.
  return (0.5 * (h + h.transpose())).eval();
}

CriticalityReport criticality_from_norm(double grad_norm, Weight w, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw InputError("criticality tolerance must be positive, got " + std::to_string(epsilon));
  }
  CriticalityReport report;
  report.grad_norm = grad_norm;
  report.epsilon = epsilon;
  report.is_critical = grad_norm <= epsilon;
  const double lambda = w.value();
  if (lambda > 0.0 && lambda < 1.0) {
    report.pareto_epsilon = epsilon / std::min(lambda, 1.0 - lambda);
  }
  return report;
}

CriticalityReport criticality(const BiCriteriaProblem& problem, Weight w, const Vector& x,
                              double epsilon) {
  return criticality_from_norm(scalarized_gradient(problem, w, x).norm(), w, epsilon);
}

}  // namespace pareto
