#pragma once

#include "pareto/problem.hpp"

namespace pareto {

/// Right-hand side of the tracing ODE dx/dlambda = f(lambda, x) at one point.
struct RhsReport {
  Vector f;
  /// Smallest eigenvalue of the scalarized Hessian at (lambda, x).
  double min_eigenvalue = 0.0;
  /// || H f - (grad J0 - grad J1) ||
  double solve_residual = 0.0;
};

/// Everything the tracer needs about one point, computed from a single
/// joint evaluation of gradients and Hessians.
struct PointEvaluation {
  CriterionPair<Vector> gradients;
  CriterionPair<Matrix> hessians;
  Matrix scalarized_hessian;
  Vector scalarized_gradient;
  RhsReport rhs;
};

/// Solves grad^2 J_lambda(x) f = grad J0(x) - grad J1(x) with a Cholesky
/// factorization (never an explicit inverse).
///
/// Throws DefinitenessLost when the factorization fails or the smallest
/// eigenvalue is not positive: the trace has reached the boundary of its
/// maximal interval of existence.
RhsReport rhs(const BiCriteriaProblem& problem, Weight w, const Vector& x);

PointEvaluation evaluate_point(const BiCriteriaProblem& problem, Weight w, const Vector& x);

/// ||grad^2 J0(x)|| + ||grad^2 J1(x)||, the Lipschitz constant of the smallest
/// scalarized eigenvalue as a function of lambda.
double lambda_sensitivity(const BiCriteriaProblem& problem, const Vector& x);

/// Sampled local Lipschitz data on the ball B_delta(x).
///
/// The suprema over the ball are replaced by maxima over a deterministic
/// sample set, so every field (and therefore l_f) is a statistical lower
/// estimate of the analytic constant, not a rigorous bound.
struct LipschitzEstimates {
  double l_lambda = 0.0;
  /// Hessian Lipschitz constant on the ball (max over sampled pairs).
  double l_h = 0.0;
  /// max_i sup ||grad J_i|| on the ball.
  double c1 = 0.0;
  /// max_i sup ||grad^2 J_i|| on the ball.
  double c2 = 0.0;
  /// 2 (C2 / (rho Lambda) + L_H C1 / (rho Lambda)^2)
  double l_f = 0.0;
  double delta = 0.0;
  double rho = 0.0;
  /// Lambda(lambda, x) at the center.
  double min_eigenvalue = 0.0;
};

inline constexpr int kDefaultLipschitzSamples = 32;
inline constexpr double kDefaultRho = 0.5;

/// Assembles L_f from its components. Exposed so the closed form can be checked.
double lipschitz_constant_of_rhs(double c1, double c2, double l_h, double rho,
                                 double min_eigenvalue);

/// Estimates C1, C2 and L_H from `samples` low-discrepancy points in
/// B_delta(x) plus the center. samples = 0 uses the center only.
///
/// The sample points are the leading points of a Halton sequence mapped
/// from [-1,1]^n into the ball by radial projection. Evaluations are
/// independent and reduced with an order-independent max.
LipschitzEstimates lipschitz_estimates(const BiCriteriaProblem& problem, Weight w, const Vector& x,
                                       double delta, double rho = kDefaultRho,
                                       int samples = kDefaultLipschitzSamples);

/// Continuous-dependence bound for a trace started at a perturbed point
/// and driven by a perturbed right-hand side.
struct GronwallBound {
  double initial_error = 0.0;
  double rhs_error = 0.0;
  double l_f = 0.0;
  double span_left = 0.0;
  double span_right = 0.0;
  double bound = 0.0;
};

/// bound = e0 exp(L_f m) + (e_f / L_f)(exp(L_f m) - 1), m = max(span_left, span_right).
/// With L_f = 0 the second term takes its limit e_f m.
GronwallBound gronwall_bound(double initial_error, double rhs_error, double l_f, double span_left,
                             double span_right);

}  // namespace pareto
