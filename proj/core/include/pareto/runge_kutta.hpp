#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pareto/problem.hpp"

namespace pareto {

/// Coefficients of an explicit s-stage Runge-Kutta method.
struct ButcherTableau {
  std::string name;
  /// Strictly lower triangular s x s.
  Matrix a;
  Vector b;
  Vector c;
  int order = 1;

  int stages() const { return static_cast<int>(b.size()); }

  /// Throws InputError unless sum(b) = 1, c_i = sum_j a_ij, c_1 = 0 and a is
  /// strictly lower triangular (all within 1e-12).
  void validate() const;
};

ButcherTableau euler_tableau();
/// x1 = x0 + h f(lambda + h/2, x0 + h/2 f(lambda, x0))
ButcherTableau midpoint_tableau();
ButcherTableau rk4_tableau();

/// Euler, midpoint and classical RK4, in that order.
std::vector<ButcherTableau> builtin_tableaus();

/// Looks up a builtin by name ("euler", "midpoint" or "rk2", "rk4").
ButcherTableau tableau_by_name(const std::string& name);

using RhsFunction = std::function<Vector(double lambda, const Vector& x)>;

/// One explicit Runge-Kutta step of signed length h (h < 0 integrates backwards).
///
/// `first_stage` may carry a precomputed k1 = f(lambda, x). Errors raised by
/// `rhs` propagate unchanged apart from the stage index being recorded.
Vector rk_step(const ButcherTableau& tableau, const RhsFunction& rhs, double lambda,
               const Vector& x, double h, const std::optional<Vector>& first_stage = std::nullopt);

}  // namespace pareto
