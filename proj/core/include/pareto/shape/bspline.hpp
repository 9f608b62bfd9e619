#pragma once

#include <vector>

#include "pareto/problem.hpp"

namespace pareto::shape {

/// Clamped B-spline basis of `count` functions and polynomial `degree` on
/// [0, length] with uniformly spaced interior knots. The basis is a
/// partition of unity, the first function is 1 at z = 0 and the last is 1
/// at z = length.
class ClampedBSplineBasis {
 public:
  ClampedBSplineBasis(int count, int degree, double length);

  int count() const { return count_; }
  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }

  /// Values of all basis functions at z (clamped into [0, length]).
  Vector evaluate(double z) const;

  /// Collocation matrix: row i holds the basis values at points[i].
  Matrix collocation(const std::vector<double>& points) const;

  /// Greville abscissae; coefficients equal to a linear function sampled
  /// there reproduce that linear function exactly.
  std::vector<double> greville() const;

 private:
  int count_;
  int degree_;
  double length_;
  std::vector<double> knots_;
};

}  // namespace pareto::shape
