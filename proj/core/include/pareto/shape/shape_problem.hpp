#pragma once

#include "pareto/problem.hpp"
#include "pareto/shape/elasticity.hpp"
#include "pareto/shape/geometry.hpp"

namespace pareto::shape {

/// Volume (J0) against Weibull failure intensity (J1) of a ceramic joint,
/// as a function of the free B-spline coefficients.
///
/// Gradients are central differences of the objective values and Hessians
/// central differences of those gradients, both with the relative step
/// ShapeConfig::fd_step; probes are evaluated concurrently.
class ShapeProblem final : public BiCriteriaProblem {
 public:
  explicit ShapeProblem(ShapeConfig config);

  const ShapeConfig& config() const { return config_; }

  Eigen::Index dimension() const override { return config_.geometry.design_dimension(); }

  double value(Criterion c, const Vector& x) const override;
  Vector gradient(Criterion c, const Vector& x) const override;
  Matrix hessian(Criterion c, const Vector& x) const override;

  CriterionPair<double> values(const Vector& x) const override;
  CriterionPair<Vector> gradients(const Vector& x) const override;
  CriterionPair<Matrix> hessians(const Vector& x) const override;

  /// Straight rod (or linear interpolation of the boundary data).
  Vector initial_design() const;

  /// Meanline and thickness at the mesh columns.
  std::pair<Vector, Vector> profiles(const Vector& x) const;

  FemState state(const Vector& x) const;

 private:
  Vector stacked_values(const Vector& x) const;
  Vector stacked_gradients(const Vector& x) const;

  ShapeConfig config_;
};

}  // namespace pareto::shape
