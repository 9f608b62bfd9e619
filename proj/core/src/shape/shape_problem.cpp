#include "pareto/shape/shape_problem.hpp"

#include "pareto/finite_difference.hpp"

namespace pareto::shape {

ShapeProblem::ShapeProblem(ShapeConfig config) : config_(std::move(config)) { config_.validate(); }

double ShapeProblem::value(Criterion c, const Vector& x) const {
  check_dimension(x);
  if (c == Criterion::kFirst) return volume(build_mesh(config_.geometry, x));
  return values(x).second;
}

CriterionPair<double> ShapeProblem::values(const Vector& x) const {
  const FemState s = state(x);
  return {volume(s.mesh), weibull_intensity(s, config_.material, config_.n_angles)};
}

Vector ShapeProblem::stacked_values(const Vector& x) const {
  const auto [j0, j1] = values(x);
  return Vector{{j0, j1}};
}

Vector ShapeProblem::stacked_gradients(const Vector& x) const {
  const Matrix jac =
      central_jacobian([this](const Vector& p) { return stacked_values(p); }, x, config_.fd_step);
  Vector out(2 * x.size());
  out << jac.row(0).transpose(), jac.row(1).transpose();
  return out;
}

Vector ShapeProblem::gradient(Criterion c, const Vector& x) const {
  check_dimension(x);
  if (c == Criterion::kFirst) {
    return central_gradient(
        [this](const Vector& p) { return volume(build_mesh(config_.geometry, p)); }, x,
        config_.fd_step);
  }
  return gradients(x).second;
}

CriterionPair<Vector> ShapeProblem::gradients(const Vector& x) const {
  check_dimension(x);
  const Vector stacked = stacked_gradients(x);
  const Eigen::Index n = x.size();
  return {stacked.head(n), stacked.tail(n)};
}

Matrix ShapeProblem::hessian(Criterion c, const Vector& x) const {
  const auto pair = hessians(x);
  return c == Criterion::kFirst ? pair.first : pair.second;
}

CriterionPair<Matrix> ShapeProblem::hessians(const Vector& x) const {
  check_dimension(x);
  const Eigen::Index n = x.size();
  const Matrix jac = central_jacobian([this](const Vector& p) { return stacked_gradients(p); }, x,
                                      config_.fd_step);
  const Matrix h0 = jac.topRows(n);
  const Matrix h1 = jac.bottomRows(n);
  return {0.5 * (h0 + h0.transpose()), 0.5 * (h1 + h1.transpose())};
}

Vector ShapeProblem::initial_design() const { return shape::initial_design(config_.geometry); }

std::pair<Vector, Vector> ShapeProblem::profiles(const Vector& x) const {
  check_dimension(x);
  return bspline_profiles(config_.geometry, x);
}

FemState ShapeProblem::state(const Vector& x) const {
  check_dimension(x);
  return solve_state(config_.geometry, x, config_.material);
}

}  // namespace pareto::shape
