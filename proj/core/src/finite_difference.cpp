#include "pareto/finite_difference.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pareto/linalg.hpp"
#include "pareto/parallel.hpp"

namespace pareto {

double fd_probe_step(double relative_step, double coordinate) {
  return relative_step * (1.0 + std::abs(coordinate));
}

Matrix central_jacobian(const VectorFunction& fn, const Vector& x, double relative_step) {
  if (!(relative_step > 0.0)) throw InputError("finite-difference step must be positive");
  const Eigen::Index n = x.size();
  std::vector<Vector> probes(2 * static_cast<std::size_t>(n));
  parallel_for(probes.size(), [&](std::size_t k) {
    const auto j = static_cast<Eigen::Index>(k / 2);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    Vector shifted = x;
    shifted(j) += sign * fd_probe_step(relative_step, x(j));
    try {
      probes[k] = fn(shifted);
    } catch (const GeometryError& e) {
      throw GeometryError("finite-difference probe along coordinate " + std::to_string(j) +
                              " left the valid region: " + e.what(),
                          static_cast<int>(j));
    }
  });

  const Eigen::Index m = probes.front().size();
  Matrix jac(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto k = 2 * static_cast<std::size_t>(j);
    // Use the actually representable probe distance.
    const double plus = (x(j) + fd_probe_step(relative_step, x(j))) - x(j);
    const double minus = x(j) - (x(j) - fd_probe_step(relative_step, x(j)));
    jac.col(j) = (probes[k] - probes[k + 1]) / (plus + minus);
  }
  return jac;
}

Vector central_gradient(const std::function<double(const Vector&)>& fn, const Vector& x,
                        double relative_step) {
  const VectorFunction wrapped = [&fn](const Vector& p) { return Vector::Constant(1, fn(p)); };
  return central_jacobian(wrapped, x, relative_step).row(0).transpose();
}

Matrix hessian_from_gradient(const VectorFunction& gradient, const Vector& x,
                             double relative_step) {
  return symmetrize(central_jacobian(gradient, x, relative_step));
}

}  // namespace pareto
