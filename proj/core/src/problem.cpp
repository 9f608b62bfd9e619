#include "pareto/problem.hpp"

#include <cmath>
#include <string>

namespace pareto {

DefinitenessLost::DefinitenessLost(double lambda, Eigen::VectorXd x, double min_eigenvalue)
    : Error("lost second-order optimality at lambda=" + std::to_string(lambda) +
            " (smallest Hessian eigenvalue " + std::to_string(min_eigenvalue) + ")"),
      lambda_(lambda),
      x_(std::move(x)),
      min_eigenvalue_(min_eigenvalue) {}

Weight::Weight(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("weight must lie in [0, 1], got " + std::to_string(lambda));
  }
}

CriterionPair<double> BiCriteriaProblem::values(const Vector& x) const {
  return {value(Criterion::kFirst, x), value(Criterion::kSecond, x)};
}

CriterionPair<Vector> BiCriteriaProblem::gradients(const Vector& x) const {
  return {gradient(Criterion::kFirst, x), gradient(Criterion::kSecond, x)};
}

CriterionPair<Matrix> BiCriteriaProblem::hessians(const Vector& x) const {
  return {hessian(Criterion::kFirst, x), hessian(Criterion::kSecond, x)};
}

void BiCriteriaProblem::check_dimension(const Vector& x) const {
  if (x.size() != dimension()) {
    throw InputError("point has length " + std::to_string(x.size()) + ", problem dimension is " +
                     std::to_string(dimension()));
  }
}

double FunctionProblem::value(pareto::Criterion c, const Vector& x) const {
  check_dimension(x);
  return pick(c).value(x);
}

Vector FunctionProblem::gradient(pareto::Criterion c, const Vector& x) const {
  check_dimension(x);
  return pick(c).gradient(x);
}

Matrix FunctionProblem::hessian(pareto::Criterion c, const Vector& x) const {
  check_dimension(x);
  return pick(c).hessian(x);
}

}  // namespace pareto
