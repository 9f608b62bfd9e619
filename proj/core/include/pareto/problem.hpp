#pragma once

#include <functional>
#include <utility>

#include <Eigen/Core>

#include "pareto/errors.hpp"

namespace pareto {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Which of the two criteria J0, J1 an evaluation refers to.
enum class Criterion { kFirst = 0, kSecond = 1 };

/// Scalarization weight lambda in [0, 1]. J_lambda = (1 - lambda) J0 + lambda J1.
class Weight {
 public:
  explicit Weight(double lambda);

  double value() const { return lambda_; }
  double complement() const { return 1.0 - lambda_; }

  friend bool operator==(Weight a, Weight b) { return a.lambda_ == b.lambda_; }

 private:
  double lambda_;
};

template <typename T>
struct CriterionPair {
  T first;
  T second;
};

/// A smooth unconstrained bi-criteria objective J = (J0, J1) on R^n.
///
/// Implementations must be pure: evaluating twice at the same point returns
/// identical values, and concurrent calls from several threads are allowed.
/// The joint evaluators exist so that problems sharing an expensive state
/// (a finite element solve, say) can compute both criteria at once; the
/// defaults simply call the per-criterion versions.
class BiCriteriaProblem {
 public:
  virtual ~BiCriteriaProblem() = default;

  virtual Eigen::Index dimension() const = 0;

  virtual double value(Criterion c, const Vector& x) const = 0;
  virtual Vector gradient(Criterion c, const Vector& x) const = 0;
  /// Symmetric within 1e-8 * (1 + max |entry|).
  virtual Matrix hessian(Criterion c, const Vector& x) const = 0;

  virtual CriterionPair<double> values(const Vector& x) const;
  virtual CriterionPair<Vector> gradients(const Vector& x) const;
  virtual CriterionPair<Matrix> hessians(const Vector& x) const;

  /// Throws InputError when x does not have length dimension().
  void check_dimension(const Vector& x) const;
};

/// BiCriteriaProblem assembled from callables. Mostly useful for tests and
/// small analytic problems.
class FunctionProblem final : public BiCriteriaProblem {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;
  using HessianFn = std::function<Matrix(const Vector&)>;

  struct Criterion {
    ValueFn value;
    GradientFn gradient;
    HessianFn hessian;
  };

  FunctionProblem(Eigen::Index dimension, Criterion first, Criterion second)
      : dimension_(dimension), first_(std::move(first)), second_(std::move(second)) {}

  Eigen::Index dimension() const override { return dimension_; }
  double value(pareto::Criterion c, const Vector& x) const override;
  Vector gradient(pareto::Criterion c, const Vector& x) const override;
  Matrix hessian(pareto::Criterion c, const Vector& x) const override;

 private:
  const Criterion& pick(pareto::Criterion c) const {
    return c == pareto::Criterion::kFirst ? first_ : second_;
  }

  Eigen::Index dimension_;
  Criterion first_;
  Criterion second_;
};

}  // namespace pareto
