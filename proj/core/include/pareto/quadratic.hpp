#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pareto/problem.hpp"

namespace pareto {

/// J_i(x) = 1/2 (x - chi_i)^T Q_i (x - chi_i) with symmetric positive definite Q_i.
///
/// The scalarized Hessian (1 - lambda) Q0 + lambda Q1 is independent of x
/// and positive definite on all of [0, 1], so the whole front is traceable
/// and known in closed form.
class QuadraticProblem final : public BiCriteriaProblem {
 public:
  /// Throws InputError unless the Q_i are square, symmetric, positive definite
  /// and all sizes agree.
  QuadraticProblem(Matrix q0, Matrix q1, Vector chi0, Vector chi1,
                   std::optional<std::uint64_t> seed = std::nullopt);

  Eigen::Index dimension() const override { return chi0_.size(); }
  double value(Criterion c, const Vector& x) const override;
  Vector gradient(Criterion c, const Vector& x) const override;
  Matrix hessian(Criterion c, const Vector& x) const override;

  const Matrix& q0() const { return q0_; }
  const Matrix& q1() const { return q1_; }
  const Vector& chi0() const { return chi0_; }
  const Vector& chi1() const { return chi1_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

 private:
  Matrix q0_, q1_;
  Vector chi0_, chi1_;
  std::optional<std::uint64_t> seed_;
};

/// Q_j = M_j^T M_j and chi_j with independent standard normal entries, drawn
/// from NormalStream(seed) in the order M0 (row-major), M1, chi0, chi1.
QuadraticProblem random_qp(Eigen::Index n, std::uint64_t seed);

/// Pareto critical point for weight lambda:
/// [(1 - lambda) Q0 + lambda Q1] x = (1 - lambda) Q0 chi0 + lambda Q1 chi1.
Vector analytic_solution(const QuadraticProblem& qp, Weight w);

/// ((1 - lambda) Q0 + lambda Q1)^{-1} (Q0 (x - chi0) - Q1 (x - chi1)) by a direct SPD solve.
Vector qp_rhs_closed_form(const QuadraticProblem& qp, Weight w, const Vector& x);

/// {"n", "seed"} for generated problems, otherwise {"n", "Q0", "Q1", "chi0",
/// "chi1"} with matrices as row-major nested arrays.
nlohmann::json to_json(const QuadraticProblem& qp);
QuadraticProblem quadratic_from_json(const nlohmann::json& doc);

}  // namespace pareto
