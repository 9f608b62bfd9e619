#include "pareto/quadratic.hpp"

#include <string>

#include <Eigen/Cholesky>

#include "pareto/linalg.hpp"
#include "pareto/random.hpp"

namespace pareto {
namespace {

void require_spd(const Matrix& q, const char* name) {
  if (q.rows() != q.cols()) throw InputError(std::string(name) + " is not square");
  if (!is_symmetric(q)) throw InputError(std::string(name) + " is not symmetric");
  const Eigen::LLT<Matrix> llt(q);
  if (llt.info() != Eigen::Success) {
    throw InputError(std::string(name) + " is not positive definite");
  }
}

Matrix weighted_hessian(const QuadraticProblem& qp, Weight w) {
  return w.complement() * qp.q0() + w.value() * qp.q1();
}

Eigen::LLT<Matrix> factor(const Matrix& h) {
  Eigen::LLT<Matrix> llt(h);
  if (llt.info() != Eigen::Success) throw NumericalError("weighted Hessian is not positive definite");
  return llt;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Matrix matrix_from_json(const nlohmann::json& doc, Eigen::Index n, const char* name) {
  if (!doc.is_array() || static_cast<Eigen::Index>(doc.size()) != n) {
    throw InputError(std::string(name) + " must be an array of " + std::to_string(n) + " rows");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError(std::string(name) + " rows must have " + std::to_string(n) + " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

Vector vector_from_json(const nlohmann::json& doc, Eigen::Index n, const char* name) {
  if (!doc.is_array() || static_cast<Eigen::Index>(doc.size()) != n) {
    throw InputError(std::string(name) + " must be an array of length " + std::to_string(n));
  }
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = doc[static_cast<std::size_t>(i)].get<double>();
  return v;
}

}  // namespace

QuadraticProblem::QuadraticProblem(Matrix q0, Matrix q1, Vector chi0, Vector chi1,
                                   std::optional<std::uint64_t> seed)
    : q0_(std::move(q0)), q1_(std::move(q1)), chi0_(std::move(chi0)), chi1_(std::move(chi1)),
      seed_(seed) {
  const Eigen::Index n = chi0_.size();
  if (n < 1) throw InputError("quadratic problem needs dimension >= 1");
  if (chi1_.size() != n || q0_.rows() != n || q1_.rows() != n) {
    throw InputError("quadratic problem data have inconsistent sizes");
  }
  require_spd(q0_, "Q0");
  require_spd(q1_, "Q1");
}

double QuadraticProblem::value(Criterion c, const Vector& x) const {
  check_dimension(x);
  const bool first = c == Criterion::kFirst;
  const Vector d = x - (first ? chi0_ : chi1_);
  return 0.5 * d.dot((first ? q0_ : q1_) * d);
}

Vector QuadraticProblem::gradient(Criterion c, const Vector& x) const {
  check_dimension(x);
  const bool first = c == Criterion::kFirst;
  return (first ? q0_ : q1_) * (x - (first ? chi0_ : chi1_));
}

Matrix QuadraticProblem::hessian(Criterion c, const Vector& x) const {
  check_dimension(x);
  return c == Criterion::kFirst ? q0_ : q1_;
}

QuadraticProblem random_qp(Eigen::Index n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_qp needs n >= 1");
  NormalStream normal(seed);
  auto draw_matrix = [&] {
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = normal.next();
    }
    return m;
  };
  auto draw_vector = [&] {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal.next();
    return v;
  };
  const Matrix m0 = draw_matrix();
  const Matrix m1 = draw_matrix();
  Vector chi0 = draw_vector();
  Vector chi1 = draw_vector();
  Matrix q0 = m0.transpose() * m0;
  Matrix q1 = m1.transpose() * m1;
  // The Gram products are symmetric up to summation order; make it exact.
  q0 = symmetrize(q0);
  q1 = symmetrize(q1);
  return QuadraticProblem(std::move(q0), std::move(q1), std::move(chi0), std::move(chi1), seed);
}

Vector analytic_solution(const QuadraticProblem& qp, Weight w) {
  const Vector rhs = w.complement() * (qp.q0() * qp.chi0()) + w.value() * (qp.q1() * qp.chi1());
  return factor(weighted_hessian(qp, w)).solve(rhs);
}

Vector qp_rhs_closed_form(const QuadraticProblem& qp, Weight w, const Vector& x) {
  qp.check_dimension(x);
  const Vector rhs = qp.q0() * (x - qp.chi0()) - qp.q1() * (x - qp.chi1());
  return factor(weighted_hessian(qp, w)).solve(rhs);
}

nlohmann::json to_json(const QuadraticProblem& qp) {
  if (qp.seed()) return {{"n", qp.dimension()}, {"seed", *qp.seed()}};
  return {{"n", qp.dimension()},
          {"Q0", matrix_to_json(qp.q0())},
          {"Q1", matrix_to_json(qp.q1())},
          {"chi0", vector_to_json(qp.chi0())},
          {"chi1", vector_to_json(qp.chi1())}};
}

QuadraticProblem quadratic_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n")) throw InputError("quadratic problem needs field 'n'");
  const auto n = doc.at("n").get<Eigen::Index>();
  if (n < 1) throw InputError("quadratic problem needs n >= 1");
  if (!doc.contains("Q0")) {
    if (!doc.contains("seed")) throw InputError("quadratic problem needs 'seed' or explicit data");
    return random_qp(n, doc.at("seed").get<std::uint64_t>());
  }
  for (const char* key : {"Q1", "chi0", "chi1"}) {
    if (!doc.contains(key)) throw InputError(std::string("quadratic problem is missing '") + key + "'");
  }
  return QuadraticProblem(matrix_from_json(doc.at("Q0"), n, "Q0"),
                          matrix_from_json(doc.at("Q1"), n, "Q1"),
                          vector_from_json(doc.at("chi0"), n, "chi0"),
                          vector_from_json(doc.at("chi1"), n, "chi1"));
}

}  // namespace pareto
