#include "pareto/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pareto {
namespace {

constexpr double kEigenTolerance = 1e-8;
constexpr int kMaxInverseIterations = 10000;
constexpr double kBracketTolerance = 1e-6;

void require_symmetric(const Matrix& h) {
  if (h.rows() != h.cols()) throw InputError("matrix is not square");
  if (!is_symmetric(h)) throw InputError("matrix is not symmetric within tolerance");
}

double gershgorin_lower_bound(const Matrix& h) {
  double bound = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    const double radius = h.row(i).cwiseAbs().sum() - std::abs(h(i, i));
    bound = std::min(bound, h(i, i) - radius);
  }
  return bound;
}

// Inverse iteration on (h - shift I), which must be positive definite.
double inverse_iteration(const Matrix& h, double shift) {
  const Eigen::Index n = h.rows();
  const Matrix shifted = h - shift * Matrix::Identity(n, n);
  const Eigen::LLT<Matrix> llt(shifted);
  if (llt.info() != Eigen::Success) throw NumericalError("shifted matrix is not positive definite");

  // Deterministic start that is not orthogonal to any coordinate axis.
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = 1.0 + 0.5 * std::sin(static_cast<double>(i + 1));
  v.normalize();

  double estimate = v.dot(h * v);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  for (int iter = 0; iter < kMaxInverseIterations; ++iter) {
    Vector w = llt.solve(v);
    v = w / w.norm();
    const Vector hv = h * v;
    const double next = v.dot(hv);
    const double residual = (hv - next * v).norm();
    const bool settled = std::abs(next - estimate) <= kEigenTolerance * std::max(std::abs(next), 1e-300);
    estimate = next;
    if (settled && residual <= kEigenTolerance * scale) break;
  }
  return estimate;
}

}  // namespace

double symmetry_tolerance(const Matrix& m) {
  const double max_entry = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  return 1e-8 * (1.0 + max_entry);
}

bool is_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= symmetry_tolerance(m);
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

double min_eigenvalue(const Matrix& h) {
  require_symmetric(h);
  if (h.rows() == 0) throw InputError("empty matrix has no eigenvalues");
  const Matrix sym = symmetrize(h);
  if (sym.rows() <= kDenseEigenLimit) {
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    return solver.eigenvalues()(0);
  }
  // Bracket the bottom of the spectrum: a shift whose Cholesky factorization
  // succeeds lies below it, the smallest diagonal entry does not. Bisection
  // tightens the shift so the inverse iteration converges in a few steps.
  auto below_spectrum = [&sym](double shift) {
    return Eigen::LLT<Matrix>(sym - shift * Matrix::Identity(sym.rows(), sym.rows())).info() ==
           Eigen::Success;
  };
  double lo = 0.0;
  if (!below_spectrum(lo)) {
    const double lower = gershgorin_lower_bound(sym);
    lo = lower - 1e-3 * std::max(1.0, std::abs(lower));
  }
  double hi = sym.diagonal().minCoeff();
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  while (hi - lo > kBracketTolerance * scale) {
    const double mid = 0.5 * (lo + hi);
    (below_spectrum(mid) ? lo : hi) = mid;
  }
  return inverse_iteration(sym, lo);
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() && is_symmetric(m)) {
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  const Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace pareto
