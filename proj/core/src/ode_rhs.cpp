#include "pareto/ode_rhs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "pareto/linalg.hpp"
#include "pareto/parallel.hpp"
#include "pareto/scalarization.hpp"

namespace pareto {
namespace {

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  for (int candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    const bool prime = std::none_of(primes.begin(), primes.end(), [&](int p) {
      return p * p <= candidate && candidate % p == 0;
    });
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

double radical_inverse(long long index, int base) {
  double result = 0.0;
  double digit_weight = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % base) * digit_weight;
    index /= base;
    digit_weight /= base;
  }
  return result;
}

// Halton points in [-1,1]^n, radially projected into the unit ball.
std::vector<Vector> ball_samples(Eigen::Index n, int count) {
  const std::vector<int> primes = first_primes(static_cast<int>(n));
  std::vector<Vector> points;
  points.reserve(count);
  for (int s = 0; s < count; ++s) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = 2.0 * radical_inverse(s + 1, primes[i]) - 1.0;
    const double norm = v.norm();
    if (norm > 1.0) v /= norm;
    points.push_back(std::move(v));
  }
  return points;
}

}  // namespace

PointEvaluation evaluate_point(const BiCriteriaProblem& problem, Weight w, const Vector& x) {
  problem.check_dimension(x);
  PointEvaluation eval{problem.gradients(x), problem.hessians(x), {}, {}, {}};
  eval.scalarized_hessian =
      symmetrize(w.complement() * eval.hessians.first + w.value() * eval.hessians.second);
  eval.scalarized_gradient = w.complement() * eval.gradients.first + w.value() * eval.gradients.second;

  const Matrix& h = eval.scalarized_hessian;
  const double lowest = min_eigenvalue(h);
  if (!(lowest > 0.0)) throw DefinitenessLost(w.value(), x, lowest);

  const Eigen::LLT<Matrix> llt(h);
  if (llt.info() != Eigen::Success) throw DefinitenessLost(w.value(), x, lowest);

  const Vector difference = eval.gradients.first - eval.gradients.second;
  Vector f = llt.solve(difference);
  // One refinement sweep keeps the residual at round-off level for
  // moderately ill-conditioned Hessians.
  f += llt.solve(difference - h * f);
  if (!f.allFinite()) throw NumericalError("non-finite ODE right-hand side");

  eval.rhs.f = std::move(f);
  eval.rhs.min_eigenvalue = lowest;
  eval.rhs.solve_residual = (h * eval.rhs.f - difference).norm();
  return eval;
}

RhsReport rhs(const BiCriteriaProblem& problem, Weight w, const Vector& x) {
  return evaluate_point(problem, w, x).rhs;
}

double lambda_sensitivity(const BiCriteriaProblem& problem, const Vector& x) {
  problem.check_dimension(x);
  const auto [h0, h1] = problem.hessians(x);
  return spectral_norm(h0) + spectral_norm(h1);
}

double lipschitz_constant_of_rhs(double c1, double c2, double l_h, double rho,
                                 double min_eigenvalue) {
  const double inverse_floor = 1.0 / (rho * min_eigenvalue);
  return 2.0 * (inverse_floor * c2 + inverse_floor * inverse_floor * l_h * c1);
}

LipschitzEstimates lipschitz_estimates(const BiCriteriaProblem& problem, Weight w, const Vector& x,
                                       double delta, double rho, int samples) {
  problem.check_dimension(x);
  if (!(delta > 0.0)) throw InputError("ball radius delta must be positive");
  if (!(rho > 0.0 && rho < 1.0)) throw InputError("rho must lie in (0, 1)");
  if (samples < 0) throw InputError("sample count must be non-negative");

  const auto center_hessians = problem.hessians(x);
  const Matrix h = symmetrize(w.complement() * center_hessians.first +
                              w.value() * center_hessians.second);
  const double lowest = min_eigenvalue(h);
  if (!(lowest > 0.0)) throw DefinitenessLost(w.value(), x, lowest);

  std::vector<Vector> points{x};
  for (Vector& offset : ball_samples(x.size(), samples)) points.push_back(x + delta * offset);

  struct Sample {
    CriterionPair<Vector> gradients;
    CriterionPair<Matrix> hessians;
  };
  std::vector<Sample> evaluated(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    evaluated[i] = {problem.gradients(points[i]),
                    i == 0 ? center_hessians : problem.hessians(points[i])};
  });

  LipschitzEstimates est;
  est.delta = delta;
  est.rho = rho;
  est.min_eigenvalue = lowest;
  est.l_lambda = spectral_norm(center_hessians.first) + spectral_norm(center_hessians.second);

  for (const Sample& s : evaluated) {
    est.c1 = std::max({est.c1, s.gradients.first.norm(), s.gradients.second.norm()});
    est.c2 = std::max({est.c2, spectral_norm(s.hessians.first), spectral_norm(s.hessians.second)});
  }

  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const double distance = (points[a] - points[b]).norm();
      if (distance == 0.0) continue;
      for (const bool first : {true, false}) {
        const Matrix& ha = first ? evaluated[a].hessians.first : evaluated[a].hessians.second;
        const Matrix& hb = first ? evaluated[b].hessians.first : evaluated[b].hessians.second;
        const Matrix diff = ha - hb;
        // Spectral norm <= Frobenius norm: skip pairs that cannot raise the max.
        if (diff.norm() / distance <= est.l_h) continue;
        est.l_h = std::max(est.l_h, spectral_norm(diff) / distance);
      }
    }
  }

  est.l_f = lipschitz_constant_of_rhs(est.c1, est.c2, est.l_h, rho, lowest);
  return est;
}

GronwallBound gronwall_bound(double initial_error, double rhs_error, double l_f, double span_left,
                             double span_right) {
  for (const double v : {initial_error, rhs_error, l_f, span_left, span_right}) {
    if (!(v >= 0.0)) throw InputError("Gronwall bound inputs must be non-negative");
  }
  const double span = std::max(span_left, span_right);
  GronwallBound out{initial_error, rhs_error, l_f, span_left, span_right, 0.0};
  const double growth = std::expm1(l_f * span);
  out.bound = initial_error * (1.0 + growth);
  if (rhs_error > 0.0) out.bound += l_f > 0.0 ? rhs_error / l_f * growth : rhs_error * span;
  return out;
}

}  // namespace pareto
