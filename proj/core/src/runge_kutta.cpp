#include "pareto/runge_kutta.hpp"

#include <cmath>

namespace pareto {
namespace {

constexpr double kTableauTolerance = 1e-12;

ButcherTableau make(std::string name, int order, Matrix a, Vector b, Vector c) {
  ButcherTableau t{std::move(name), std::move(a), std::move(b), std::move(c), order};
  t.validate();
  return t;
}

}  // namespace

void ButcherTableau::validate() const {
  const Eigen::Index s = b.size();
  if (s < 1) throw InputError("tableau '" + name + "' has no stages");
  if (a.rows() != s || a.cols() != s || c.size() != s) {
    throw InputError("tableau '" + name + "' has inconsistent sizes");
  }
  if (order < 1) throw InputError("tableau '" + name + "' declares order < 1");
  if (std::abs(b.sum() - 1.0) > kTableauTolerance) {
    throw InputError("tableau '" + name + "' weights do not sum to one");
  }
  if (std::abs(c(0)) > kTableauTolerance) throw InputError("tableau '" + name + "' has c1 != 0");
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = i; j < s; ++j) {
      if (a(i, j) != 0.0) throw InputError("tableau '" + name + "' is not explicit");
    }
    if (std::abs(a.row(i).sum() - c(i)) > kTableauTolerance) {
      throw InputError("tableau '" + name + "' violates c_i = sum_j a_ij");
    }
  }
}

ButcherTableau euler_tableau() {
  return make("euler", 1, Matrix::Zero(1, 1), Vector::Ones(1), Vector::Zero(1));
}

ButcherTableau midpoint_tableau() {
  Matrix a = Matrix::Zero(2, 2);
  a(1, 0) = 0.5;
  return make("midpoint", 2, a, Vector{{0.0, 1.0}}, Vector{{0.0, 0.5}});
}

ButcherTableau rk4_tableau() {
  Matrix a = Matrix::Zero(4, 4);
  a(1, 0) = 0.5;
  a(2, 1) = 0.5;
  a(3, 2) = 1.0;
  return make("rk4", 4, a, Vector{{1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0}},
              Vector{{0.0, 0.5, 0.5, 1.0}});
}

std::vector<ButcherTableau> builtin_tableaus() {
  return {euler_tableau(), midpoint_tableau(), rk4_tableau()};
}

ButcherTableau tableau_by_name(const std::string& name) {
  if (name == "euler") return euler_tableau();
  if (name == "midpoint" || name == "rk2") return midpoint_tableau();
  if (name == "rk4") return rk4_tableau();
  throw InputError("unknown Runge-Kutta method '" + name + "'");
}

Vector rk_step(const ButcherTableau& tableau, const RhsFunction& rhs, double lambda,
               const Vector& x, double h, const std::optional<Vector>& first_stage) {
  if (h == 0.0) throw InputError("Runge-Kutta step size must be non-zero");
  const int s = tableau.stages();
  std::vector<Vector> k;
  k.reserve(s);
  for (int i = 0; i < s; ++i) {
    try {
      if (i == 0 && first_stage) {
        k.push_back(*first_stage);
        continue;
      }
      Vector stage_x = x;
      for (int j = 0; j < i; ++j) {
        if (tableau.a(i, j) != 0.0) stage_x += (h * tableau.a(i, j)) * k[j];
      }
      k.push_back(rhs(lambda + tableau.c(i) * h, stage_x));
    } catch (Error& e) {
      e.set_stage(i + 1);
      throw;
    }
    if (k.back().size() != x.size()) throw InputError("right-hand side changed dimension");
  }
  Vector increment = Vector::Zero(x.size());
  for (int i = 0; i < s; ++i) {
    if (tableau.b(i) != 0.0) increment += tableau.b(i) * k[i];
  }
  return x + h * increment;
}

}  // namespace pareto
