#include "pareto/shape/elasticity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SparseCholesky>

namespace pareto::shape {
namespace {

using Strain = Eigen::Matrix<double, 3, 6>;

// Strain-displacement matrix of a P1 triangle; rows eps_xx, eps_yy, gamma_xy.
Strain strain_operator(const Mesh& mesh, const std::array<int, 3>& t, double area) {
  Strain b = Strain::Zero();
  for (int a = 0; a < 3; ++a) {
    const Eigen::Vector2d& pj = mesh.nodes[t[(a + 1) % 3]];
    const Eigen::Vector2d& pk = mesh.nodes[t[(a + 2) % 3]];
    const double dx = (pj.y() - pk.y()) / (2.0 * area);
    const double dy = (pk.x() - pj.x()) / (2.0 * area);
    b(0, 2 * a) = dx;
    b(1, 2 * a + 1) = dy;
    b(2, 2 * a) = dy;
    b(2, 2 * a + 1) = dx;
  }
  return b;
}

Eigen::Matrix3d plane_strain_law(const MaterialData& material) {
  const double lam = material.lame_lambda();
  const double mu = material.lame_mu();
  Eigen::Matrix3d d;
  d << lam + 2.0 * mu, lam, 0.0,  //
      lam, lam + 2.0 * mu, 0.0,   //
      0.0, 0.0, mu;
  return d;
}

}  // namespace

FemState solve_state(const Mesh& mesh, const MaterialData& material) {
  material.validate();
  const int n_nodes = static_cast<int>(mesh.nodes.size());
  const int n_dofs = 2 * n_nodes;

  FemState state;
  state.mesh = mesh;
  state.free_index.assign(static_cast<std::size_t>(n_dofs), -1);
  int n_free = 0;
  for (int node = 0; node < n_nodes; ++node) {
    if (node < mesh.ny) continue;  // Column 0 is clamped.
    state.free_index[2 * node] = n_free++;
    state.free_index[2 * node + 1] = n_free++;
  }

  const Eigen::Matrix3d law = plane_strain_law(material);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(mesh.triangles.size() * 36);
  state.load = Vector::Zero(n_free);
  state.areas.reserve(mesh.triangles.size());

  std::vector<Strain> operators;
  operators.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) {
    const double area = triangle_area(mesh, t);
    if (!(area > 0.0)) throw GeometryError("degenerate or inverted triangle in mesh");
    const Strain b = strain_operator(mesh, t, area);
    const Eigen::Matrix<double, 6, 6> ke = area * b.transpose() * law * b;
    for (int a = 0; a < 6; ++a) {
      const int ga = state.free_index[2 * t[a / 2] + a % 2];
      if (ga < 0) continue;
      for (int c = 0; c < 6; ++c) {
        const int gc = state.free_index[2 * t[c / 2] + c % 2];
        if (gc >= 0) triplets.emplace_back(ga, gc, ke(a, c));
      }
      state.load(ga) += material.body_force(a % 2) * area / 3.0;
    }
    state.areas.push_back(area);
    operators.push_back(b);
  }

  // Consistent load of a constant traction on the right edge segments.
  const int last = mesh.nx - 1;
  for (int j = 0; j + 1 < mesh.ny; ++j) {
    const int lower = mesh.node(last, j), upper = mesh.node(last, j + 1);
    const double edge = (mesh.nodes[upper] - mesh.nodes[lower]).norm();
    for (const int node : {lower, upper}) {
      const int g = state.free_index[2 * node];
      if (g >= 0) state.load(g) += 0.5 * material.surface_load * edge;
    }
  }

  state.stiffness.resize(n_free, n_free);
  state.stiffness.setFromTriplets(triplets.begin(), triplets.end());

  const Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> solver(state.stiffness);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("stiffness matrix is not positive definite");
  }
  state.free_displacement = solver.solve(state.load);
  state.residual = (state.stiffness * state.free_displacement - state.load).norm();

  state.displacement = Vector::Zero(n_dofs);
  for (int g = 0; g < n_dofs; ++g) {
    if (state.free_index[g] >= 0) state.displacement(g) = state.free_displacement(state.free_index[g]);
  }

  state.stress.reserve(mesh.triangles.size());
  for (std::size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto& t = mesh.triangles[e];
    Eigen::Matrix<double, 6, 1> ue;
    for (int a = 0; a < 3; ++a) {
      ue(2 * a) = state.displacement(2 * t[a]);
      ue(2 * a + 1) = state.displacement(2 * t[a] + 1);
    }
    const Eigen::Vector3d s = law * (operators[e] * ue);
    Eigen::Matrix2d sigma;
    sigma << s(0), s(2), s(2), s(1);
    state.stress.push_back(sigma);
  }
  return state;
}

FemState solve_state(const ShapeGeometry& geometry, const Vector& design,
                     const MaterialData& material) {
  return solve_state(build_mesh(geometry, design), material);
}

double weibull_intensity(const std::vector<Eigen::Matrix2d>& stress,
                         const std::vector<double>& areas, const MaterialData& material,
                         int n_angles) {
  if (stress.size() != areas.size()) throw InputError("stress and area lists differ in length");
  if (n_angles < 1) throw InputError("need at least one quadrature angle");
  std::vector<double> cc(static_cast<std::size_t>(n_angles)), ss(cc.size()), cs(cc.size());
  for (int k = 0; k < n_angles; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_angles;
    cc[k] = std::cos(theta) * std::cos(theta);
    ss[k] = std::sin(theta) * std::sin(theta);
    cs[k] = 2.0 * std::cos(theta) * std::sin(theta);
  }
  const double m = material.weibull_module;
  double total = 0.0;
  for (std::size_t e = 0; e < stress.size(); ++e) {
    const Eigen::Matrix2d& s = stress[e];
    double angular = 0.0;
    for (int k = 0; k < n_angles; ++k) {
      const double normal = s(0, 0) * cc[k] + s(0, 1) * cs[k] + s(1, 1) * ss[k];
      if (normal > 0.0) angular += std::pow(normal / material.sigma0, m);
    }
    total += areas[e] * angular / n_angles;
  }
  return total;
}

double weibull_intensity(const FemState& state, const MaterialData& material, int n_angles) {
  return weibull_intensity(state.stress, state.areas, material, n_angles);
}

}  // namespace pareto::shape
