#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "pareto/shape/geometry.hpp"

namespace pareto::shape {

/// Solved P1 plane-strain linear elasticity problem on a joint mesh.
struct FemState {
  Mesh mesh;
  /// Stiffness restricted to the free degrees of freedom (left column clamped).
  Eigen::SparseMatrix<double> stiffness;
  Vector load;
  /// Displacement on the free degrees of freedom.
  Vector free_displacement;
  /// Full displacement, (u_x, u_y) interleaved per node; zero on the clamped column.
  Vector displacement;
  /// Index into the free system for each global dof, -1 when clamped.
  std::vector<int> free_index;
  std::vector<double> areas;
  /// Constant stress per triangle.
  std::vector<Eigen::Matrix2d> stress;
  /// ||B U - F||
  double residual = 0.0;
};

/// Assembles and solves the state equation: u = 0 on the left boundary,
/// horizontal outward traction `surface_load` on the right boundary by a
/// consistent edge load, traction free elsewhere, constant body force.
/// Stresses are sigma = lambda tr(eps) I + 2 mu eps per element.
///
/// Throws NumericalError if the stiffness is not positive definite.
FemState solve_state(const Mesh& mesh, const MaterialData& material);

FemState solve_state(const ShapeGeometry& geometry, const Vector& design,
                     const MaterialData& material);

/// Failure intensity
///   (1/2pi) sum_e area_e sum_k (2pi/N) ((n_k^T sigma_e n_k)^+ / sigma0)^m
/// with n_k = (cos theta_k, sin theta_k), theta_k = 2 pi k / N.
double weibull_intensity(const std::vector<Eigen::Matrix2d>& stress,
                         const std::vector<double>& areas, const MaterialData& material,
                         int n_angles = 64);

double weibull_intensity(const FemState& state, const MaterialData& material, int n_angles = 64);

}  // namespace pareto::shape
