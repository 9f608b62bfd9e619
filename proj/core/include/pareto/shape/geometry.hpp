#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "pareto/problem.hpp"
#include "pareto/shape/bspline.hpp"

namespace pareto::shape {

/// Isotropic linear-elastic ceramic with Weibull failure statistics. SI units.
struct MaterialData {
  double youngs_modulus = 320e9;
  double poisson_ratio = 0.25;
  double weibull_module = 5.0;
  /// Weibull scale. The default is the ultimate tensile strength of BeO.
  double sigma0 = 140e6;
  /// Horizontal outward traction on the right boundary.
  double surface_load = 1e7;
  Eigen::Vector2d body_force = Eigen::Vector2d::Zero();

  /// Throws InputError unless E > 0, 0 < nu < 0.5, 5 <= m <= 25, sigma0 > 0.
  void validate() const;

  /// nu E / ((1 + nu)(1 - 2 nu))
  double lame_lambda() const;
  /// E / (2 (1 + nu))
  double lame_mu() const;
};

/// Fixed data of a meanline/thickness parameterized joint on [0, length].
///
/// The design vector holds the free B-spline coefficients
/// (x^ml_2 .. x^ml_{nB-1}, x^th_2 .. x^th_{nB-1}); the first and last
/// coefficient of each profile are pinned to the boundary midlines and
/// heights, which the clamped spline then interpolates.
struct ShapeGeometry {
  int nx = 41;
  int ny = 7;
  double length = 1.0;
  double left_height = 0.2;
  double right_height = 0.2;
  double left_midline = 0.0;
  double right_midline = 0.0;
  int n_basis = 5;
  int spline_degree = 3;

  void validate() const;

  /// 2 (n_basis - 2)
  Eigen::Index design_dimension() const { return 2 * (n_basis - 2); }

  ClampedBSplineBasis basis() const { return {n_basis, spline_degree, length}; }

  /// x-coordinate of mesh column i: i * length / (nx - 1).
  std::vector<double> columns() const;
};

/// Full coefficient vectors (meanline, thickness), each of length n_basis.
std::pair<Vector, Vector> full_coefficients(const ShapeGeometry& geometry, const Vector& design);

/// Design whose profiles interpolate the boundary data linearly: a straight
/// rod of constant thickness when both ends agree.
Vector initial_design(const ShapeGeometry& geometry);

/// Smoothed (meanline, thickness) values at every mesh column.
std::pair<Vector, Vector> bspline_profiles(const ShapeGeometry& geometry, const Vector& design);

/// Structured triangulation: node (i, j) of column i and row j has index
/// i * ny + j.
struct Mesh {
  int nx = 0;
  int ny = 0;
  std::vector<Eigen::Vector2d> nodes;
  std::vector<std::array<int, 3>> triangles;

  int node(int column, int row) const { return column * ny + row; }
};

/// Column i sits at x = i * length / (nx - 1); its ny nodes are spread
/// uniformly over meanline +- thickness / 2. Quads are split along the
/// lower-left/upper-right diagonal in the lower half of the rows and along
/// the upper-left/lower-right diagonal in the upper half, so the mesh of a
/// design and the mesh of its mirror image about the midline coincide.
///
/// Throws GeometryError when the thickness is not positive at some column.
Mesh build_mesh(const ShapeGeometry& geometry, const Vector& design);

/// Signed area of triangle t (positive for counter-clockwise ordering).
double triangle_area(const Mesh& mesh, const std::array<int, 3>& t);

/// Sum of triangle areas.
double volume(const Mesh& mesh);

/// Plain-text export:
///   nodes <N>
///   <x> <y>            (N lines)
///   triangles <M>
///   <a> <b> <c>        (M lines, zero-based node indices)
void write_mesh(std::ostream& out, const Mesh& mesh);

/// Full shape problem description.
struct ShapeConfig {
  ShapeGeometry geometry;
  MaterialData material;
  /// Angular quadrature points on the unit circle for the Weibull functional.
  int n_angles = 64;
  /// Relative finite-difference step for gradients and Hessians. Hessians
  /// difference differenced values, so round-off in J1 is amplified by
  /// 1/step^2; 1e-4 keeps that below 1e-8 while the truncation error stays
  /// of the same order.
  double fd_step = 1e-4;

  void validate() const;
};

/// Weibull scale giving the straight joint a critical weight near 0.8; see
/// straight_joint_case().
inline constexpr double kCalibratedWeibullScale = 13.37e6;

/// Left and right boundaries at the same height (0.2 m), 41 x 7 mesh,
/// five cubic basis functions, BeO with m = 5 under 10^7 Pa tension.
///
/// With sigma0 = 140 MPa the volume term dominates the failure intensity
/// by six orders of magnitude and the critical weight of the straight rod
/// is 1 - 2e-6, so the preset uses kCalibratedWeibullScale instead.
ShapeConfig straight_joint_case();

/// As straight_joint_case() with the right boundary 0.27 m lower.
ShapeConfig s_joint_case();

nlohmann::json to_json(const ShapeConfig& config);
/// Missing fields keep the straight_joint_case() values.
ShapeConfig shape_config_from_json(const nlohmann::json& doc);

}  // namespace pareto::shape
