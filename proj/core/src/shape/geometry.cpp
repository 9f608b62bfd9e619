#include "pareto/shape/geometry.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace pareto::shape {

void MaterialData::validate() const {
  if (!(youngs_modulus > 0.0)) throw InputError("Young's modulus must be positive");
  if (!(poisson_ratio > 0.0 && poisson_ratio < 0.5)) {
    throw InputError("Poisson's ratio must lie in (0, 0.5)");
  }
  if (!(weibull_module >= 5.0 && weibull_module <= 25.0)) {
    throw InputError("Weibull module must lie in [5, 25]");
  }
  if (!(sigma0 > 0.0)) throw InputError("Weibull scale sigma0 must be positive");
  if (!std::isfinite(surface_load) || !body_force.allFinite()) {
    throw InputError("loads must be finite");
  }
}

double MaterialData::lame_lambda() const {
  const double nu = poisson_ratio;
  return nu * youngs_modulus / ((1.0 + nu) * (1.0 - 2.0 * nu));
}

double MaterialData::lame_mu() const { return youngs_modulus / (2.0 * (1.0 + poisson_ratio)); }

void ShapeGeometry::validate() const {
  if (nx < 2 || ny < 2) throw InputError("mesh needs at least 2 x 2 nodes");
  if (!(length > 0.0)) throw InputError("joint length must be positive");
  if (!(left_height > 0.0 && right_height > 0.0)) {
    throw InputError("boundary heights must be positive");
  }
  if (n_basis < 3) throw InputError("need at least three B-spline basis functions");
  if (spline_degree < 1 || spline_degree >= n_basis) {
    throw InputError("spline degree must lie in [1, n_basis - 1]");
  }
}

std::vector<double> ShapeGeometry::columns() const {
  std::vector<double> z(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) z[i] = length * static_cast<double>(i) / static_cast<double>(nx - 1);
  return z;
}

std::pair<Vector, Vector> full_coefficients(const ShapeGeometry& geometry, const Vector& design) {
  const int nb = geometry.n_basis;
  if (design.size() != geometry.design_dimension()) {
    throw InputError("design vector has length " + std::to_string(design.size()) +
                     ", expected " + std::to_string(geometry.design_dimension()));
  }
  const int free = nb - 2;
  Vector meanline(nb), thickness(nb);
  meanline(0) = geometry.left_midline;
  meanline(nb - 1) = geometry.right_midline;
  thickness(0) = geometry.left_height;
  thickness(nb - 1) = geometry.right_height;
  meanline.segment(1, free) = design.head(free);
  thickness.segment(1, free) = design.tail(free);
  return {meanline, thickness};
}

Vector initial_design(const ShapeGeometry& geometry) {
  geometry.validate();
  const std::vector<double> abscissae = geometry.basis().greville();
  const int free = geometry.n_basis - 2;
  Vector design(2 * free);
  for (int j = 0; j < free; ++j) {
    const double t = abscissae[static_cast<std::size_t>(j + 1)] / geometry.length;
    design(j) = (1.0 - t) * geometry.left_midline + t * geometry.right_midline;
    design(free + j) = (1.0 - t) * geometry.left_height + t * geometry.right_height;
  }
  return design;
}

std::pair<Vector, Vector> bspline_profiles(const ShapeGeometry& geometry, const Vector& design) {
  const auto [meanline, thickness] = full_coefficients(geometry, design);
  const Matrix colloc = geometry.basis().collocation(geometry.columns());
  return {colloc * meanline, colloc * thickness};
}

Mesh build_mesh(const ShapeGeometry& geometry, const Vector& design) {
  geometry.validate();
  const auto [meanline, thickness] = bspline_profiles(geometry, design);
  const std::vector<double> z = geometry.columns();

  Mesh mesh;
  mesh.nx = geometry.nx;
  mesh.ny = geometry.ny;
  mesh.nodes.reserve(static_cast<std::size_t>(geometry.nx * geometry.ny));
  for (int i = 0; i < geometry.nx; ++i) {
    if (!(thickness(i) > 0.0)) {
      throw GeometryError("non-positive thickness " + std::to_string(thickness(i)) +
                          " at mesh column " + std::to_string(i));
    }
    for (int j = 0; j < geometry.ny; ++j) {
      const double offset = static_cast<double>(j) / static_cast<double>(geometry.ny - 1) - 0.5;
      mesh.nodes.emplace_back(z[i], meanline(i) + thickness(i) * offset);
    }
  }

  mesh.triangles.reserve(static_cast<std::size_t>(2 * (geometry.nx - 1) * (geometry.ny - 1)));
  for (int i = 0; i + 1 < geometry.nx; ++i) {
    for (int j = 0; j + 1 < geometry.ny; ++j) {
      const int ll = mesh.node(i, j), lr = mesh.node(i + 1, j);
      const int ul = mesh.node(i, j + 1), ur = mesh.node(i + 1, j + 1);
      if (2 * j + 1 <= geometry.ny - 1) {
        mesh.triangles.push_back({ll, lr, ur});
        mesh.triangles.push_back({ll, ur, ul});
      } else {
        mesh.triangles.push_back({ll, lr, ul});
        mesh.triangles.push_back({lr, ur, ul});
      }
    }
  }
  return mesh;
}

double triangle_area(const Mesh& mesh, const std::array<int, 3>& t) {
  const Eigen::Vector2d& a = mesh.nodes[t[0]];
  const Eigen::Vector2d& b = mesh.nodes[t[1]];
  const Eigen::Vector2d& c = mesh.nodes[t[2]];
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

double volume(const Mesh& mesh) {
  double total = 0.0;
  for (const auto& t : mesh.triangles) total += triangle_area(mesh, t);
  return total;
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
  const auto old_precision = out.precision(17);
  out << "nodes " << mesh.nodes.size() << '\n';
  for (const auto& p : mesh.nodes) out << p.x() << ' ' << p.y() << '\n';
  out << "triangles " << mesh.triangles.size() << '\n';
  for (const auto& t : mesh.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out.precision(old_precision);
}

void ShapeConfig::validate() const {
  geometry.validate();
  material.validate();
  if (n_angles < 1) throw InputError("need at least one quadrature angle");
  if (!(fd_step > 0.0)) throw InputError("finite-difference step must be positive");
}

ShapeConfig straight_joint_case() {
  ShapeConfig config;
  config.material.sigma0 = kCalibratedWeibullScale;
  return config;
}

ShapeConfig s_joint_case() {
  ShapeConfig config = straight_joint_case();
  config.geometry.right_midline = -0.27;
  return config;
}

nlohmann::json to_json(const ShapeConfig& config) {
  const ShapeGeometry& g = config.geometry;
  const MaterialData& m = config.material;
  return {{"nx", g.nx},
          {"ny", g.ny},
          {"length", g.length},
          {"left_height", g.left_height},
          {"right_height", g.right_height},
          {"left_midline", g.left_midline},
          {"right_midline", g.right_midline},
          {"n_basis", g.n_basis},
          {"spline_degree", g.spline_degree},
          {"n_angles", config.n_angles},
          {"fd_step", config.fd_step},
          {"material",
           {{"youngs_modulus", m.youngs_modulus},
            {"poisson_ratio", m.poisson_ratio},
            {"weibull_module", m.weibull_module},
            {"sigma0", m.sigma0},
            {"surface_load", m.surface_load},
            {"body_force", {m.body_force.x(), m.body_force.y()}}}}};
}

ShapeConfig shape_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("shape configuration must be a JSON object");
  ShapeConfig config = straight_joint_case();
  ShapeGeometry& g = config.geometry;
  g.nx = doc.value("nx", g.nx);
  g.ny = doc.value("ny", g.ny);
  g.length = doc.value("length", g.length);
  g.left_height = doc.value("left_height", g.left_height);
  g.right_height = doc.value("right_height", g.right_height);
  g.left_midline = doc.value("left_midline", g.left_midline);
  g.right_midline = doc.value("right_midline", g.right_midline);
  g.n_basis = doc.value("n_basis", g.n_basis);
  g.spline_degree = doc.value("spline_degree", g.spline_degree);
  config.n_angles = doc.value("n_angles", config.n_angles);
  config.fd_step = doc.value("fd_step", config.fd_step);
  if (doc.contains("material")) {
    const auto& md = doc.at("material");
    MaterialData& m = config.material;
    m.youngs_modulus = md.value("youngs_modulus", m.youngs_modulus);
    m.poisson_ratio = md.value("poisson_ratio", m.poisson_ratio);
    m.weibull_module = md.value("weibull_module", m.weibull_module);
    m.sigma0 = md.value("sigma0", m.sigma0);
    m.surface_load = md.value("surface_load", m.surface_load);
    if (md.contains("body_force")) {
      const auto& f = md.at("body_force");
      if (!f.is_array() || f.size() != 2) throw InputError("body_force must be [fx, fy]");
      m.body_force = {f[0].get<double>(), f[1].get<double>()};
    }
  }
  config.validate();
  return config;
}

}  // namespace pareto::shape
