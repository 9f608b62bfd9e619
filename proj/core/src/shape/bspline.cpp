#include "pareto/shape/bspline.hpp"

#include <algorithm>
#include <string>

namespace pareto::shape {

ClampedBSplineBasis::ClampedBSplineBasis(int count, int degree, double length)
    : count_(count), degree_(degree), length_(length) {
  if (degree < 0) throw InputError("B-spline degree must be non-negative");
  if (count < degree + 1) {
    throw InputError("a degree " + std::to_string(degree) + " B-spline needs at least " +
                     std::to_string(degree + 1) + " basis functions");
  }
  if (!(length > 0.0)) throw InputError("B-spline interval length must be positive");
  const int interior = count - degree - 1;
  knots_.assign(static_cast<std::size_t>(degree + 1), 0.0);
  for (int k = 1; k <= interior; ++k) {
    knots_.push_back(length * static_cast<double>(k) / static_cast<double>(interior + 1));
  }
  knots_.insert(knots_.end(), static_cast<std::size_t>(degree + 1), length);
}

Vector ClampedBSplineBasis::evaluate(double z) const {
  const int p = degree_;
  z = std::clamp(z, 0.0, length_);
  // Knot span index s with knots[s] <= z < knots[s+1]; the right end uses the last span.
  int span = count_ - 1;
  if (z < length_) {
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), z);
    span = static_cast<int>(it - knots_.begin()) - 1;
  }

  // Cox-de Boor triangle for the p+1 non-zero functions N_{span-p..span}.
  std::vector<double> values(static_cast<std::size_t>(p + 1), 0.0);
  std::vector<double> left(static_cast<std::size_t>(p + 1)), right(static_cast<std::size_t>(p + 1));
  values[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = z - knots_[static_cast<std::size_t>(span + 1 - j)];
    right[j] = knots_[static_cast<std::size_t>(span + j)] - z;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double denom = right[r + 1] + left[j - r];
      const double temp = denom == 0.0 ? 0.0 : values[r] / denom;
      values[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    values[j] = saved;
  }

  Vector out = Vector::Zero(count_);
  for (int r = 0; r <= p; ++r) out(span - p + r) = values[r];
  return out;
}

Matrix ClampedBSplineBasis::collocation(const std::vector<double>& points) const {
  Matrix m(static_cast<Eigen::Index>(points.size()), count_);
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = evaluate(points[i]).transpose();
  }
  return m;
}

std::vector<double> ClampedBSplineBasis::greville() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (int j = 0; j < count_; ++j) {
    if (degree_ == 0) {
      out.push_back(0.5 * (knots_[j] + knots_[j + 1]));
      continue;
    }
    double sum = 0.0;
    for (int k = 1; k <= degree_; ++k) sum += knots_[static_cast<std::size_t>(j + k)];
    out.push_back(sum / degree_);
  }
  return out;
}

}  // namespace pareto::shape
