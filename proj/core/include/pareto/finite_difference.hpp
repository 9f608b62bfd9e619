#pragma once

#include <functional>

#include "pareto/problem.hpp"

namespace pareto {

using VectorFunction = std::function<Vector(const Vector&)>;

/// Probe step for coordinate j: relative_step * (1 + |x_j|).
double fd_probe_step(double relative_step, double coordinate);

/// Central-difference Jacobian (outputs x inputs) of fn at x. The 2n probes
/// are evaluated concurrently. A GeometryError raised by a probe is rethrown
/// with the offending coordinate attached.
Matrix central_jacobian(const VectorFunction& fn, const Vector& x, double relative_step);

/// Central-difference gradient of a scalar function.
Vector central_gradient(const std::function<double(const Vector&)>& fn, const Vector& x,
                        double relative_step);

/// Hessian from central differences of a gradient, symmetrized as (H + H^T)/2.
Matrix hessian_from_gradient(const VectorFunction& gradient, const Vector& x,
                             double relative_step);

}  // namespace pareto
