#pragma once

#include "pareto/problem.hpp"

namespace pareto {

/// Tolerance used for every symmetry check: 1e-8 * (1 + max |entry|).
double symmetry_tolerance(const Matrix& m);

bool is_symmetric(const Matrix& m);

/// (m + m^T) / 2
Matrix symmetrize(const Matrix& m);

/// Dense symmetric eigen-decomposition up to this order, iterative above.
inline constexpr Eigen::Index kDenseEigenLimit = 64;

/// Smallest eigenvalue of a symmetric matrix.
///
/// Orders up to kDenseEigenLimit use a full symmetric eigen-decomposition.
/// Larger matrices use shifted inverse iteration. The shift is found by
/// bisection between a certified lower bound (zero or a Gershgorin bound)
/// and the smallest diagonal entry, using the success of a Cholesky
/// factorization as the test for lying below the spectrum, so the iteration
/// always runs on a positive definite operator and converges to the bottom
/// of the spectrum. Relative tolerance 1e-8, at most 10000 iterations.
///
/// Throws InputError for non-square or non-symmetric input.
double min_eigenvalue(const Matrix& h);

/// Spectral norm (largest singular value).
double spectral_norm(const Matrix& m);

}  // namespace pareto
