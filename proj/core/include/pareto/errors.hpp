#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace pareto {

/// Base class for every error raised by the library.
///
/// Errors raised while evaluating a Runge-Kutta stage carry the stage index
/// (1-based) so callers can tell where inside a step the failure happened.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;

  void set_stage(int stage) { stage_ = stage; }
  std::optional<int> stage() const { return stage_; }

 private:
  std::optional<int> stage_;
};

/// Malformed arguments: dimension mismatches, weights outside [0,1], bad tableaus.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The scalarized Hessian stopped being positive definite, i.e. the point left
/// the maximal interval on which the tracing ODE is defined.
class DefinitenessLost : public Error {
 public:
  DefinitenessLost(double lambda, Eigen::VectorXd x, double min_eigenvalue);

  double lambda() const { return lambda_; }
  const Eigen::VectorXd& x() const { return x_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double lambda_;
  Eigen::VectorXd x_;
  double min_eigenvalue_;
};

/// Non-finite values, singular systems, failed factorizations.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A design vector that does not describe a valid shape (non-positive thickness).
class GeometryError : public Error {
 public:
  GeometryError(const std::string& what, std::optional<int> coordinate = std::nullopt)
      : Error(what), coordinate_(coordinate) {}

  /// Design coordinate whose finite-difference probe left the valid region, if known.
  std::optional<int> coordinate() const { return coordinate_; }

 private:
  std::optional<int> coordinate_;
};

/// Invalid run configuration (CLI level).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pareto
