#pragma once

#include <stdexcept>
#include <string>

namespace e3lab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

/// A gradient or field evaluation produced a non-finite value.
struct EvaluationError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// Evaluation at (or numerically at) a pole. `location` is the pole nearest
/// to the requested argument.
struct PoleError : Error {
  PoleError(const std::string& what, double location)
      : Error(what), location(location) {}
  double location;
};

/// x = 0 or y = 0 in the separation chart.
struct SingularChartError : Error {
  using Error::Error;
};

/// The curve has a repeated root (zero discriminant).
struct DegenerateCurveError : Error {
  using Error::Error;
};

/// u = rho^2 vanished, so the polar angle sigma is undefined.
struct PolarDegeneracyError : Error {
  using Error::Error;
};

}  // namespace e3lab
