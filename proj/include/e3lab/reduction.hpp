#pragma once

#include <span>
#include <vector>

#include "e3lab/dynamics.hpp"

namespace e3lab {

/// Coordinates rotated in the xOz plane so that X1 points along (x0, 0, z0).
struct RotatedState {
  Vec3 X = Vec3::Zero();
  Vec3 Y = Vec3::Zero();
};

RotatedState rotate(const E3State& state, const SystemParams& params);
E3State unrotate(const RotatedState& rotated, const SystemParams& params);

/// The family's field in rotated coordinates (X1 is constant).
Vec6 rotated_field(const RotatedState& r, const SystemParams& params, double a);

/// Values of the integrals in the rotated frame and the coefficient block
/// of  u'^2 = -u^3/I2^2 - B u^2 - C u - D,  u = X2^2 + X3^2.
struct ReducedConstants {
  double c1;  ///< F1
  double c2;  ///< F2
  double d1;  ///< |X|^2 / (2 I2 sqrt(x0^2+z0^2)) + Y1
  double d2;  ///< X1
  double A_shift;
  double B;
  double C;
  double D;

  /// Right-hand side of the reduced equation for u'^2.
  double cubic(double u, double I2) const { return -u * u * u / (I2 * I2) - B * u * u - C * u - D; }
};

ReducedConstants reduced_constants(const E3State& state, const SystemParams& params);

/// Y1 as a function of u (a consequence of the H1 integral).
double y1_from_u(double u, const ReducedConstants& k, const SystemParams& params);

/// max over samples of |u'^2 - cubic(u)|, with u' from the rotated field.
double reduction_residual(const Trajectory& trajectory);

/// sigma' = -(sqrt(x0^2+z0^2)/u) [c1 - d2 (d1 - (d2^2+u)/(2 I2 sqrt(x0^2+z0^2))) + a u].
/// Throws PolarDegeneracyError for u <= 0.
double sigma_rhs(double u, const ReducedConstants& k, double a_value, const SystemParams& params);

/// The coupling a along the flow as a function of u. Cases (i)-(iii) and
/// Constant are constants of motion; (iv) is sqrt(x0^2+z0^2) Y1(u); (v) is
/// d2^2 + u. Throws PreconditionError for Custom couplings.
double coupling_from_u(double u, const ReducedConstants& k, const SystemParams& params,
                       const CaseSelector& which);

/// Polar angle of (X2, X3).
double polar_angle(const RotatedState& r);

struct Reconstruction {
  std::vector<double> times;
  std::vector<RotatedState> states;
  std::vector<double> sigma;
  /// u reached the degeneracy threshold; samples stop before it.
  bool truncated = false;
  /// max |Y2^2 + Y3^2 - (c2 - Y1^2)|
  double consistency_residual = 0.0;
};

/// Rebuilds the rotated state from u(t) on a uniform time grid: sigma by
/// composite Simpson quadrature of sigma_rhs, X2 = sqrt(u) cos(sigma),
/// X3 = sqrt(u) sin(sigma), Y1 from u, and (Y2, Y3) from the 2x2 system
///   X2 Y2 + X3 Y3 = c1 - d2 Y1,   X3 Y2 - X2 Y3 = I2 Y1'.
/// u' is taken from 5-point differences of the u-series. Needs >= 5
/// samples; the window stops at the first sample with u <= 1e-10.
Reconstruction reconstruct(std::span<const double> times, std::span<const double> u,
                           double sigma0, const ReducedConstants& k, const SystemParams& params,
                           const CaseSelector& which);

/// u = X2^2 + X3^2 along a trajectory.
std::vector<double> u_series(const Trajectory& trajectory);

}  // namespace e3lab
