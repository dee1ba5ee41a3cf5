#pragma once

#include <array>
#include <functional>
#include <span>

#include "e3lab/dynamics.hpp"

namespace e3lab {

/// Complex coordinates adapted to the direction (x0, 0, z0).
struct TransformedVars {
  cplx x;
  cplx y;
  cplx xbar;
  cplx ybar;
  double x1;
  double y1;
  double q;
};

TransformedVars transform(const E3State& state, const SystemParams& params);

/// L(lambda) = N(lambda) / lambda^2 with the traceless matrix polynomial
///   N(lambda) = [[ w(lambda),           sqrt2 i D(lambda) ],
///                [ sqrt2 i D*(lambda), -w(lambda)        ]],
///   w = -i (q lambda^2 + x1 lambda + y1), D = x lambda + y, D* = xbar lambda + ybar.
class LaxMatrix {
 public:
  explicit LaxMatrix(const TransformedVars& vars);

  /// Throws PoleError at lambda = 0.
  Mat2c operator()(cplx lambda) const;
  /// lambda^2 L(lambda); entire in lambda.
  Mat2c numerator(cplx lambda) const;
  /// N = coefficients[0] + coefficients[1] lambda + coefficients[2] lambda^2.
  const std::array<Mat2c, 3>& coefficients() const { return coeff_; }

 private:
  std::array<Mat2c, 3> coeff_;
};

/// A(lambda) = (lambda^2 L(lambda) - a^2 L(a)) / (2 I2 (lambda - a)), stored as
/// the exact quotient constant + linear * lambda.
struct LaxCompanion {
  Mat2c constant;
  Mat2c linear;
  Mat2c operator()(cplx lambda) const { return constant + linear * lambda; }
};

Mat2c lax_L(const E3State& state, const SystemParams& params, cplx lambda);
LaxCompanion lax_A(const E3State& state, const SystemParams& params, double a_value);
Mat2c lax_A(const E3State& state, const SystemParams& params, const CaseSelector& which,
            cplx lambda);

/// dL/dt along `velocity`, exact: L is affine in the state, so its time
/// derivative is the q-free Lax matrix of the velocity vector.
Mat2c lax_L_rate(const Vec6& velocity, const SystemParams& params, cplx lambda);

using FieldOverride = std::function<Vec6(const E3State&)>;

/// max over samples and lambdas of |dL/dt - [L, A]| (entrywise modulus).
/// `field` replaces the family vector field (used for negative controls).
double verify_lax(const Trajectory& trajectory, std::span<const cplx> lambdas,
                  const FieldOverride& field = {});
double lax_residual(const E3State& state, const SystemParams& params, const CaseSelector& which,
                    cplx lambda, const FieldOverride& field = {});

/// max |{L(lambda) (x) 1, 1 (x) L(mu)} - [r(lambda - mu), L(lambda) (x) 1 + 1 (x) L(mu)]|
/// with r(z) = r_sign * P / z (P the 4x4 permutation). The identity holds for
/// r_sign = -1. Kronecker index order: (i,k) (x) (j,l) -> (2i + j, 2k + l).
/// Throws PreconditionError when lambda = mu, PoleError at lambda or mu = 0.
double verify_rmatrix(const E3State& state, const SystemParams& params, cplx lambda, cplx mu,
                      double r_sign = -1.0);

/// Coefficients of mu^2 lambda^4 = -p lambda^4 - a_curve lambda^3 - b lambda^2 - c lambda - d.
struct SpectralCoefficients {
  double p;
  double a_curve;
  double b;
  double c;
  double d;
};

/// Expands w^2 - 2 D D* directly.
SpectralCoefficients spectral_coefficients(const E3State& state, const SystemParams& params);
/// (I2^2 (x0^2+z0^2), 2 I2 H2, 2 I2 H1, 2 F1, F2).
SpectralCoefficients spectral_coefficients_from_integrals(const E3State& state,
                                                          const SystemParams& params);

}  // namespace e3lab
