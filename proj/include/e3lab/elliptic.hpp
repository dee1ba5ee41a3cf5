#pragma once

#include <array>
#include <string>

#include "e3lab/lax.hpp"
#include "e3lab/reduction.hpp"

namespace e3lab {

/// nu^2 = a0 l^4 + a1 l^3 + a2 l^2 + a3 l + a4.
struct QuarticCurve {
  std::array<double, 5> a{};

  /// nu = mu lambda^2 on the spectral curve: a = (-p, -a_curve, -b, -c, -d).
  static QuarticCurve from_spectral(const SpectralCoefficients& sc);
};

/// v^2 = k3 u^3 + k2 u^2 + k1 u + k0.
struct CubicCurve {
  double k3 = 0.0;
  double k2 = 0.0;
  double k1 = 0.0;
  double k0 = 0.0;

  /// v^2 = -u^3/I2^2 - B u^2 - C u - D.
  static CubicCurve from_reduced(const ReducedConstants& k, double I2);
  double operator()(double u) const { return ((k3 * u + k2) * u + k1) * u + k0; }
};

/// Invariants of the binary form b0 l^4 + 4 b1 l^3 + 6 b2 l^2 + 4 b3 l + b4.
/// For 4 s^3 - g2 s - g3 they reduce to (g2, g3).
struct CurveInvariants {
  double g2;
  double g3;
};

CurveInvariants quartic_invariants(const std::array<double, 5>& a);

/// True when g2^3 - 27 g3^2 vanishes relative to max(|g2|^3, 27 g3^2).
bool is_degenerate(const CurveInvariants& inv);

/// 1728 g2^3 / (g2^3 - 27 g3^2). Throws DegenerateCurveError.
double j_invariant(const CurveInvariants& inv);

double j_invariant_quartic(const QuarticCurve& curve);
/// Treats the cubic as a quartic with leading coefficient zero.
double j_invariant_cubic(const CubicCurve& curve);

/// u = scale * s + shift turns v^2 = cubic(u) into (v/scale)^2 = 4 s^3 - g2 s - g3.
struct WeierstrassData {
  double g2;
  double g3;
  double scale;
  double shift;
};
WeierstrassData weierstrass_form(const CubicCurve& curve);
/// Same j through the depressed (Weierstrass) normal form.
double j_invariant_cubic_depressed(const CubicCurve& curve);

struct IsomorphismReport {
  bool degenerate = false;
  std::string reason;
  double j_spectral = 0.0;
  double j_reduction = 0.0;
  /// |j_spectral - j_reduction| / max(1, |j_spectral|)
  double gap = 0.0;
};

IsomorphismReport compare_j(const QuarticCurve& spectral, const CubicCurve& reduction);
IsomorphismReport verify_isomorphism(const E3State& state, const SystemParams& params);

/// Carlson's symmetric elliptic integral R_F(x, y, z), x, y, z >= 0, at
/// most one zero.
double carlson_rf(double x, double y, double z);

/// Weierstrass p-function for real g2, g3 with g2^3 - 27 g3^2 > 0 (three
/// real roots e1 > e2 > e3), evaluated on the real axis.
///
/// Arguments are reduced to [0, omega] by periodicity, then to [0, omega/2]
/// with the half-period shift
///   p(omega - y) = e1 + (e1 - e2)(e1 - e3) / (p(y) - e1).
/// The Laurent series (through z^30) is used for |z| < R/4, R the distance
/// to the nearest nonzero lattice point; larger arguments are halved and
/// doubled back with
///   p(2z) = -2 p(z) + (6 p(z)^2 - g2/2)^2 / (4 p'(z)^2).
/// Series and doubling run in long double; each doubling cancels about
/// one digit.
class WeierstrassP {
 public:
  /// Throws DegenerateCurveError on a repeated root and InvalidParameter
  /// when only one root is real.
  WeierstrassP(double g2, double g3);

  /// Throws PoleError at lattice points.
  double operator()(double x) const;
  /// p(x) with +infinity at lattice points.
  double eval_unchecked(double x) const;
  /// x in [0, omega] with p(x) = value, for value >= e1.
  double inverse(double value) const;

  double g2() const { return g2_; }
  double g3() const { return g3_; }
  const std::array<double, 3>& roots() const { return e_; }
  /// Real half-period omega; the real period is 2 omega.
  double real_half_period() const { return omega_; }
  /// |omega'| for the imaginary half-period omega'.
  double imaginary_half_period() const { return omega_imag_; }

 private:
  double g2_;
  double g3_;
  std::array<double, 3> e_{};  // descending
  double omega_;
  double omega_imag_;
  double series_radius_;
  std::array<long double, 16> c_{};  // c_[k] multiplies z^(2k), k >= 1

  long double near_origin(double w) const;
};

/// |p'^2 - (4 p^3 - g2 p - g3)| / max(1, |4 p^3|) at z, with p' from a
/// five-point central difference whose step is proportional to the distance
/// from z to the nearest real pole.
double p_kernel_residual(const WeierstrassP& wp, double z);

/// The bounded real solution of u'^2 = -u^3/I2^2 - B u^2 - C u - D through
/// u0 with the sign of u'(0) given by udot0_sign:
///   u(t) = scale * S(t + z0) + shift,
///   S(z) = e3 + (e3 - e1)(e3 - e2) / (p(z) - e3)   (= p(z + omega')).
class EllipticSolution {
 public:
  double operator()(double t) const;
  const WeierstrassData& weierstrass() const { return data_; }
  const WeierstrassP& p_function() const { return wp_; }
  /// Period of u(t): 2 omega.
  double period() const { return 2.0 * wp_.real_half_period(); }
  double phase() const { return z0_; }

 private:
  friend EllipticSolution solve_u_closed_form(const ReducedConstants&, double, double, int);
  EllipticSolution(WeierstrassData data, WeierstrassP wp, double z0)
      : data_(data), wp_(wp), z0_(z0) {}

  WeierstrassData data_;
  WeierstrassP wp_;
  double z0_;
};

/// Throws DegenerateCurveError for a repeated root and PreconditionError
/// when u0 is not on the bounded branch [u2, u3].
EllipticSolution solve_u_closed_form(const ReducedConstants& k, double I2, double u0,
                                     int udot0_sign);

}  // namespace e3lab
