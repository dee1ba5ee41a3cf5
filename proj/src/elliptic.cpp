#include "e3lab/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace e3lab {

QuarticCurve QuarticCurve::from_spectral(const SpectralCoefficients& sc) {
  return {{-sc.p, -sc.a_curve, -sc.b, -sc.c, -sc.d}};
}

CubicCurve CubicCurve::from_reduced(const ReducedConstants& k, double I2) {
  return {-1.0 / (I2 * I2), -k.B, -k.C, -k.D};
}

CurveInvariants quartic_invariants(const std::array<double, 5>& a) {
  const double b0 = a[0];
  const double b1 = a[1] / 4.0;
  const double b2 = a[2] / 6.0;
  const double b3 = a[3] / 4.0;
  const double b4 = a[4];
  const double g2 = b0 * b4 - 4.0 * b1 * b3 + 3.0 * b2 * b2;
  const double g3 = b0 * b2 * b4 + 2.0 * b1 * b2 * b3 - b2 * b2 * b2 - b0 * b3 * b3 - b1 * b1 * b4;
  return {g2, g3};
}

bool is_degenerate(const CurveInvariants& inv) {
  const double a = inv.g2 * inv.g2 * inv.g2;
  const double b = 27.0 * inv.g3 * inv.g3;
  const double scale = std::max(std::abs(a), b);
  return !(std::abs(a - b) > 1e-10 * scale);
}

double j_invariant(const CurveInvariants& inv) {
  if (is_degenerate(inv)) throw DegenerateCurveError("singular curve: g2^3 = 27 g3^2");
  const double a = inv.g2 * inv.g2 * inv.g2;
  return 1728.0 * a / (a - 27.0 * inv.g3 * inv.g3);
}

double j_invariant_quartic(const QuarticCurve& curve) {
  return j_invariant(quartic_invariants(curve.a));
}

double j_invariant_cubic(const CubicCurve& c) {
  return j_invariant(quartic_invariants({0.0, c.k3, c.k2, c.k1, c.k0}));
}

WeierstrassData weierstrass_form(const CubicCurve& c) {
  if (c.k3 == 0.0) throw DegenerateCurveError("not a cubic: leading coefficient is zero");
  const double scale = 4.0 / c.k3;
  const double shift = -c.k2 / (3.0 * c.k3);
  const double g2 = -((3.0 * c.k3 * shift + 2.0 * c.k2) * shift + c.k1) / scale;
  const double g3 = -c(shift) / (scale * scale);
  return {g2, g3, scale, shift};
}

double j_invariant_cubic_depressed(const CubicCurve& c) {
  const WeierstrassData w = weierstrass_form(c);
  return j_invariant({w.g2, w.g3});
}

IsomorphismReport compare_j(const QuarticCurve& spectral, const CubicCurve& reduction) {
  IsomorphismReport r;
  const CurveInvariants qi = quartic_invariants(spectral.a);
  const CurveInvariants ci = quartic_invariants({0.0, reduction.k3, reduction.k2, reduction.k1,
                                                 reduction.k0});
  if (is_degenerate(qi)) {
    r.degenerate = true;
    r.reason = "spectral curve degenerate";
    return r;
  }
  if (is_degenerate(ci)) {
    r.degenerate = true;
    r.reason = "reduction curve degenerate";
    return r;
  }
  r.j_spectral = j_invariant(qi);
  r.j_reduction = j_invariant(ci);
  r.gap = std::abs(r.j_spectral - r.j_reduction) / std::max(1.0, std::abs(r.j_spectral));
  return r;
}

IsomorphismReport verify_isomorphism(const E3State& s, const SystemParams& p) {
  return compare_j(QuarticCurve::from_spectral(spectral_coefficients(s, p)),
                   CubicCurve::from_reduced(reduced_constants(s, p), p.I2()));
}

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0) throw InvalidParameter("carlson_rf: negative argument");
  for (int it = 0; it < 200; ++it) {
    const double a = (x + y + z) / 3.0;
    const double dev = std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)});
    if (dev < 1e-4 * a) {
      const double X = (a - x) / a;
      const double Y = (a - y) / a;
      const double Z = -(X + Y);
      const double e2 = X * Y - Z * Z;
      const double e3 = X * Y * Z;
      return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
    }
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  throw EvaluationError("carlson_rf did not converge");
}

namespace {

double agm(double a, double b) {
  for (int i = 0; i < 100 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

}  // namespace

WeierstrassP::WeierstrassP(double g2, double g3) : g2_(g2), g3_(g3) {
  if (is_degenerate({g2, g3})) throw DegenerateCurveError("p-function: repeated root");
  if (g2 * g2 * g2 - 27.0 * g3 * g3 < 0.0) {
    throw InvalidParameter("p-function: only one real root (not supported)");
  }
  // Roots of 4 s^3 - g2 s - g3 by the trigonometric method, then Newton.
  const double r = std::sqrt(g2 / 3.0);
  const double arg = std::clamp(3.0 * std::sqrt(3.0) * g3 / (g2 * std::sqrt(g2)), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k) {
    double s = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
    for (int it = 0; it < 3; ++it) {
      const double f = (4.0 * s * s - g2) * s - g3;
      const double df = 12.0 * s * s - g2;
      if (df == 0.0) break;
      s -= f / df;
    }
    e_[static_cast<std::size_t>(k)] = s;
  }
  std::sort(e_.begin(), e_.end(), std::greater<>());

  omega_ = std::numbers::pi / (2.0 * agm(std::sqrt(e_[0] - e_[2]), std::sqrt(e_[0] - e_[1])));
  omega_imag_ = std::numbers::pi / (2.0 * agm(std::sqrt(e_[0] - e_[2]), std::sqrt(e_[1] - e_[2])));
  series_radius_ = 0.25 * 2.0 * std::min(omega_, omega_imag_);

  c_[1] = static_cast<long double>(g2) / 20;
  c_[2] = static_cast<long double>(g3) / 28;
  for (std::size_t k = 3; k < c_.size(); ++k) {
    long double sum = 0;
    for (std::size_t m = 1; m + 2 <= k; ++m) sum += c_[m] * c_[k - 1 - m];
    c_[k] = 3 * sum / static_cast<long double>((2 * k + 3) * (k - 2));
  }
}

long double WeierstrassP::near_origin(double w) const {
  int halvings = 0;
  long double z = w;
  while (z >= series_radius_) {
    z /= 2;
    ++halvings;
  }
  const long double z2 = z * z;
  long double p = 0;
  long double dp = 0;
  for (std::size_t k = c_.size() - 1; k >= 1; --k) {
    p = p * z2 + c_[k];
    dp = dp * z2 + 2 * static_cast<long double>(k) * c_[k];
  }
  p = 1 / z2 + p * z2;         // sum c_k z^(2k)
  dp = -2 / (z2 * z) + dp * z;  // sum 2k c_k z^(2k-1)

  const long double g2 = g2_, g3 = g3_;
  for (int i = 0; i < halvings; ++i) {
    const long double num = 6 * p * p - g2 / 2;
    p = -2 * p + num * num / (4 * dp * dp);
    // Still inside (0, omega): p' is negative there.
    dp = -std::sqrt(std::max<long double>(0, (4 * p * p - g2) * p - g3));
  }
  return p;
}

double WeierstrassP::eval_unchecked(double x) const {
  const double period = 2.0 * omega_;
  const double w = std::abs(x - period * std::nearbyint(x / period));
  if (w == 0.0) return std::numeric_limits<double>::infinity();
  if (w <= 0.5 * omega_) return static_cast<double>(near_origin(w));
  const double y = omega_ - w;
  if (y <= 0.0) return e_[0];
  const long double e1 = e_[0];
  return static_cast<double>(e1 + (e1 - e_[1]) * (e1 - e_[2]) / (near_origin(y) - e1));
}

double WeierstrassP::operator()(double x) const {
  const double p = eval_unchecked(x);
  if (!std::isfinite(p)) {
    const double period = 2.0 * omega_;
    throw PoleError("p-function pole", period * std::nearbyint(x / period));
  }
  return p;
}

double p_kernel_residual(const WeierstrassP& wp, double z) {
  const double period = 2.0 * wp.real_half_period();
  const double dist = std::abs(z - period * std::nearbyint(z / period));
  const double h = 5e-4 * dist;
  const double d = (8.0 * (wp(z + h) - wp(z - h)) - (wp(z + 2 * h) - wp(z - 2 * h))) / (12.0 * h);
  const double v = wp(z);
  const double cubic = 4.0 * v * v * v;
  return std::abs(d * d - (cubic - wp.g2() * v - wp.g3())) / std::max(1.0, std::abs(cubic));
}

double WeierstrassP::inverse(double value) const {
  if (value < e_[0]) {
    if (value < e_[0] - 1e-12 * std::max(1.0, std::abs(e_[0]))) {
      throw PreconditionError("p-function inverse: value below e1");
    }
    value = e_[0];
  }
  if (std::isinf(value)) return 0.0;
  return carlson_rf(value - e_[0], value - e_[1], value - e_[2]);
}

EllipticSolution solve_u_closed_form(const ReducedConstants& k, double I2, double u0,
                                     int udot0_sign) {
  const CubicCurve curve = CubicCurve::from_reduced(k, I2);
  const WeierstrassData data = weierstrass_form(curve);
  const WeierstrassP wp(data.g2, data.g3);
  const auto& e = wp.roots();

  double s0 = (u0 - data.shift) / data.scale;
  const double tol = 1e-9 * std::max(1.0, std::abs(e[1] - e[2]));
  if (s0 < e[2] - tol || s0 > e[1] + tol) {
    throw PreconditionError("u0 is not on the bounded oscillation branch");
  }
  s0 = std::clamp(s0, e[2], e[1]);

  // S(x) = e3 + (e3-e1)(e3-e2)/(p(x) - e3) increases on (0, omega), and
  // scale < 0, so u decreases there.
  const double m = (e[2] - e[0]) * (e[2] - e[1]);
  const double ds = s0 - e[2];
  const double x0 = ds <= 0.0 ? 0.0 : wp.inverse(e[2] + m / ds);
  const double z0 = (udot0_sign < 0) == (data.scale < 0.0) ? x0 : -x0;
  return EllipticSolution(data, wp, z0);
}

double EllipticSolution::operator()(double t) const {
  const auto& e = wp_.roots();
  const double p = wp_.eval_unchecked(t + z0_);
  const double s = std::isinf(p) ? e[2] : e[2] + (e[2] - e[0]) * (e[2] - e[1]) / (p - e[2]);
  return data_.scale * s + data_.shift;
}

}  // namespace e3lab
