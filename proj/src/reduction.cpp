#include "e3lab/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace e3lab {

namespace {

constexpr double kPolarFloor = 1e-10;

Vec3 rotate_vec(const Vec3& v, double al, double be) {
  return {al * v(0) + be * v(2), v(1), -be * v(0) + al * v(2)};
}

Vec3 unrotate_vec(const Vec3& v, double al, double be) {
  return {al * v(0) - be * v(2), v(1), be * v(0) + al * v(2)};
}

}  // namespace

RotatedState rotate(const E3State& s, const SystemParams& p) {
  return {rotate_vec(s.M, p.alpha(), p.beta()), rotate_vec(s.Gamma, p.alpha(), p.beta())};
}

E3State unrotate(const RotatedState& r, const SystemParams& p) {
  return {unrotate_vec(r.X, p.alpha(), p.beta()), unrotate_vec(r.Y, p.alpha(), p.beta())};
}

Vec6 rotated_field(const RotatedState& r, const SystemParams& p, double a) {
  const double n = p.norm();
  const double I2 = p.I2();
  const Vec3& X = r.X;
  const Vec3& Y = r.Y;
  Vec6 f;
  f(0) = 0.0;
  f(1) = n * (Y(2) + a * X(2));
  f(2) = -n * (Y(1) + a * X(1));
  f(3) = (X(2) * Y(1) - X(1) * Y(2)) / I2;
  f(4) = (X(0) * Y(2) - X(2) * Y(0)) / I2 + a * n * Y(2);
  f(5) = (X(1) * Y(0) - X(0) * Y(1)) / I2 - a * n * Y(1);
  return f;
}

ReducedConstants reduced_constants(const E3State& s, const SystemParams& p) {
  const RotatedState r = rotate(s, p);
  const double n = p.norm();
  const double I2 = p.I2();
  ReducedConstants k{};
  k.c1 = r.X.dot(r.Y);
  k.c2 = r.Y.squaredNorm();
  k.d1 = r.X.squaredNorm() / (2.0 * I2 * n) + r.Y(0);
  k.d2 = r.X(0);
  k.A_shift = k.d1 - k.d2 * k.d2 / (2.0 * I2 * n);
  const double g = k.c1 - k.d2 * k.A_shift;
  k.B = -4.0 * k.A_shift * n / I2 + k.d2 * k.d2 / (I2 * I2);
  k.C = 4.0 * n * n * (k.A_shift * k.A_shift - k.c2 + k.d2 * g / (I2 * n));
  k.D = 4.0 * n * n * g * g;
  return k;
}

double y1_from_u(double u, const ReducedConstants& k, const SystemParams& p) {
  return k.d1 - (k.d2 * k.d2 + u) / (2.0 * p.I2() * p.norm());
}

std::vector<double> u_series(const Trajectory& traj) {
  std::vector<double> u;
  u.reserve(traj.size());
  for (const auto& s : traj.states()) {
    const RotatedState r = rotate(s, traj.meta().params);
    u.push_back(r.X(1) * r.X(1) + r.X(2) * r.X(2));
  }
  return u;
}

double reduction_residual(const Trajectory& traj) {
  const auto& p = traj.meta().params;
  const auto& which = traj.meta().case_selector;
  if (traj.empty()) return 0.0;
  const ReducedConstants k = reduced_constants(traj.states().front(), p);
  double worst = 0.0;
  for (const auto& s : traj.states()) {
    const RotatedState r = rotate(s, p);
    const Vec6 f = rotated_field(r, p, coupling_a(s, p, which));
    const double u = r.X(1) * r.X(1) + r.X(2) * r.X(2);
    const double du = 2.0 * (r.X(1) * f(1) + r.X(2) * f(2));
    const double res = std::abs(du * du - k.cubic(u, p.I2()));
    if (std::isnan(res)) return res;
    worst = std::max(worst, res);
  }
  return worst;
}

double sigma_rhs(double u, const ReducedConstants& k, double a, const SystemParams& p) {
  if (!(u > 0.0)) throw PolarDegeneracyError("sigma is undefined at u = 0");
  const double n = p.norm();
  const double bracket =
      k.c1 - k.d2 * (k.d1 - (k.d2 * k.d2 + u) / (2.0 * p.I2() * n)) + a * u;
  return -(n / u) * bracket;
}

double coupling_from_u(double u, const ReducedConstants& k, const SystemParams& p,
                       const CaseSelector& which) {
  using K = CaseSelector::Kind;
  switch (which.kind()) {
    case K::CasimirF1: return k.c1;
    case K::CasimirF2: return k.c2;
    case K::H2Case: return p.norm() * k.d2;
    case K::GammaChi: return p.norm() * y1_from_u(u, k, p);
    case K::MSquared: return k.d2 * k.d2 + u;
    case K::Constant: return which.constant_value();
    case K::Custom: break;
  }
  throw PreconditionError("a custom coupling is not a known function of u");
}

double polar_angle(const RotatedState& r) { return std::atan2(r.X(2), r.X(1)); }

namespace {

// Derivative at offset x of the quartic through f[j..j+4] (unit spacing).
double lagrange_derivative(std::span<const double> f, std::size_t j, double x) {
  double acc = 0.0;
  for (int m = 0; m < 5; ++m) {
    double w = 0.0;
    for (int l = 0; l < 5; ++l) {
      if (l == m) continue;
      double prod = 1.0 / (m - l);
      for (int r = 0; r < 5; ++r) {
        if (r == m || r == l) continue;
        prod *= (x - r) / (m - r);
      }
      w += prod;
    }
    acc += w * f[j + static_cast<std::size_t>(m)];
  }
  return acc;
}

// First derivative on a uniform grid, fourth order everywhere.
std::vector<double> derivative5(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    } else {
      const std::size_t j = i < 2 ? 0 : n - 5;
      d[i] = lagrange_derivative(f, j, static_cast<double>(i - j)) / h;
    }
  }
  return d;
}

}  // namespace

Reconstruction reconstruct(std::span<const double> times, std::span<const double> u,
                           double sigma0, const ReducedConstants& k, const SystemParams& p,
                           const CaseSelector& which) {
  if (times.size() != u.size()) throw PreconditionError("times and u differ in length");
  if (times.size() < 5) throw PreconditionError("reconstruction needs at least 5 samples");
  const double h = times[1] - times[0];
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::abs((times[i] - times[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(times[i]))) {
      throw PreconditionError("reconstruction needs a uniform time grid");
    }
  }

  Reconstruction out;
  std::size_t n = u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > kPolarFloor)) {
      n = i;
      out.truncated = true;
      break;
    }
  }
  if (n == 0) throw PolarDegeneracyError("u vanishes at the first sample");

  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) rate[i] = sigma_rhs(u[i], k, coupling_from_u(u[i], k, p, which), p);

  // Cumulative Simpson: pairs of intervals, a one-interval quadratic rule for the tail.
  std::vector<double> sigma(n);
  sigma[0] = sigma0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      sigma[i] = sigma[i - 2] + h / 3.0 * (rate[i - 2] + 4.0 * rate[i - 1] + rate[i]);
    } else if (i + 1 < n) {
      sigma[i] = sigma[i - 1] + h / 12.0 * (5.0 * rate[i - 1] + 8.0 * rate[i] - rate[i + 1]);
    } else {
      sigma[i] = sigma[i - 1] + h / 12.0 * (-rate[i - 2] + 8.0 * rate[i - 1] + 5.0 * rate[i]);
    }
  }

  const std::vector<double> du = derivative5(u.first(std::max<std::size_t>(n, 5)), h);
  const double n_norm = p.norm();
  const double I2 = p.I2();
  out.times.assign(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(n));
  out.sigma = sigma;
  out.states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = std::sqrt(u[i]);
    RotatedState r;
    r.X(0) = k.d2;
    r.X(1) = rho * std::cos(sigma[i]);
    r.X(2) = rho * std::sin(sigma[i]);
    r.Y(0) = y1_from_u(u[i], k, p);
    const double dY1 = -du[i] / (2.0 * I2 * n_norm);
    const double r1 = k.c1 - k.d2 * r.Y(0);
    const double r2 = I2 * dY1;
    r.Y(1) = (r.X(1) * r1 + r.X(2) * r2) / u[i];
    r.Y(2) = (r.X(2) * r1 - r.X(1) * r2) / u[i];
    out.consistency_residual =
        std::max(out.consistency_residual,
                 std::abs(r.Y(1) * r.Y(1) + r.Y(2) * r.Y(2) - (k.c2 - r.Y(0) * r.Y(0))));
    out.states.push_back(r);
  }
  return out;
}

}  // namespace e3lab
