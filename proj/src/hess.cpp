#include "e3lab/hess.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dp54.hpp"

namespace e3lab {

InertiaTriple::InertiaTriple(double I1, double I2, double I3) : I1_(I1), I2_(I2), I3_(I3) {
  if (!std::isfinite(I1) || !std::isfinite(I2) || !std::isfinite(I3)) {
    throw InvalidParameter("inertia must be finite");
  }
  if (!(I3 > 0.0)) throw InvalidParameter("inertia must be positive");
  if (!(I1 >= I2 && I2 >= I3)) throw InvalidParameter("inertia must satisfy I1 >= I2 >= I3");
}

HAParams::HAParams(InertiaTriple inertia, double x0, double z0)
    : inertia_(inertia), x0_(x0), z0_(z0) {
  if (x0 == 0.0 && z0 == 0.0) throw InvalidParameter("chi must not vanish");
  const double a = std::sqrt(inertia.I1() * (inertia.I2() - inertia.I3()));
  const double b = std::sqrt(inertia.I3() * (inertia.I1() - inertia.I2()));
  const double cond = x0 * a + z0 * b;
  const double scale = std::max(1.0, std::abs(x0 * a) + std::abs(z0 * b));
  if (std::abs(cond) > 1e-12 * scale) {
    throw InvalidParameter("Hess-Appel'rot condition violated");
  }
}

HAParams ha_admissible_params(const InertiaTriple& inertia, double scale) {
  if (scale == 0.0) throw InvalidParameter("scale must be nonzero");
  const double x0 = -scale * std::sqrt(inertia.I3() * (inertia.I1() - inertia.I2()));
  const double z0 = scale * std::sqrt(inertia.I1() * (inertia.I2() - inertia.I3()));
  return HAParams(inertia, x0, z0);
}

Vec3 angular_velocity(const E3State& s, const InertiaTriple& inertia) {
  return s.M.cwiseQuotient(inertia.diagonal());
}

Vec6 ha_field(const E3State& s, const HAParams& p) {
  const Vec3 omega = angular_velocity(s, p.inertia());
  Vec6 f;
  f << s.M.cross(omega) + s.Gamma.cross(p.chi()), s.Gamma.cross(omega);
  return f;
}

double ha_energy(const E3State& s, const HAParams& p) {
  return 0.5 * s.M.dot(angular_velocity(s, p.inertia())) + s.Gamma.dot(p.chi());
}

double ha_energy_alt(const E3State& s, const HAParams& p) {
  const Vec3 omega = angular_velocity(s, p.inertia());
  return 0.5 * s.M.dot(omega) + s.Gamma.dot(omega);
}

double invariant_relation(const E3State& s, const HAParams& p) {
  return p.x0() * s.M(0) + p.z0() * s.M(2);
}

std::string EquivalenceReport::matching(double tol) const {
  const bool lit = residual_literal < tol;
  const bool idx = residual_index3 < tol;
  if (lit && idx) return "both";
  if (lit) return "literal";
  if (idx) return "index3";
  return "none";
}

EquivalenceReport verify_ha_equivalence(const E3State& s, const HAParams& p,
                                        double on_surface_tol) {
  if (!(std::abs(invariant_relation(s, p)) < on_surface_tol)) {
    throw PreconditionError("state is off the invariant hypersurface x0 M1 + z0 M3 = 0");
  }
  const SystemParams fp = p.family_params();
  const Vec3 omega = angular_velocity(s, p.inertia());
  const double a_literal = (fp.alpha() * omega(0) + fp.beta() * omega(1)) / fp.norm();
  const double a_index3 = (fp.alpha() * omega(0) + fp.beta() * omega(2)) / fp.norm();
  const Vec6 f = ha_field(s, p);
  EquivalenceReport r;
  r.residual_literal = (f - vector_field(s, fp, a_literal)).cwiseAbs().maxCoeff();
  r.residual_index3 = (f - vector_field(s, fp, a_index3)).cwiseAbs().maxCoeff();
  return r;
}

HASeparation ha_separation(const E3State& s, const HAParams& p) {
  const SystemParams fp = p.family_params();
  const SeparationVars v = sep_vars(s, fp);
  return {v, std::abs(v.mu2), separation_relation_residuals(s, fp).r1};
}

OdeSolution integrate_ha(const E3State& initial, const HAParams& params,
                         const SolverSettings& settings) {
  const Rhs rhs = [&params](const Vec6& y) { return ha_field(E3State::from_vector(y), params); };
  return integrate_ode(rhs, initial.to_vector(), settings);
}

namespace {

using quad = __float128;

quad sqrt_q(quad x) {
  if (x <= 0) return 0;
  quad r = std::sqrt(static_cast<double>(x));
  for (int i = 0; i < 3; ++i) r = (r + x / r) / 2;
  return r;
}

struct Q6 {
  std::array<quad, 6> v{};
  quad operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

Q6 operator+(const Q6& a, const Q6& b) {
  Q6 r;
  for (std::size_t i = 0; i < 6; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

Q6 operator*(quad s, const Q6& a) {
  Q6 r;
  for (std::size_t i = 0; i < 6; ++i) r.v[i] = s * a.v[i];
  return r;
}

}  // namespace

RelationDrift invariant_relation_drift(const E3State& initial, const HAParams& params,
                                       const SolverSettings& settings) {
  settings.validate();
  const InertiaTriple& in = params.inertia();
  const quad I1 = in.I1(), I2 = in.I2(), I3 = in.I3();
  const quad a = sqrt_q(I1 * (I2 - I3));
  const quad b = sqrt_q(I3 * (I1 - I2));
  // x0 a + z0 b = 0 exactly (to binary128), solving for the smaller coefficient's partner.
  quad x0 = params.x0(), z0 = params.z0();
  if (a >= b) {
    x0 = -z0 * b / a;
  } else {
    z0 = -x0 * a / b;
  }
  const quad n2 = x0 * x0 + z0 * z0;

  Q6 y;
  for (int i = 0; i < 3; ++i) {
    y.v[static_cast<std::size_t>(i)] = initial.M(i);
    y.v[static_cast<std::size_t>(i + 3)] = initial.Gamma(i);
  }
  const quad R0 = x0 * y.v[0] + z0 * y.v[2];
  y.v[0] -= R0 * x0 / n2;
  y.v[2] -= R0 * z0 / n2;

  const auto field = [&](const Q6& s) {
    const quad w1 = s.v[0] / I1, w2 = s.v[1] / I2, w3 = s.v[2] / I3;
    Q6 f;
    // M x Omega + Gamma x chi,  Gamma x Omega
    f.v[0] = s.v[1] * w3 - s.v[2] * w2 + s.v[4] * z0;
    f.v[1] = s.v[2] * w1 - s.v[0] * w3 + s.v[5] * x0 - s.v[3] * z0;
    f.v[2] = s.v[0] * w2 - s.v[1] * w1 - s.v[4] * x0;
    f.v[3] = s.v[4] * w3 - s.v[5] * w2;
    f.v[4] = s.v[5] * w1 - s.v[3] * w3;
    f.v[5] = s.v[3] * w2 - s.v[4] * w1;
    return f;
  };

  double extended = detail::magnitude(x0 * y.v[0] + z0 * y.v[2]);
  std::size_t accepted = 0, rejected = 0;
  const auto failure = detail::dp54_integrate<quad>(
      field, y, settings,
      [&](double, const Q6& s) { extended = std::max(extended, detail::magnitude(x0 * s.v[0] + z0 * s.v[2])); },
      accepted, rejected);

  SolverSettings dp = settings;
  dp.method = Method::DP54;
  const OdeSolution sol = integrate_ha(initial, params, dp);
  double working = 0.0;
  for (const auto& s : sol.states) working = std::max(working, std::abs(invariant_relation(E3State::from_vector(s), params)));
  return {extended, working, !failure && sol.complete};
}

}  // namespace e3lab
