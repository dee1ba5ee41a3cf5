#include "e3lab/separation.hpp"

#include <algorithm>
#include <cmath>

namespace e3lab {

namespace {

constexpr cplx I(0.0, 1.0);

bool negligible(cplx v, const E3State& s) {
  const double scale = std::max({1.0, s.M.norm(), s.Gamma.norm()});
  return std::abs(v) <= 1e-14 * scale;
}

SeparationVars from_transformed(const TransformedVars& v) {
  const cplx r = v.x / v.y;
  return {v.y / v.x, I * (v.q - v.x1 * r + v.y1 * r * r), v.x, -I * v.x1 / v.x};
}

}  // namespace

SeparationVars sep_vars(const E3State& s, const SystemParams& p) {
  const TransformedVars v = transform(s, p);
  if (negligible(v.x, s)) throw SingularChartError("separation chart singular: x = 0");
  if (negligible(v.y, s)) throw SingularChartError("separation chart singular: y = 0");
  return from_transformed(v);
}

double CanonicalityResiduals::max_modulus() const {
  double m = 0.0;
  for (const cplx v : values) m = std::max(m, std::abs(v));
  return m;
}

CanonicalityResiduals canonicality_residuals(const E3State& s, const SystemParams& p) {
  sep_vars(s, p);  // chart check
  auto var = [&p](int which) {
    return [&p, which](const E3State& t) {
      const SeparationVars sv = from_transformed(transform(t, p));
      switch (which) {
        case 0: return sv.lambda1;
        case 1: return sv.mu1;
        case 2: return sv.lambda2;
        default: return sv.mu2;
      }
    };
  };
  const ComplexEval l1 = var(0);
  const ComplexEval m1 = var(1);
  const ComplexEval l2 = var(2);
  const ComplexEval m2 = var(3);
  CanonicalityResiduals r;
  r.values[0] = complex_bracket(l1, m1, s) - 1.0;
  r.values[1] = complex_bracket(l2, m2, s) - 1.0;
  r.values[2] = complex_bracket(l1, l2, s);
  r.values[3] = complex_bracket(l1, m2, s);
  r.values[4] = complex_bracket(l2, m1, s);
  r.values[5] = complex_bracket(m1, m2, s);
  return r;
}

RelationResiduals separation_relation_residuals(const E3State& s, const SystemParams& p) {
  const SeparationVars sv = sep_vars(s, p);
  const SpectralCoefficients sc = spectral_coefficients_from_integrals(s, p);
  const cplx l = -sv.lambda1;
  const cplx curve = (((-sc.p * l - sc.a_curve) * l - sc.b) * l - sc.c) * l - sc.d;
  const cplx l4 = l * l * l * l;
  const double r1 = std::abs(sv.mu1 * sv.mu1 - curve / l4);
  const double x1 = p.alpha() * s.M(0) + p.beta() * s.M(2);
  const double r2 = std::abs(sv.lambda2 * sv.mu2 + I * x1);
  return {r1, r2};
}

}  // namespace e3lab
