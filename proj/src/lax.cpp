#include "e3lab/lax.hpp"

#include <algorithm>
#include <cmath>

namespace e3lab {

namespace {

constexpr cplx I(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

double max_abs(const auto& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  }
  return r;
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c k;
  for (int i = 0; i < 2; ++i)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) k(2 * i + j, 2 * k1 + l) = a(i, k1) * b(j, l);
  return k;
}

TransformedVars transform_linear(const Vec6& v, const SystemParams& p, double q) {
  const double al = p.alpha();
  const double be = p.beta();
  const double re_x = (be * v(0) - al * v(2)) / kSqrt2;
  const double re_y = (be * v(3) - al * v(5)) / kSqrt2;
  const double im_x = -v(1) / kSqrt2;
  const double im_y = -v(4) / kSqrt2;
  return {cplx(re_x, im_x), cplx(re_y, im_y), cplx(re_x, -im_x), cplx(re_y, -im_y),
          al * v(0) + be * v(2), al * v(3) + be * v(5), q};
}

}  // namespace

TransformedVars transform(const E3State& s, const SystemParams& p) {
  return transform_linear(s.to_vector(), p, p.q());
}

LaxMatrix::LaxMatrix(const TransformedVars& v) {
  coeff_[0] << -I * v.y1, kSqrt2 * I * v.y, kSqrt2 * I * v.ybar, I * v.y1;
  coeff_[1] << -I * v.x1, kSqrt2 * I * v.x, kSqrt2 * I * v.xbar, I * v.x1;
  coeff_[2] << -I * v.q, 0.0, 0.0, I * v.q;
}

Mat2c LaxMatrix::numerator(cplx lambda) const {
  return coeff_[0] + lambda * (coeff_[1] + lambda * coeff_[2]);
}

Mat2c LaxMatrix::operator()(cplx lambda) const {
  if (lambda == 0.0) throw PoleError("L(lambda) has a pole at lambda = 0", 0.0);
  return numerator(lambda) / (lambda * lambda);
}

Mat2c lax_L(const E3State& s, const SystemParams& p, cplx lambda) {
  return LaxMatrix(transform(s, p))(lambda);
}

LaxCompanion lax_A(const E3State& s, const SystemParams& p, double a) {
  // (N(l) - N(a)) / (l - a) = N1 + N2 (l + a) for N = N0 + N1 l + N2 l^2.
  const LaxMatrix L(transform(s, p));
  const auto& c = L.coefficients();
  const double scale = 1.0 / (2.0 * p.I2());
  return {scale * (c[1] + a * c[2]), scale * c[2]};
}

Mat2c lax_A(const E3State& s, const SystemParams& p, const CaseSelector& which, cplx lambda) {
  return lax_A(s, p, coupling_a(s, p, which))(lambda);
}

Mat2c lax_L_rate(const Vec6& velocity, const SystemParams& p, cplx lambda) {
  return LaxMatrix(transform_linear(velocity, p, 0.0))(lambda);
}

double lax_residual(const E3State& s, const SystemParams& p, const CaseSelector& which,
                    cplx lambda, const FieldOverride& field) {
  const double a = coupling_a(s, p, which);
  const Vec6 f = field ? field(s) : vector_field(s, p, a);
  const Mat2c L = lax_L(s, p, lambda);
  const Mat2c A = lax_A(s, p, a)(lambda);
  const Mat2c rate = lax_L_rate(f, p, lambda);
  return max_abs((rate - (L * A - A * L)).eval());
}

double verify_lax(const Trajectory& traj, std::span<const cplx> lambdas,
                  const FieldOverride& field) {
  const auto& meta = traj.meta();
  double worst = 0.0;
  for (const auto& s : traj.states()) {
    for (const cplx lambda : lambdas) {
      const double r = lax_residual(s, meta.params, meta.case_selector, lambda, field);
      worst = std::isnan(r) ? r : std::max(worst, r);
      if (std::isnan(worst)) return worst;
    }
  }
  return worst;
}

double verify_rmatrix(const E3State& s, const SystemParams& p, cplx lambda, cplx mu,
                      double r_sign) {
  if (lambda == mu) throw PreconditionError("r(lambda - mu) is singular at lambda = mu");
  const Mat2c Ll = lax_L(s, p, lambda);
  const Mat2c Lm = lax_L(s, p, mu);

  // Gradients of every entry of L(lambda), L(mu): column m is dL/dx_m.
  std::array<Mat2c, 6> dLl;
  std::array<Mat2c, 6> dLm;
  for (int m = 0; m < 6; ++m) {
    Vec6 e = Vec6::Zero();
    e(m) = 1.0;
    dLl[static_cast<std::size_t>(m)] = lax_L_rate(e, p, lambda);
    dLm[static_cast<std::size_t>(m)] = lax_L_rate(e, p, mu);
  }
  const Eigen::Matrix<cplx, 6, 6> J = structure_matrix(s).cast<cplx>();

  Mat4c lhs;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          Vec6c gl;
          Vec6c gm;
          for (int m = 0; m < 6; ++m) {
            gl(m) = dLl[static_cast<std::size_t>(m)](i, k);
            gm(m) = dLm[static_cast<std::size_t>(m)](j, l);
          }
          lhs(2 * i + j, 2 * k + l) = gl.transpose() * (J * gm);
        }

  Mat4c P = Mat4c::Zero();
  P(0, 0) = P(1, 2) = P(2, 1) = P(3, 3) = 1.0;
  const Mat4c r = (r_sign / (lambda - mu)) * P;
  const Mat4c S = kron(Ll, Mat2c::Identity()) + kron(Mat2c::Identity(), Lm);
  const Mat4c rhs = r * S - S * r;
  return max_abs((lhs - rhs).eval());
}

SpectralCoefficients spectral_coefficients(const E3State& s, const SystemParams& p) {
  const TransformedVars v = transform(s, p);
  // w = -i P(l) with P = q l^2 + x1 l + y1, so w^2 = -P^2.
  const std::array<double, 3> P = {v.y1, v.x1, v.q};  // ascending powers
  std::array<cplx, 5> poly{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) poly[i + j] -= P[i] * P[j];
  const std::array<cplx, 2> D = {v.y, v.x};
  const std::array<cplx, 2> Ds = {v.ybar, v.xbar};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) poly[i + j] -= 2.0 * D[i] * Ds[j];
  return {-poly[4].real(), -poly[3].real(), -poly[2].real(), -poly[1].real(), -poly[0].real()};
}

SpectralCoefficients spectral_coefficients_from_integrals(const E3State& s,
                                                          const SystemParams& p) {
  const Hamiltonians h = hamiltonians(s, p);
  const Casimirs c = casimirs(s);
  return {p.q() * p.q(), 2.0 * p.I2() * h.H2, 2.0 * p.I2() * h.H1, 2.0 * c.F1, c.F2};
}

}  // namespace e3lab
