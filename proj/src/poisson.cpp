#include "e3lab/poisson.hpp"

#include <cmath>
#include <utility>

#include "e3lab/errors.hpp"

namespace e3lab {

SystemParams::SystemParams(double I2, double x0, double z0)
    : I2_(I2), x0_(x0), z0_(z0), norm_(std::hypot(x0, z0)) {
  if (!std::isfinite(I2) || !std::isfinite(x0) || !std::isfinite(z0)) {
    throw InvalidParameter("system parameters must be finite");
  }
  if (I2 <= 0.0) {
    throw InvalidParameter("I2 must be positive");
  }
  if (norm_ == 0.0) {
    throw InvalidParameter("x0 and z0 must not both vanish");
  }
}

namespace {

// Cross-product matrix with the sign of the e(3) bracket: [v]_ij = -eps_ijk v_k.
Eigen::Matrix3d bracket_block(const Vec3& v) {
  Eigen::Matrix3d b;
  b << 0.0, -v(2), v(1),
       v(2), 0.0, -v(0),
       -v(1), v(0), 0.0;
  return b;
}

}  // namespace

Mat6 structure_matrix(const E3State& state) {
  Mat6 J = Mat6::Zero();
  const Eigen::Matrix3d mg = bracket_block(state.Gamma);
  J.topLeftCorner<3, 3>() = bracket_block(state.M);
  J.topRightCorner<3, 3>() = mg;
  J.bottomLeftCorner<3, 3>() = -mg.transpose();
  return J;
}

ScalarField::ScalarField(std::string name, Eval eval, Grad grad)
    : name_(std::move(name)), eval_(std::move(eval)), grad_(std::move(grad)) {}

Vec6 ScalarField::gradient(const E3State& state) const {
  return grad_ ? grad_(state) : numeric_gradient(state);
}

Vec6 ScalarField::numeric_gradient(const E3State& state) const {
  return central_difference_gradient(eval_, state);
}

Vec6 central_difference_gradient(const ScalarField::Eval& f, const E3State& state) {
  const Vec6 x = state.to_vector();
  Vec6 g;
  for (int i = 0; i < 6; ++i) {
    const double h = fd_step(x(i));
    Vec6 xp = x;
    Vec6 xm = x;
    xp(i) += h;
    xm(i) -= h;
    g(i) = (f(E3State::from_vector(xp)) - f(E3State::from_vector(xm))) / (2.0 * h);
  }
  return g;
}

double bracket(const Vec6& df, const Vec6& dg, const E3State& state) {
  if (!df.allFinite() || !dg.allFinite()) {
    throw EvaluationError("non-finite gradient in bracket");
  }
  return df.dot(structure_matrix(state) * dg);
}

double bracket(const ScalarField& f, const ScalarField& g, const E3State& state) {
  return bracket(f.gradient(state), g.gradient(state), state);
}

Vec6c complex_gradient(const ComplexEval& f, const E3State& state) {
  const Vec6 re = central_difference_gradient(
      [&f](const E3State& s) { return f(s).real(); }, state);
  const Vec6 im = central_difference_gradient(
      [&f](const E3State& s) { return f(s).imag(); }, state);
  Vec6c g;
  for (int i = 0; i < 6; ++i) g(i) = cplx(re(i), im(i));
  return g;
}

cplx complex_bracket(const ComplexEval& f, const ComplexEval& g, const E3State& state) {
  const Vec6c df = complex_gradient(f, state);
  const Vec6c dg = complex_gradient(g, state);
  if (!df.allFinite() || !dg.allFinite()) {
    throw EvaluationError("non-finite gradient in complex bracket");
  }
  return df.transpose() * (structure_matrix(state).cast<cplx>() * dg);
}

Casimirs casimirs(const E3State& state) {
  return {state.M.dot(state.Gamma), state.Gamma.squaredNorm()};
}

Hamiltonians hamiltonians(const E3State& state, const SystemParams& params) {
  const double H1 = state.M.squaredNorm() / (2.0 * params.I2()) +
                    params.x0() * state.Gamma(0) + params.z0() * state.Gamma(2);
  const double H2 = params.x0() * state.M(0) + params.z0() * state.M(2);
  return {H1, H2};
}

Vec6 hamiltonian_vector_field(const ScalarField& H, const E3State& state) {
  const Vec6 dH = H.gradient(state);
  if (!dH.allFinite()) throw EvaluationError("non-finite Hamiltonian gradient");
  return structure_matrix(state) * dH;
}

namespace fields {

ScalarField coordinate(int index) {
  static const char* const names[] = {"M1", "M2", "M3", "G1", "G2", "G3"};
  if (index < 0 || index >= 6) throw InvalidParameter("coordinate index out of range");
  return {names[index],
          [index](const E3State& s) { return s.to_vector()(index); },
          [index](const E3State&) {
            Vec6 g = Vec6::Zero();
            g(index) = 1.0;
            return g;
          }};
}

ScalarField casimir_f1() {
  return {"F1", [](const E3State& s) { return s.M.dot(s.Gamma); },
          [](const E3State& s) {
            Vec6 g;
            g << s.Gamma, s.M;
            return g;
          }};
}

ScalarField casimir_f2() {
  return {"F2", [](const E3State& s) { return s.Gamma.squaredNorm(); },
          [](const E3State& s) {
            Vec6 g;
            g << Vec3::Zero(), 2.0 * s.Gamma;
            return g;
          }};
}

ScalarField h1(const SystemParams& p) {
  return {"H1", [p](const E3State& s) { return hamiltonians(s, p).H1; },
          [p](const E3State& s) {
            Vec6 g;
            g << s.M / p.I2(), p.x0(), 0.0, p.z0();
            return g;
          }};
}

ScalarField h2(const SystemParams& p) {
  return {"H2", [p](const E3State& s) { return hamiltonians(s, p).H2; },
          [p](const E3State&) {
            Vec6 g;
            g << p.x0(), 0.0, p.z0(), 0.0, 0.0, 0.0;
            return g;
          }};
}

ScalarField gamma_chi(const SystemParams& p) {
  return {"x0*G1+z0*G3",
          [p](const E3State& s) { return p.x0() * s.Gamma(0) + p.z0() * s.Gamma(2); },
          [p](const E3State&) {
            Vec6 g;
            g << 0.0, 0.0, 0.0, p.x0(), 0.0, p.z0();
            return g;
          }};
}

ScalarField m_squared() {
  return {"|M|^2", [](const E3State& s) { return s.M.squaredNorm(); },
          [](const E3State& s) {
            Vec6 g;
            g << 2.0 * s.M, Vec3::Zero();
            return g;
          }};
}

ScalarField constant(double value) {
  return {"const", [value](const E3State&) { return value; },
          [](const E3State&) { return Vec6::Zero().eval(); }};
}

}  // namespace fields

}  // namespace e3lab
