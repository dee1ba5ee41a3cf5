#include <Eigen/Dense>

#include "e3lab/errors.hpp"
#include "e3lab/lax.hpp"
#include "e3lab/sampling.hpp"
#include "support.hpp"

using namespace e3lab;
using test::state;

namespace {

const cplx I(0.0, 1.0);

// det N(lambda) sampled at five real points, interpolated as a quartic.
// det L = -mu^2 and N = lambda^2 L, so det N = p l^4 + a l^3 + b l^2 + c l + d.
SpectralCoefficients interpolated(const E3State& s, const SystemParams& p) {
  const LaxMatrix L(transform(s, p));
  Eigen::Matrix<double, 5, 5> V;
  Eigen::Matrix<double, 5, 1> rhs;
  for (int k = 0; k < 5; ++k) {
    const double l = k - 2.0;
    for (int j = 0; j < 5; ++j) V(k, j) = std::pow(l, 4 - j);
    rhs(k) = L.numerator(l).determinant().real();
  }
  const Eigen::Matrix<double, 5, 1> c = V.fullPivLu().solve(rhs);
  return {c(0), c(1), c(2), c(3), c(4)};
}

}  // namespace

TEST_CASE("transformed variables") {
  const SystemParams& p = test::unit_params();
  const auto v = transform(state({0, 0, -std::sqrt(2.0)}, {0, 0, 0}), p);
  CHECK(std::abs(v.x - cplx(1.0, 0.0)) < 1e-15);
  const auto z = transform(E3State{}, SystemParams(2.5, 1.0, 0.0));
  CHECK(std::abs(z.x) == 0.0);
  CHECK(std::abs(z.y) == 0.0);
  CHECK(z.x1 == 0.0);
  CHECK(z.y1 == 0.0);
  CHECK(z.q == 2.5);
  const auto w = transform(state({0.3, -1, 2}, {1, 2, 3}), test::tilted_params());
  CHECK(w.xbar == std::conj(w.x));
  CHECK(w.ybar == std::conj(w.y));
}

TEST_CASE("Lax matrix structure") {
  const SystemParams& p = test::tilted_params();
  StateSampler rng(301);
  for (int n = 0; n < 20; ++n) {
    const E3State s = rng.next();
    const cplx l = rng.next_lambda();
    CHECK(std::abs(lax_L(s, p, l).trace()) < 1e-14);
    const Mat2c Lr = lax_L(s, p, rng.next_real_lambda());
    CHECK(std::abs(Lr(0, 0).real()) < 1e-15);
    CHECK(std::abs(Lr(1, 0) + std::conj(Lr(0, 1))) < 1e-14);
  }
  const Mat2c L0 = lax_L(E3State{}, test::unit_params(), 1.0);
  CHECK(std::abs(L0(0, 0) + I) < 1e-15);
  CHECK(std::abs(L0(1, 1) - I) < 1e-15);
  CHECK(std::abs(L0(0, 1)) == 0.0);
  const E3State s = rng.next();
  const Mat2c far = lax_L(s, p, 1e8);
  CHECK(std::abs(far(0, 0) + I * p.q()) < 1e-6);
  CHECK_THROWS_AS(lax_L(s, p, 0.0), PoleError);
}

TEST_CASE("companion matrix by synthetic division") {
  const SystemParams& p = test::tilted_params();
  StateSampler rng(302);
  const E3State s = rng.next();
  const double a = 0.77;
  const LaxCompanion A = lax_A(s, p, a);
  // Away from lambda = a the quotient formula is safe to evaluate directly.
  for (cplx l : {cplx(1.5, 0.2), cplx(-0.3, 1.0)}) {
    const Mat2c direct = (l * l * lax_L(s, p, l) - a * a * lax_L(s, p, a)) / (2.0 * p.I2() * (l - a));
    CHECK((A(l) - direct).cwiseAbs().maxCoeff() < 1e-13);
  }
  CHECK(A(a).allFinite());
  const LaxCompanion A0 = lax_A(E3State{}, test::unit_params(), a);
  const cplx l(0.4, -0.9);
  CHECK(std::abs(A0(l)(0, 0) - (-I) * (l + a) / 2.0) < 1e-15);
  CHECK(std::abs(A0(l)(1, 1) - I * (l + a) / 2.0) < 1e-15);
}

TEST_CASE("Lax equation holds along flows and fails for a perturbed field") {
  const SystemParams& p = test::tilted_params();
  StateSampler rng(303);
  const std::vector<cplx> lambdas = {rng.next_lambda(), rng.next_lambda(), rng.next_lambda()};
  SolverSettings st;
  st.t_end = 3.0;
  for (const auto& c : CaseSelector::named_cases()) {
    const auto tr = integrate(rng.next(), p, c, st);
    CHECK(verify_lax(tr, lambdas) < 1e-10);
    const auto bumped = [&](const E3State& x) {
      Vec6 f = vector_field(x, p, c);
      f(1) += 1e-3;
      return f;
    };
    CHECK(verify_lax(tr, lambdas, bumped) > 1e-6);
  }
  const auto eq = integrate(state({0, 0, 0}, {0.6, 0, -0.8}), p, CaseSelector::h2_case(), st);
  CHECK(verify_lax(eq, lambdas) < 1e-15);
}

TEST_CASE("r-matrix identity and its sign") {
  const SystemParams& p = test::tilted_params();
  StateSampler rng(304);
  const E3State s = rng.next();
  CHECK(verify_rmatrix(s, p, 1.3, 0.7) < 1e-12);
  CHECK(verify_rmatrix(E3State{}, p, 1.3, 0.7) < 1e-14);
  CHECK(verify_rmatrix(s, p, 1.3, 0.7, +1.0) > 1e-6);
  CHECK(verify_rmatrix(s, p, cplx(0.2, 1.0), cplx(-1.1, 0.4)) < 1e-12);
  CHECK_THROWS_AS(verify_rmatrix(s, p, 0.5, 0.5), PreconditionError);
}

TEST_CASE("spectral coefficients") {
  const auto sc = spectral_coefficients(state({0, 1, 0}, {0, 0, 1}), test::unit_params());
  CHECK(sc.p == 1.0);
  CHECK(sc.a_curve == 0.0);
  CHECK(sc.b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sc.c == 0.0);
  CHECK(sc.d == doctest::Approx(1.0).epsilon(1e-15));
  const auto z = spectral_coefficients(E3State{}, SystemParams(2.0, 1.0, 1.0));
  CHECK(z.p == doctest::Approx(8.0));
  CHECK(z.d == 0.0);

  const SystemParams& p = test::tilted_params();
  StateSampler rng(305);
  for (int n = 0; n < 200; ++n) {
    const E3State s = rng.next();
    const auto a = spectral_coefficients(s, p);
    const auto b = spectral_coefficients_from_integrals(s, p);
    const auto o = interpolated(s, p);
    CHECK(std::abs(a.p - b.p) < 1e-12);
    CHECK(std::abs(a.a_curve - b.a_curve) < 1e-12);
    CHECK(std::abs(a.b - b.b) < 1e-12);
    CHECK(std::abs(a.c - b.c) < 1e-12);
    CHECK(std::abs(a.d - b.d) < 1e-12);
    CHECK(std::abs(a.a_curve - o.a_curve) < 1e-9);
    CHECK(std::abs(a.b - o.b) < 1e-9);
    CHECK(std::abs(a.c - o.c) < 1e-9);
    CHECK(std::abs(a.d - o.d) < 1e-9);
  }
}
