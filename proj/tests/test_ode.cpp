#include <cmath>

#include "e3lab/errors.hpp"
#include "e3lab/ode.hpp"
#include "support.hpp"

using namespace e3lab;

namespace {

// Three uncoupled oscillators with frequencies 1, 2, 3.
Vec6 oscillators(const Vec6& y) {
  Vec6 f;
  for (int k = 0; k < 3; ++k) {
    const double w = k + 1.0;
    f(2 * k) = w * y(2 * k + 1);
    f(2 * k + 1) = -w * y(2 * k);
  }
  return f;
}

Vec6 oscillators_exact(double t) {
  Vec6 y;
  for (int k = 0; k < 3; ++k) {
    const double w = k + 1.0;
    y(2 * k) = std::sin(w * t);
    y(2 * k + 1) = std::cos(w * t);
  }
  return y;
}

double max_error(const OdeSolution& sol) {
  double e = 0.0;
  for (std::size_t i = 0; i < sol.times.size(); ++i)
    e = std::max(e, (sol.states[i] - oscillators_exact(sol.times[i])).cwiseAbs().maxCoeff());
  return e;
}

}  // namespace

TEST_CASE("adaptive solver hits the sample grid and the exact solution") {
  SolverSettings s;
  s.t_end = 10.0;
  s.sample_dt = 0.25;
  const auto sol = integrate_ode(oscillators, oscillators_exact(0.0), s);
  REQUIRE(sol.complete);
  REQUIRE(sol.times.size() == 41);
  for (std::size_t i = 0; i < sol.times.size(); ++i) CHECK(sol.times[i] == doctest::Approx(0.25 * i).epsilon(1e-14));
  CHECK(sol.times.back() == 10.0);
  CHECK(max_error(sol) < 1e-8);
}

TEST_CASE("RK4 converges at fourth order") {
  SolverSettings s;
  s.method = Method::RK4;
  s.t_end = 2.0;
  s.sample_dt = 0.5;
  s.step = 0.02;
  const double e1 = max_error(integrate_ode(oscillators, oscillators_exact(0.0), s));
  s.step = 0.01;
  const double e2 = max_error(integrate_ode(oscillators, oscillators_exact(0.0), s));
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("blow-up is reported as an incomplete solution") {
  SolverSettings s;
  s.t_end = 2.0;
  Vec6 y0 = Vec6::Zero();
  y0(0) = 1.0;
  const auto sol = integrate_ode([](const Vec6& y) { Vec6 f = Vec6::Zero(); f(0) = y(0) * y(0); return f; },
                                 y0, s);
  CHECK_FALSE(sol.complete);
  CHECK_FALSE(sol.failure.empty());
  CHECK(sol.times.back() < 1.0);
}

TEST_CASE("solver settings validation") {
  SolverSettings s;
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidParameter);
  s = SolverSettings{};
  s.t_end = -1.0;
  CHECK_THROWS_AS(s.validate(), InvalidParameter);
  s = SolverSettings{};
  s.sample_dt = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidParameter);
}
