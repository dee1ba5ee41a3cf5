#include "e3lab/errors.hpp"
#include "e3lab/reduction.hpp"
#include "e3lab/sampling.hpp"
#include "support.hpp"

using namespace e3lab;
using test::state;

TEST_CASE("rotation") {
  const E3State s = state({1, 2, 3}, {4, 5, 6});
  auto r = rotate(s, test::unit_params());
  CHECK((r.X - s.M).norm() == 0.0);
  CHECK((r.Y - s.Gamma).norm() == 0.0);
  r = rotate(s, SystemParams(1.0, 0.0, 1.0));
  CHECK((r.X - Vec3(3, 2, -1)).norm() == 0.0);
  StateSampler rng(401);
  for (int n = 0; n < 20; ++n) {
    const E3State x = rng.next();
    const E3State back = unrotate(rotate(x, test::tilted_params()), test::tilted_params());
    CHECK((back.to_vector() - x.to_vector()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(rotate(x, test::tilted_params()).X.norm() == doctest::Approx(x.M.norm()).epsilon(1e-15));
  }
}

TEST_CASE("reduced constants of the worked configuration") {
  const SystemParams& p = test::unit_params();
  const E3State s = state({0, 1, 0}, {0, 0, 1});
  const auto k = reduced_constants(s, p);
  CHECK(k.c1 == 0.0);
  CHECK(k.c2 == 1.0);
  CHECK(k.d1 == 0.5);
  CHECK(k.d2 == 0.0);
  CHECK(k.A_shift == 0.5);
  CHECK(k.B == -2.0);
  CHECK(k.C == -3.0);
  CHECK(k.D == 0.0);

  const auto r = rotate(s, p);
  const Vec6 f = rotated_field(r, p, 0.0);
  const double u = r.X(1) * r.X(1) + r.X(2) * r.X(2);
  const double udot = 2.0 * (r.X(1) * f(1) + r.X(2) * f(2));
  CHECK(u == 1.0);
  CHECK(udot == 2.0);
  CHECK(udot * udot == k.cubic(u, p.I2()));
}

TEST_CASE("rotated field agrees with the family field") {
  StateSampler rng(402);
  const SystemParams& p = test::tilted_params();
  for (int n = 0; n < 50; ++n) {
    const E3State s = rng.next();
    const double a = rng.uniform(-2, 2);
    const Vec6 f = vector_field(s, p, a);
    const Vec6 g = rotated_field(rotate(s, p), p, a);
    const E3State fr = unrotate({g.head<3>(), g.tail<3>()}, p);
    CHECK((fr.to_vector() - f).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(g(0)) < 1e-13);
  }
}

TEST_CASE("sigma rate") {
  ReducedConstants k{};
  CHECK(sigma_rhs(0.7, k, 0.0, test::unit_params()) == 0.0);
  CHECK_THROWS_AS(sigma_rhs(0.0, k, 0.0, test::unit_params()), PolarDegeneracyError);
  CHECK_THROWS_AS(coupling_from_u(1.0, k, test::unit_params(), CaseSelector::custom(fields::coordinate(1))),
                  PreconditionError);
}

TEST_CASE("reduction along trajectories") {
  const SystemParams& p = test::tilted_params();
  SolverSettings st;
  st.t_end = 10.0;
  st.sample_dt = 0.05;
  StateSampler rng(403);
  const E3State s0 = rng.next();
  std::vector<std::vector<double>> us;
  for (const auto& c : CaseSelector::named_cases()) {
    const auto tr = integrate(s0, p, c, st);
    CHECK(reduction_residual(tr) < 1e-6);
    const auto k = reduced_constants(s0, p);
    double y1_gap = 0.0, x1_gap = 0.0, a_gap = 0.0;
    const double X10 = rotate(s0, p).X(0);
    for (const auto& x : tr.states()) {
      const auto r = rotate(x, p);
      const double u = r.X(1) * r.X(1) + r.X(2) * r.X(2);
      y1_gap = std::max(y1_gap, std::abs(r.Y(0) - y1_from_u(u, k, p)));
      x1_gap = std::max(x1_gap, std::abs(r.X(0) - X10));
      a_gap = std::max(a_gap, std::abs(coupling_from_u(u, k, p, c) - coupling_a(x, p, c)));
    }
    CHECK(y1_gap < 1e-8);
    CHECK(x1_gap < 1e-8);
    CHECK(a_gap < 1e-8);
    us.push_back(u_series(tr));
  }
  double gap = 0.0;
  for (const auto& u : us)
    for (std::size_t i = 0; i < u.size(); ++i) gap = std::max(gap, std::abs(u[i] - us[0][i]));
  CHECK(gap < 1e-6);
}

TEST_CASE("reconstruction round trip") {
  const SystemParams& p = test::tilted_params();
  SolverSettings st;
  st.t_end = 10.0;
  st.sample_dt = 0.01;
  const E3State s0 = state({0.4, 1.1, -0.3}, {0.9, -0.2, 0.5});
  for (const auto& c : CaseSelector::named_cases()) {
    const auto tr = integrate(s0, p, c, st);
    const auto k = reduced_constants(s0, p);
    const auto u = u_series(tr);
    const auto rec = reconstruct(tr.times(), u, polar_angle(rotate(s0, p)), k, p, c);
    REQUIRE_FALSE(rec.truncated);
    double err = 0.0;
    for (std::size_t i = 0; i < rec.states.size(); ++i) {
      const auto r = rotate(tr.states()[i], p);
      err = std::max({err, (rec.states[i].X - r.X).cwiseAbs().maxCoeff(),
                      (rec.states[i].Y - r.Y).cwiseAbs().maxCoeff()});
    }
    CHECK_MESSAGE(err < 1e-5, c.tag());
    CHECK(rec.consistency_residual < 1e-6);
  }
}

TEST_CASE("reconstruction preconditions") {
  const SystemParams& p = test::unit_params();
  const auto k = reduced_constants(state({0, 1, 0}, {0, 0, 1}), p);
  const std::vector<double> t = {0, 0.1, 0.2};
  const std::vector<double> u = {1, 1, 1};
  CHECK_THROWS_AS(reconstruct(t, u, 0.0, k, p, CaseSelector::h2_case()), PreconditionError);
  const std::vector<double> t5 = {0, 0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<double> u5 = {1, 0.5, 0.1, 0.0, 0.1, 0.5};
  const auto rec = reconstruct(t5, u5, 0.0, k, p, CaseSelector::h2_case());
  CHECK(rec.truncated);
  CHECK(rec.times.size() == 3);
}
