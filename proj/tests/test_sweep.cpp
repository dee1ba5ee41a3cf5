#include "e3lab/lax.hpp"
#include "e3lab/sampling.hpp"
#include "e3lab/sweep.hpp"
#include "support.hpp"

using namespace e3lab;

TEST_CASE("parallel sweeps reproduce the serial reference") {
  const SystemParams& p = test::tilted_params();
  StateSampler rng(801);
  const auto states = rng.draw(300);
  const sweep::StateKernel k = [&](const E3State& s) { return verify_rmatrix(s, p, 0.9, cplx(-0.4, 1.1)); };
  CHECK(sweep::evaluate(states, k, Execution::Serial) == sweep::evaluate(states, k, Execution::Parallel));
  CHECK(sweep::max_residual(states, k, Execution::Serial) == sweep::max_residual(states, k, Execution::Parallel));

  SolverSettings st;
  st.t_end = 2.0;
  const std::span<const E3State> ics(states.data(), 8);
  const auto a = sweep::integrate_batch(ics, p, CaseSelector::m_squared(), st, Execution::Serial);
  const auto b = sweep::integrate_batch(ics, p, CaseSelector::m_squared(), st, Execution::Parallel);
  REQUIRE(a.size() == 8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].size() == b[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j)
      CHECK(a[i].states()[j].to_vector() == b[i].states()[j].to_vector());
  }
}

TEST_CASE("NaN counts as infinity; the first failure is rethrown") {
  StateSampler rng(802);
  const auto states = rng.draw(64);
  const sweep::StateKernel nan_at_5 = [&](const E3State& s) { return &s == &states[5] ? NAN : 0.0; };
  for (auto e : {Execution::Serial, Execution::Parallel}) CHECK(std::isinf(sweep::max_residual(states, nan_at_5, e)));
  const sweep::StateKernel boom = [&](const E3State& s) -> double {
    if (&s == &states[40]) throw std::runtime_error("forty");
    if (&s == &states[10]) throw std::runtime_error("ten");
    return 0.0;
  };
  try {
    sweep::max_residual(states, boom, Execution::Parallel);
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "ten");
  }
  CHECK(sweep::max_residual({}, boom, Execution::Parallel) == 0.0);
}
