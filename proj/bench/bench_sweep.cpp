// Serial reference vs OpenMP sweep over the heavier per-state kernels.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "e3lab/lax.hpp"
#include "e3lab/sampling.hpp"
#include "e3lab/separation.hpp"
#include "e3lab/sweep.hpp"

using namespace e3lab;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial=%8.4fs parallel=%8.4fs speedup=%5.2f identical=%s\n", name, serial, parallel,
              serial / parallel, same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const SystemParams p(1.3, 0.6, -0.8);
  StateSampler rng(7);
  std::vector<E3State> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back(rng.next_nonsingular(p));
  std::printf("threads=%d states=%zu\n", sweep::max_threads(), n);

  const sweep::StateKernel canon = [&](const E3State& s) { return canonicality_residuals(s, p).max_modulus(); };
  const sweep::StateKernel rmat = [&](const E3State& s) { return verify_rmatrix(s, p, 1.3, cplx(0.2, 0.7)); };
  for (auto [name, k] : {std::pair{"canonicality", &canon}, std::pair{"rmatrix", &rmat}}) {
    double a = 0, b = 0;
    const double ts = seconds([&] { a = sweep::max_residual(states, *k, Execution::Serial); });
    const double tp = seconds([&] { b = sweep::max_residual(states, *k, Execution::Parallel); });
    row(name, ts, tp, a == b);
  }

  SolverSettings st;
  st.t_end = 20.0;
  const std::span<const E3State> ics(states.data(), std::min<std::size_t>(n, 32));
  std::vector<Trajectory> a, b;
  const double ts = seconds([&] { a = sweep::integrate_batch(ics, p, CaseSelector::h2_case(), st, Execution::Serial); });
  const double tp = seconds([&] { b = sweep::integrate_batch(ics, p, CaseSelector::h2_case(), st, Execution::Parallel); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i)
    same = a[i].states().back().to_vector() == b[i].states().back().to_vector();
  row("integrate_batch", ts, tp, same);
  return same ? 0 : 1;
}
