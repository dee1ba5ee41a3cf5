#include "e3lab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>

#include <omp.h>

namespace e3lab::sweep {

namespace {

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> evaluate(std::span<const E3State> states, const StateKernel& kernel,
                             Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(states.size());
  std::vector<double> out(states.size());
  std::vector<std::exception_ptr> errors(states.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = kernel(states[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = kernel(states[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

double max_residual(std::span<const E3State> states, const StateKernel& kernel, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(states.size());
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto clean = [](double v) { return std::isnan(v) ? inf : v; };
  double worst = 0.0;
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) worst = std::max(worst, clean(kernel(states[i])));
    return worst;
  }
  std::vector<std::exception_ptr> errors(states.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      worst = std::max(worst, clean(kernel(states[i])));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return worst;
}

std::vector<Trajectory> integrate_batch(std::span<const E3State> initial,
                                        const SystemParams& params, const CaseSelector& which,
                                        const SolverSettings& settings, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(initial.size());
  std::vector<std::optional<Trajectory>> slots(initial.size());
  std::vector<std::exception_ptr> errors(initial.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i].emplace(integrate(initial[i], params, which, settings));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  std::vector<Trajectory> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace e3lab::sweep
