#pragma once

#include <functional>
#include <span>
#include <vector>

#include "e3lab/dynamics.hpp"

namespace e3lab {

/// Serial loops are the reference; Parallel runs the same loop under
/// OpenMP. Both produce identical results (the reductions are max).
enum class Execution { Serial, Parallel };

namespace sweep {

using StateKernel = std::function<double(const E3State&)>;

/// kernel(state) for every state, in input order.
std::vector<double> evaluate(std::span<const E3State> states, const StateKernel& kernel,
                             Execution exec);

/// max over states; NaN counts as +infinity. Zero for an empty span.
double max_residual(std::span<const E3State> states, const StateKernel& kernel, Execution exec);

/// One trajectory per initial state. The first failure (in input order)
/// is rethrown after all workers finish.
std::vector<Trajectory> integrate_batch(std::span<const E3State> initial,
                                        const SystemParams& params, const CaseSelector& which,
                                        const SolverSettings& settings, Execution exec);

int max_threads();

}  // namespace sweep

}  // namespace e3lab
