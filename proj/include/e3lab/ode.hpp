#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "e3lab/types.hpp"

namespace e3lab {

enum class Method {
  RK4,   ///< fixed-step classical Runge-Kutta
  DP54,  ///< adaptive Dormand-Prince 5(4) pair, PI step control
};

struct SolverSettings {
  Method method = Method::DP54;
  double step = 1e-3;  ///< RK4 step; initial step guess for DP54
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double t_end = 10.0;
  /// Output spacing. Steps are clipped so every sample lands exactly on
  /// k * sample_dt (and on t_end).
  double sample_dt = 0.1;
  double min_step = 1e-13;
  std::size_t max_steps = 100'000'000;

  /// Throws InvalidParameter on nonpositive tolerances, steps or t_end.
  void validate() const;
};

using Rhs = std::function<Vec6(const Vec6&)>;

struct OdeSolution {
  std::vector<double> times;
  std::vector<Vec6> states;
  bool complete = true;
  std::string failure;  ///< reason when !complete
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Integrates y' = rhs(y) from t = 0 to settings.t_end. On step-size
/// underflow or a non-finite state the solution is returned with
/// complete = false and the samples reached so far.
OdeSolution integrate_ode(const Rhs& rhs, const Vec6& y0, const SolverSettings& settings);

}  // namespace e3lab
