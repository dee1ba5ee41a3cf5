#include "e3lab/ode.hpp"

#include <algorithm>
#include <cmath>

#include "e3lab/errors.hpp"
#include "dp54.hpp"

namespace e3lab {

void SolverSettings::validate() const {
  if (!(t_end > 0.0)) throw InvalidParameter("t_end must be positive");
  if (!(sample_dt > 0.0)) throw InvalidParameter("sample_dt must be positive");
  if (!(step > 0.0)) throw InvalidParameter("step must be positive");
  if (method == Method::DP54 && (!(abs_tol > 0.0) || !(rel_tol > 0.0))) {
    throw InvalidParameter("tolerances must be positive");
  }
}

namespace {

Vec6 rk4_step(const Rhs& f, const Vec6& y, double h) {
  const Vec6 k1 = f(y);
  const Vec6 k2 = f(y + 0.5 * h * k1);
  const Vec6 k3 = f(y + 0.5 * h * k2);
  const Vec6 k4 = f(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

OdeSolution integrate_ode(const Rhs& rhs, const Vec6& y0, const SolverSettings& s) {
  s.validate();
  OdeSolution out;
  out.times.push_back(0.0);
  out.states.push_back(y0);

  const auto n_samples = static_cast<std::size_t>(std::ceil(s.t_end / s.sample_dt - 1e-9));
  auto sample_time = [&](std::size_t k) {
    return k >= n_samples ? s.t_end : static_cast<double>(k) * s.sample_dt;
  };

  Vec6 y = y0;
  double t = 0.0;
  std::size_t steps = 0;

  auto fail = [&](std::string why) {
    out.complete = false;
    out.failure = std::move(why);
    return out;
  };

  if (s.method == Method::RK4) {
    for (std::size_t k = 1; k <= n_samples; ++k) {
      const double target = sample_time(k);
      const double span = target - t;
      const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(span / s.step - 1e-9)));
      const double h = span / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        y = rk4_step(rhs, y, h);
        if (++steps > s.max_steps) return fail("maximum step count exceeded");
      }
      if (!y.allFinite()) return fail("non-finite state");
      t = target;
      out.times.push_back(t);
      out.states.push_back(y);
      ++out.accepted;
    }
    return out;
  }

  const auto failure = detail::dp54_integrate<double>(
      rhs, y, s,
      [&](double t_sample, const Vec6& y_sample) {
        out.times.push_back(t_sample);
        out.states.push_back(y_sample);
      },
      out.accepted, out.rejected);
  if (failure) return fail(*failure);
  return out;
}

}  // namespace e3lab
