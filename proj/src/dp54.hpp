// Dormand-Prince 5(4) with PI step control, generic over the state type so
// the same controller runs in double and in binary128.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "e3lab/ode.hpp"

namespace e3lab::detail {

template <class T>
struct DpTableau {
  static constexpr T a21 = T(1) / 5;
  static constexpr T a31 = T(3) / 40, a32 = T(9) / 40;
  static constexpr T a41 = T(44) / 45, a42 = T(-56) / 15, a43 = T(32) / 9;
  static constexpr T a51 = T(19372) / 6561, a52 = T(-25360) / 2187, a53 = T(64448) / 6561,
                     a54 = T(-212) / 729;
  static constexpr T a61 = T(9017) / 3168, a62 = T(-355) / 33, a63 = T(46732) / 5247,
                     a64 = T(49) / 176, a65 = T(-5103) / 18656;
  static constexpr T b1 = T(35) / 384, b3 = T(500) / 1113, b4 = T(125) / 192,
                     b5 = T(-2187) / 6784, b6 = T(11) / 84;
  // b - b_hat
  static constexpr T e1 = T(71) / 57600, e3 = T(-71) / 16695, e4 = T(71) / 1920,
                     e5 = T(-17253) / 339200, e6 = T(22) / 525, e7 = T(-1) / 40;
};

template <class T>
double magnitude(const T& x) {
  return std::abs(static_cast<double>(x));
}

template <class V>
struct DpStep {
  V y;
  V k_last;  // f(y_new), reused as k1 of the next step (FSAL)
  double err;
};

template <class T, class V, class F>
DpStep<V> dp54_step(const F& f, const V& y, const V& k1, double h_d, double atol, double rtol) {
  using D = DpTableau<T>;
  const T h = static_cast<T>(h_d);
  const V k2 = f(y + h * (D::a21 * k1));
  const V k3 = f(y + h * (D::a31 * k1 + D::a32 * k2));
  const V k4 = f(y + h * (D::a41 * k1 + D::a42 * k2 + D::a43 * k3));
  const V k5 = f(y + h * (D::a51 * k1 + D::a52 * k2 + D::a53 * k3 + D::a54 * k4));
  const V k6 = f(y + h * (D::a61 * k1 + D::a62 * k2 + D::a63 * k3 + D::a64 * k4 + D::a65 * k5));
  const V y5 = y + h * (D::b1 * k1 + D::b3 * k3 + D::b4 * k4 + D::b5 * k5 + D::b6 * k6);
  const V k7 = f(y5);
  const V err_vec = h * (D::e1 * k1 + D::e3 * k3 + D::e4 * k4 + D::e5 * k5 + D::e6 * k6 + D::e7 * k7);
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double sc = atol + rtol * std::max(magnitude(y[i]), magnitude(y5[i]));
    const double r = magnitude(err_vec[i]) / sc;
    sum += r * r;
  }
  return {y5, k7, std::sqrt(sum / 6.0)};
}

/// Runs the adaptive loop from t = 0 to s.t_end; on_sample(t, y) is called at
/// every grid time after 0. Returns a failure reason, or nothing on success.
template <class T, class V, class F, class Sample>
std::optional<std::string> dp54_integrate(const F& f, V y, const SolverSettings& s, Sample&& on_sample,
                                          std::size_t& accepted, std::size_t& rejected) {
  constexpr double safety = 0.9;
  constexpr double beta = 0.04;
  constexpr double alpha = 0.2 - 0.75 * beta;
  constexpr double min_factor = 0.2;
  constexpr double max_factor = 10.0;

  const auto n_samples = static_cast<std::size_t>(std::ceil(s.t_end / s.sample_dt - 1e-9));
  double t = 0.0;
  double h = std::min(s.step, s.sample_dt);
  double err_prev = 1e-4;
  std::size_t steps = 0;
  V k1 = f(y);
  for (std::size_t k = 1; k <= n_samples; ++k) {
    const double target = k >= n_samples ? s.t_end : static_cast<double>(k) * s.sample_dt;
    while (t < target) {
      bool clipped = false;
      double h_try = h;
      if (t + h_try >= target) {
        h_try = target - t;
        clipped = true;
      }
      if (h_try < s.min_step && !clipped) return "step size underflow";
      if (++steps > s.max_steps) return "maximum step count exceeded";

      const DpStep<V> st = dp54_step<T>(f, y, k1, h_try, s.abs_tol, s.rel_tol);
      if (!std::isfinite(st.err)) {
        ++rejected;
        h = h_try * min_factor;
        if (h < s.min_step) return "non-finite state";
        continue;
      }
      if (st.err <= 1.0) {
        t = clipped ? target : t + h_try;
        y = st.y;
        k1 = st.k_last;
        ++accepted;
        const double e = std::max(st.err, 1e-10);
        double factor = safety * std::pow(e, -alpha) * std::pow(err_prev, beta);
        factor = std::clamp(factor, min_factor, max_factor);
        err_prev = e;
        // A clipped step says nothing about the natural step size.
        if (!clipped) h = h_try * factor;
      } else {
        ++rejected;
        const double factor = std::max(min_factor, safety * std::pow(st.err, -alpha));
        h = h_try * factor;
      }
    }
    on_sample(target, y);
  }
  return std::nullopt;
}

}  // namespace e3lab::detail
