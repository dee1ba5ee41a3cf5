#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "e3lab/hess.hpp"

namespace e3lab {

/// Seeded source of test states; components uniform in [-range, range].
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed, double range = 2.0) : rng_(seed), range_(range) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  E3State next();
  std::vector<E3State> draw(std::size_t n);

  /// Rejects states whose separation chart is near-singular (|x| or |y|
  /// below min_modulus).
  E3State next_nonsingular(const SystemParams& params, double min_modulus = 0.1);

  /// Random state on x0 M1 + z0 M3 = 0: M2 and the M-component along
  /// (-z0, 0, x0) drawn freely, the component along chi set to zero.
  E3State next_on_surface(const HAParams& params);

  /// Spectral parameter with |Re|, |Im| <= 2 and |lambda| >= 0.2.
  cplx next_lambda();
  /// Real spectral parameter in [-2, -0.2] U [0.2, 2].
  double next_real_lambda();

 private:
  std::mt19937_64 rng_;
  double range_;
};

}  // namespace e3lab
