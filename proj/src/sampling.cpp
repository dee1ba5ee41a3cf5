#include "e3lab/sampling.hpp"

#include <cmath>

namespace e3lab {

E3State StateSampler::next() {
  E3State s;
  for (int i = 0; i < 3; ++i) s.M(i) = uniform(-range_, range_);
  for (int i = 0; i < 3; ++i) s.Gamma(i) = uniform(-range_, range_);
  return s;
}

std::vector<E3State> StateSampler::draw(std::size_t n) {
  std::vector<E3State> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

E3State StateSampler::next_nonsingular(const SystemParams& params, double min_modulus) {
  while (true) {
    const E3State s = next();
    const double al = params.alpha();
    const double be = params.beta();
    const double x = std::hypot(be * s.M(0) - al * s.M(2), s.M(1)) / std::sqrt(2.0);
    const double y = std::hypot(be * s.Gamma(0) - al * s.Gamma(2), s.Gamma(1)) / std::sqrt(2.0);
    if (x >= min_modulus && y >= min_modulus) return s;
  }
}

E3State StateSampler::next_on_surface(const HAParams& params) {
  const double n = std::hypot(params.x0(), params.z0());
  const Vec3 perp(-params.z0() / n, 0.0, params.x0() / n);
  E3State s;
  s.M = uniform(-range_, range_) * perp;
  s.M(1) = uniform(-range_, range_);
  for (int i = 0; i < 3; ++i) s.Gamma(i) = uniform(-range_, range_);
  return s;
}

cplx StateSampler::next_lambda() {
  while (true) {
    const cplx l(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
    if (std::abs(l) >= 0.2) return l;
  }
}

double StateSampler::next_real_lambda() {
  const double m = uniform(0.2, 2.0);
  return uniform(0.0, 1.0) < 0.5 ? -m : m;
}

}  // namespace e3lab
