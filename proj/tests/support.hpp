#pragma once

#include <cmath>

#include <doctest.h>

#include "e3lab/types.hpp"

namespace e3lab::test {

inline E3State state(Vec3 M, Vec3 G) { return {M, G}; }

inline const SystemParams& unit_params() {
  static const SystemParams p(1.0, 1.0, 0.0);
  return p;
}

/// Off-axis parameters so that alpha and beta are both nonzero.
inline const SystemParams& tilted_params() {
  static const SystemParams p(1.3, 0.6, -0.8);
  return p;
}

inline double inf_norm(const Vec6& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace e3lab::test
