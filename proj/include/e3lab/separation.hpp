#pragma once

#include <array>
#include <string_view>

#include "e3lab/lax.hpp"

namespace e3lab {

/// Canonical pairs (lambda1, mu1), (lambda2, mu2) built from the Lax
/// matrix: lambda1 = y/x, mu1 = i (q - x1 x / y + y1 x^2 / y^2),
/// lambda2 = x, mu2 = -i x1 / x.
struct SeparationVars {
  cplx lambda1;
  cplx mu1;
  cplx lambda2;
  cplx mu2;
};

/// Throws SingularChartError when x or y vanishes.
SeparationVars sep_vars(const E3State& state, const SystemParams& params);

struct CanonicalityResiduals {
  /// {l1,m1}-1, {l2,m2}-1, {l1,l2}, {l1,m2}, {l2,m1}, {m1,m2}
  std::array<cplx, 6> values{};
  static constexpr std::array<std::string_view, 6> names = {
      "{l1,m1}-1", "{l2,m2}-1", "{l1,l2}", "{l1,m2}", "{l2,m1}", "{m1,m2}"};
  double max_modulus() const;
};

/// Brackets by central differences of real and imaginary parts.
CanonicalityResiduals canonicality_residuals(const E3State& state, const SystemParams& params);

struct RelationResiduals {
  /// |mu1^2 - curve(-lambda1) / lambda1^4|, where
  /// curve(l) = -p l^4 - a_curve l^3 - b l^2 - c l - d.
  double r1;
  /// |lambda2 mu2 + i (alpha M1 + beta M3)|
  double r2;
};

RelationResiduals separation_relation_residuals(const E3State& state, const SystemParams& params);

}  // namespace e3lab
