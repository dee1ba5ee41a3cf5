#pragma once

#include <string>

#include "e3lab/ode.hpp"
#include "e3lab/separation.hpp"

namespace e3lab {

/// Principal moments, ordered I1 >= I2 >= I3 > 0.
class InertiaTriple {
 public:
  /// Throws InvalidParameter when the ordering or positivity fails.
  InertiaTriple(double I1, double I2, double I3);
  double I1() const { return I1_; }
  double I2() const { return I2_; }
  double I3() const { return I3_; }
  Vec3 diagonal() const { return {I1_, I2_, I3_}; }

 private:
  double I1_;
  double I2_;
  double I3_;
};

/// Heavy rigid body with center of mass chi = (x0, 0, z0) satisfying
///   x0 sqrt(I1 (I2 - I3)) + z0 sqrt(I3 (I1 - I2)) = 0.
class HAParams {
 public:
  /// Throws InvalidParameter when the Hess-Appel'rot condition fails or
  /// chi = 0.
  HAParams(InertiaTriple inertia, double x0, double z0);

  const InertiaTriple& inertia() const { return inertia_; }
  Vec3 chi() const { return {x0_, 0.0, z0_}; }
  double x0() const { return x0_; }
  double z0() const { return z0_; }
  /// Family parameters (I2, x0, z0) for comparisons with the Lax family.
  SystemParams family_params() const { return {inertia_.I2(), x0_, z0_}; }

 private:
  InertiaTriple inertia_;
  double x0_;
  double z0_;
};

/// x0 = -scale sqrt(I3 (I1 - I2)), z0 = scale sqrt(I1 (I2 - I3)).
HAParams ha_admissible_params(const InertiaTriple& inertia, double scale);

Vec3 angular_velocity(const E3State& state, const InertiaTriple& inertia);

/// Euler-Poisson: M' = M x Omega + Gamma x chi,  Gamma' = Gamma x Omega.
Vec6 ha_field(const E3State& state, const HAParams& params);

/// 1/2 <M, Omega> + <Gamma, chi>
double ha_energy(const E3State& state, const HAParams& params);
/// 1/2 <M, Omega> + <Gamma, Omega>, the alternative form; not conserved in
/// general and only reported.
double ha_energy_alt(const E3State& state, const HAParams& params);

/// x0 M1 + z0 M3
double invariant_relation(const E3State& state, const HAParams& params);

struct EquivalenceReport {
  /// || ha_field - family field(a) ||_inf for a = (alpha Om1 + beta Om2)/n
  double residual_literal = 0.0;
  /// same for a = (alpha Om1 + beta Om3)/n
  double residual_index3 = 0.0;
  /// "literal", "index3", "both" or "none" at the given tolerance.
  std::string matching(double tol) const;
};

/// Throws PreconditionError unless |x0 M1 + z0 M3| < on_surface_tol.
EquivalenceReport verify_ha_equivalence(const E3State& state, const HAParams& params,
                                        double on_surface_tol = 1e-10);

struct HASeparation {
  SeparationVars vars;
  double mu2_modulus;
  double relation_residual;  ///< r1 of the family separation relation
};

HASeparation ha_separation(const E3State& state, const HAParams& params);

OdeSolution integrate_ha(const E3State& initial, const HAParams& params,
                         const SolverSettings& settings);

/// max_t |x0 M1 + z0 M3| along the Euler-Poisson flow (DP5(4) only).
///
/// The surface is invariant but transversally unstable: off it,
///   R' = k M2 R,  k = z0 (1/I2 - 1/I1) / x0,
/// so a perturbation grows like exp(k int M2 dt), which reaches 1e14 and
/// more on T = 50 for ordinary states. Explicit Runge-Kutta stages keep R = 0
/// exactly in exact arithmetic, so only rounding leaves the surface.
/// `extended` integrates in binary128 from the initial state projected onto
/// the surface, with chi rebuilt so the admissibility condition holds to
/// binary128 precision; `working` is the plain double run from `initial`.
struct RelationDrift {
  double extended;
  double working;
  bool complete;
};

RelationDrift invariant_relation_drift(const E3State& initial, const HAParams& params,
                                       const SolverSettings& settings);

}  // namespace e3lab
