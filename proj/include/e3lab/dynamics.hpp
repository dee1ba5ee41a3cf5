#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e3lab/errors.hpp"
#include "e3lab/ode.hpp"
#include "e3lab/poisson.hpp"

namespace e3lab {

/// Choice of the coupling polynomial a in  x' = {x, H1} + a {x, H2}.
class CaseSelector {
 public:
  enum class Kind {
    CasimirF1,  ///< (i)   a = M.Gamma
    CasimirF2,  ///< (ii)  a = |Gamma|^2
    H2Case,     ///< (iii) a = x0 M1 + z0 M3
    GammaChi,   ///< (iv)  a = x0 G1 + z0 G3
    MSquared,   ///< (v)   a = |M|^2
    Constant,
    Custom,     ///< user field; expected to be polynomial (not checked)
  };

  static CaseSelector casimir_f1() { return CaseSelector(Kind::CasimirF1); }
  static CaseSelector casimir_f2() { return CaseSelector(Kind::CasimirF2); }
  static CaseSelector h2_case() { return CaseSelector(Kind::H2Case); }
  static CaseSelector gamma_chi() { return CaseSelector(Kind::GammaChi); }
  static CaseSelector m_squared() { return CaseSelector(Kind::MSquared); }
  static CaseSelector constant(double c);
  static CaseSelector custom(ScalarField a);

  /// The five measure-preserving cases (i)-(v), in order.
  static std::vector<CaseSelector> named_cases();

  /// Parses the tags produced by tag(); "constant" and "custom" are not
  /// accepted here because they need a payload.
  static std::optional<CaseSelector> from_tag(std::string_view tag);

  Kind kind() const { return kind_; }
  bool is_named() const;
  double constant_value() const { return constant_; }
  const ScalarField& custom_field() const { return *custom_; }

  /// Stable short name: casimir_f1, casimir_f2, h2, gamma_chi, m_squared,
  /// constant, custom.
  std::string tag() const;
  /// Human-readable, includes the roman numeral for named cases.
  std::string description() const;

 private:
  explicit CaseSelector(Kind kind) : kind_(kind) {}

  Kind kind_;
  double constant_ = 0.0;
  std::optional<ScalarField> custom_;
};

ScalarField coupling_field(const SystemParams& params, const CaseSelector& which);
double coupling_a(const E3State& state, const SystemParams& params, const CaseSelector& which);

/// Component form of the family with a given value of the coupling.
Vec6 vector_field(const E3State& state, const SystemParams& params, double a);
Vec6 vector_field(const E3State& state, const SystemParams& params, const CaseSelector& which);

/// Same field through the bracket engine: J (grad H1 + a grad H2).
Vec6 bracket_vector_field(const E3State& state, const SystemParams& params,
                          const CaseSelector& which);

struct Divergence {
  double numeric;   ///< sum of d f_i / d x_i by central differences
  double analytic;  ///< {a, H2}
};
Divergence divergence(const E3State& state, const SystemParams& params, const CaseSelector& which);

struct HamiltonianWitness {
  enum class Status { Hamiltonian, NotHamiltonian, Undetermined };
  Status status;
  std::optional<ScalarField> hamiltonian;
  std::string reason;
};

/// (i), (ii): H = H1 + a H2.  (iii): H = H1 + H2^2 / 2.  (iv), (v): not
/// Hamiltonian in the e(3) structure (classification, not computed).
/// Constant and Custom couplings are Undetermined.
HamiltonianWitness hamiltonian_witness(const CaseSelector& which, const SystemParams& params);

struct InvariantSample {
  double F1;
  double F2;
  double H1;
  double H2;
};
InvariantSample invariants(const E3State& state, const SystemParams& params);

struct TrajectoryMeta {
  SystemParams params;
  CaseSelector case_selector;
  SolverSettings settings;
  std::uint64_t seed = 0;
};

/// Time-sampled solution of the family. Immutable once built.
class Trajectory {
 public:
  /// Throws InvalidParameter unless times are strictly increasing and all
  /// sequences have the same length.
  Trajectory(std::vector<double> times, std::vector<E3State> states, TrajectoryMeta meta);

  const std::vector<double>& times() const { return times_; }
  const std::vector<E3State>& states() const { return states_; }
  const std::vector<InvariantSample>& invariant_log() const { return log_; }
  const TrajectoryMeta& meta() const { return meta_; }
  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }

  /// max_t |F(t) - F(0)| / max(1, |F(0)|) for each invariant.
  InvariantSample max_relative_drift() const;

 private:
  std::vector<double> times_;
  std::vector<E3State> states_;
  std::vector<InvariantSample> log_;
  TrajectoryMeta meta_;
};

/// Thrown by integrate(); carries the samples reached before the failure.
struct IntegrationFailure : Error {
  IntegrationFailure(const std::string& what, Trajectory partial)
      : Error(what), partial(std::move(partial)) {}
  Trajectory partial;
};

Trajectory integrate(const E3State& initial, const SystemParams& params,
                     const CaseSelector& which, const SolverSettings& settings,
                     std::uint64_t seed = 0);

}  // namespace e3lab
