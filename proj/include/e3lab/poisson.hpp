#pragma once

#include <functional>
#include <string>

#include "e3lab/types.hpp"

namespace e3lab {

/// Lie-Poisson tensor of e(3) at `state`:
///   {M_i, M_j} = -eps_ijk M_k,  {M_i, G_j} = -eps_ijk G_k,  {G_i, G_j} = 0.
Mat6 structure_matrix(const E3State& state);

/// Central-difference step for a coordinate of magnitude |x|.
inline double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

/// A real function on e(3)^* with an optional analytic gradient.
class ScalarField {
 public:
  using Eval = std::function<double(const E3State&)>;
  using Grad = std::function<Vec6(const E3State&)>;

  ScalarField(std::string name, Eval eval, Grad grad = {});

  double operator()(const E3State& state) const { return eval_(state); }

  /// Analytic gradient when available, central differences otherwise.
  Vec6 gradient(const E3State& state) const;
  Vec6 numeric_gradient(const E3State& state) const;

  bool has_analytic_gradient() const { return static_cast<bool>(grad_); }
  const std::string& name() const { return name_; }

  /// Same function with the analytic gradient dropped.
  ScalarField without_gradient() const { return {name_, eval_}; }

 private:
  std::string name_;
  Eval eval_;
  Grad grad_;
};

Vec6 central_difference_gradient(const ScalarField::Eval& f, const E3State& state);

/// grad(f)^T J grad(g). Throws EvaluationError on a non-finite gradient.
double bracket(const ScalarField& f, const ScalarField& g, const E3State& state);
double bracket(const Vec6& df, const Vec6& dg, const E3State& state);

/// Complex-valued functions: the bracket is extended bilinearly, using
/// central-difference gradients of the real and imaginary parts.
using ComplexEval = std::function<cplx(const E3State&)>;
Vec6c complex_gradient(const ComplexEval& f, const E3State& state);
cplx complex_bracket(const ComplexEval& f, const ComplexEval& g, const E3State& state);

struct Casimirs {
  double F1;
  double F2;
};
Casimirs casimirs(const E3State& state);

struct Hamiltonians {
  double H1;
  double H2;
};
Hamiltonians hamiltonians(const E3State& state, const SystemParams& params);

/// {x^i, H} for every coordinate, i.e. J grad(H).
Vec6 hamiltonian_vector_field(const ScalarField& H, const E3State& state);

namespace fields {

/// Coordinate function x^i, i in [0, 6) ordered (M1, M2, M3, G1, G2, G3).
ScalarField coordinate(int index);
ScalarField casimir_f1();
ScalarField casimir_f2();
ScalarField h1(const SystemParams& params);
ScalarField h2(const SystemParams& params);
/// x0 G1 + z0 G3
ScalarField gamma_chi(const SystemParams& params);
/// |M|^2
ScalarField m_squared();
ScalarField constant(double value);

}  // namespace fields

}  // namespace e3lab
