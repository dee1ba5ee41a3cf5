#include "e3lab/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace e3lab {

CaseSelector CaseSelector::constant(double c) {
  CaseSelector s(Kind::Constant);
  s.constant_ = c;
  return s;
}

CaseSelector CaseSelector::custom(ScalarField a) {
  CaseSelector s(Kind::Custom);
  s.custom_ = std::move(a);
  return s;
}

std::vector<CaseSelector> CaseSelector::named_cases() {
  return {casimir_f1(), casimir_f2(), h2_case(), gamma_chi(), m_squared()};
}

std::optional<CaseSelector> CaseSelector::from_tag(std::string_view tag) {
  for (const auto& c : named_cases()) {
    if (c.tag() == tag) return c;
  }
  return std::nullopt;
}

bool CaseSelector::is_named() const {
  return kind_ != Kind::Constant && kind_ != Kind::Custom;
}

std::string CaseSelector::tag() const {
  switch (kind_) {
    case Kind::CasimirF1: return "casimir_f1";
    case Kind::CasimirF2: return "casimir_f2";
    case Kind::H2Case: return "h2";
    case Kind::GammaChi: return "gamma_chi";
    case Kind::MSquared: return "m_squared";
    case Kind::Constant: return "constant";
    case Kind::Custom: return "custom";
  }
  return "unknown";
}

std::string CaseSelector::description() const {
  switch (kind_) {
    case Kind::CasimirF1: return "(i) a = F1";
    case Kind::CasimirF2: return "(ii) a = F2";
    case Kind::H2Case: return "(iii) a = x0*M1 + z0*M3";
    case Kind::GammaChi: return "(iv) a = x0*G1 + z0*G3";
    case Kind::MSquared: return "(v) a = |M|^2";
    case Kind::Constant: return "a = " + std::to_string(constant_);
    case Kind::Custom: return "a = " + custom_->name();
  }
  return "unknown";
}

ScalarField coupling_field(const SystemParams& params, const CaseSelector& which) {
  using K = CaseSelector::Kind;
  switch (which.kind()) {
    case K::CasimirF1: return fields::casimir_f1();
    case K::CasimirF2: return fields::casimir_f2();
    case K::H2Case: return fields::h2(params);
    case K::GammaChi: return fields::gamma_chi(params);
    case K::MSquared: return fields::m_squared();
    case K::Constant: return fields::constant(which.constant_value());
    case K::Custom: return which.custom_field();
  }
  throw InvalidParameter("unknown case");
}

double coupling_a(const E3State& s, const SystemParams& p, const CaseSelector& which) {
  using K = CaseSelector::Kind;
  switch (which.kind()) {
    case K::CasimirF1: return s.M.dot(s.Gamma);
    case K::CasimirF2: return s.Gamma.squaredNorm();
    case K::H2Case: return p.x0() * s.M(0) + p.z0() * s.M(2);
    case K::GammaChi: return p.x0() * s.Gamma(0) + p.z0() * s.Gamma(2);
    case K::MSquared: return s.M.squaredNorm();
    case K::Constant: return which.constant_value();
    case K::Custom: return which.custom_field()(s);
  }
  throw InvalidParameter("unknown case");
}

Vec6 vector_field(const E3State& s, const SystemParams& p, double a) {
  const double x0 = p.x0();
  const double z0 = p.z0();
  const double I2 = p.I2();
  const auto& M = s.M;
  const auto& G = s.Gamma;
  Vec6 f;
  f(0) = z0 * G(1) + a * z0 * M(1);
  f(1) = x0 * G(2) - z0 * G(0) + a * (x0 * M(2) - z0 * M(0));
  f(2) = -x0 * G(1) - a * x0 * M(1);
  f(3) = (G(1) * M(2) - G(2) * M(1)) / I2 + a * z0 * G(1);
  f(4) = (G(2) * M(0) - G(0) * M(2)) / I2 + a * (x0 * G(2) - z0 * G(0));
  f(5) = (G(0) * M(1) - G(1) * M(0)) / I2 - a * x0 * G(1);
  return f;
}

Vec6 vector_field(const E3State& s, const SystemParams& p, const CaseSelector& which) {
  return vector_field(s, p, coupling_a(s, p, which));
}

Vec6 bracket_vector_field(const E3State& s, const SystemParams& p, const CaseSelector& which) {
  const double a = coupling_a(s, p, which);
  const Vec6 dH = fields::h1(p).gradient(s) + a * fields::h2(p).gradient(s);
  return structure_matrix(s) * dH;
}

Divergence divergence(const E3State& s, const SystemParams& p, const CaseSelector& which) {
  const Vec6 x = s.to_vector();
  double numeric = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double h = fd_step(x(i));
    Vec6 xp = x;
    Vec6 xm = x;
    xp(i) += h;
    xm(i) -= h;
    numeric += (vector_field(E3State::from_vector(xp), p, which)(i) -
                vector_field(E3State::from_vector(xm), p, which)(i)) /
               (2.0 * h);
  }
  const double analytic = bracket(coupling_field(p, which), fields::h2(p), s);
  return {numeric, analytic};
}

HamiltonianWitness hamiltonian_witness(const CaseSelector& which, const SystemParams& p) {
  using K = CaseSelector::Kind;
  using S = HamiltonianWitness::Status;
  const ScalarField h1 = fields::h1(p);
  const ScalarField h2 = fields::h2(p);
  switch (which.kind()) {
    case K::CasimirF1:
    case K::CasimirF2: {
      const ScalarField a = coupling_field(p, which);
      ScalarField H(
          "H1 + a*H2", [h1, h2, a](const E3State& s) { return h1(s) + a(s) * h2(s); },
          [h1, h2, a](const E3State& s) {
            return (h1.gradient(s) + a(s) * h2.gradient(s) + h2(s) * a.gradient(s)).eval();
          });
      return {S::Hamiltonian, std::move(H), "a is a Casimir"};
    }
    case K::H2Case: {
      ScalarField H(
          "H1 + H2^2/2",
          [h1, h2](const E3State& s) {
            const double v = h2(s);
            return h1(s) + 0.5 * v * v;
          },
          [h1, h2](const E3State& s) { return (h1.gradient(s) + h2(s) * h2.gradient(s)).eval(); });
      return {S::Hamiltonian, std::move(H), "a = H2"};
    }
    case K::GammaChi:
    case K::MSquared:
      return {S::NotHamiltonian, std::nullopt, "not Hamiltonian (by classification)"};
    case K::Constant:
    case K::Custom:
      break;
  }
  return {S::Undetermined, std::nullopt, "coupling outside the classified cases"};
}

InvariantSample invariants(const E3State& s, const SystemParams& p) {
  const Casimirs c = casimirs(s);
  const Hamiltonians h = hamiltonians(s, p);
  return {c.F1, c.F2, h.H1, h.H2};
}

Trajectory::Trajectory(std::vector<double> times, std::vector<E3State> states, TrajectoryMeta meta)
    : times_(std::move(times)), states_(std::move(states)), meta_(std::move(meta)) {
  if (times_.size() != states_.size()) {
    throw InvalidParameter("trajectory: times and states differ in length");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw InvalidParameter("trajectory: times must be strictly increasing");
    }
  }
  log_.reserve(states_.size());
  for (const auto& s : states_) log_.push_back(invariants(s, meta_.params));
}

InvariantSample Trajectory::max_relative_drift() const {
  InvariantSample d{0.0, 0.0, 0.0, 0.0};
  if (log_.empty()) return d;
  const auto& r = log_.front();
  auto rel = [](double v, double ref) { return std::abs(v - ref) / std::max(1.0, std::abs(ref)); };
  for (const auto& s : log_) {
    d.F1 = std::max(d.F1, rel(s.F1, r.F1));
    d.F2 = std::max(d.F2, rel(s.F2, r.F2));
    d.H1 = std::max(d.H1, rel(s.H1, r.H1));
    d.H2 = std::max(d.H2, rel(s.H2, r.H2));
  }
  return d;
}

Trajectory integrate(const E3State& initial, const SystemParams& params,
                     const CaseSelector& which, const SolverSettings& settings,
                     std::uint64_t seed) {
  const ScalarField a = coupling_field(params, which);
  const Rhs rhs = [&](const Vec6& y) {
    const E3State s = E3State::from_vector(y);
    return vector_field(s, params, a(s));
  };
  OdeSolution sol = integrate_ode(rhs, initial.to_vector(), settings);
  std::vector<E3State> states;
  states.reserve(sol.states.size());
  for (const auto& y : sol.states) states.push_back(E3State::from_vector(y));
  Trajectory traj(std::move(sol.times), std::move(states),
                  TrajectoryMeta{params, which, settings, seed});
  if (!sol.complete) throw IntegrationFailure("integration failed: " + sol.failure, std::move(traj));
  return traj;
}

}  // namespace e3lab
