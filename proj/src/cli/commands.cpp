#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "e3lab/cli.hpp"
#include "e3lab/elliptic.hpp"
#include "e3lab/sampling.hpp"
#include "e3lab/sweep.hpp"

namespace e3lab::cli {

namespace {

constexpr std::size_t kStates = 1000;
constexpr std::size_t kTriples = 100;

int finish(const Report& r, std::ostream& out) {
  r.write(out);
  return r.all_passed() ? kOk : kCheckFailed;
}

std::string complex_text(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

// The configured trajectory; a failure becomes a failed check.
std::optional<Trajectory> trajectory_or_fail(const RunConfig& cfg, const CaseSelector& c,
                                             std::uint64_t seed, Report& r, const std::string& name) {
  try {
    return integrate(cfg.initial, cfg.params(), c, cfg.integrator, seed);
  } catch (const IntegrationFailure& e) {
    r.fail(name, e.what());
  }
  return std::nullopt;
}

double max_relative_drift(const Trajectory& tr) {
  const auto d = tr.max_relative_drift();
  return std::max({d.F1, d.F2, d.H1, d.H2});
}

double spectral_spread(const Trajectory& tr) {
  const SystemParams& p = tr.meta().params;
  const auto s0 = spectral_coefficients(tr.states().front(), p);
  const double base[] = {s0.p, s0.a_curve, s0.b, s0.c, s0.d};
  double worst = 0.0;
  for (const auto& s : tr.states()) {
    const auto sc = spectral_coefficients(s, p);
    const double now[] = {sc.p, sc.a_curve, sc.b, sc.c, sc.d};
    for (int k = 0; k < 5; ++k)
      worst = std::max(worst, std::abs(now[k] - base[k]) / std::max(1.0, std::abs(base[k])));
  }
  return worst;
}

ScalarField nested_bracket(const ScalarField& u, const ScalarField& v) {
  return ScalarField("{" + u.name() + "," + v.name() + "}",
                     [u, v](const E3State& x) { return bracket(u, v, x); });
}

void suite_poisson(const RunConfig& cfg, const CaseSelector& c, std::span<const E3State> states,
                   std::uint64_t seed, Report& r) {
  const SystemParams p = cfg.params();
  std::vector<ScalarField> fs;
  for (int i = 0; i < 6; ++i) fs.push_back(fields::coordinate(i));
  fs.push_back(fields::h1(p));
  fs.push_back(fields::h2(p));
  for (const auto& C : {fields::casimir_f1(), fields::casimir_f2()}) {
    const double worst = sweep::max_residual(states, [&](const E3State& s) {
      double m = 0.0;
      for (const auto& f : fs) m = std::max(m, std::abs(bracket(C, f, s)));
      return m;
    }, Execution::Parallel);
    r.check("poisson." + C.name(), worst, 1e-10);
  }

  const double jacobi = sweep::max_residual(states.first(20), [](const E3State& s) {
    double m = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
          const auto f = fields::coordinate(i);
          const auto g = fields::coordinate(j);
          const auto h = fields::coordinate(k);
          const double sum = bracket(f, nested_bracket(g, h), s) + bracket(g, nested_bracket(h, f), s) +
                             bracket(h, nested_bracket(f, g), s);
          m = std::max(m, std::abs(sum));
        }
    return m;
  }, Execution::Parallel);
  r.check("poisson.jacobi", jacobi, 1e-9);

  const double identity = sweep::max_residual(states, [&](const E3State& s) {
    return (vector_field(s, p, c) - bracket_vector_field(s, p, c)).cwiseAbs().maxCoeff();
  }, Execution::Parallel);
  r.check("poisson.field_identity", identity, 1e-12);

  if (auto tr = trajectory_or_fail(cfg, c, seed, r, "poisson.conservation"))
    r.check("poisson.conservation", max_relative_drift(*tr), 1e-7);
}

void suite_measure(const RunConfig& cfg, const CaseSelector& c, std::span<const E3State> states,
                   Report& r) {
  const SystemParams p = cfg.params();
  const auto divs = sweep::evaluate(states, [&](const E3State& s) {
    const auto d = divergence(s, p, c);
    return std::abs(d.numeric - d.analytic);
  }, Execution::Parallel);
  r.check("measure.consistency", *std::max_element(divs.begin(), divs.end()), 1e-5);
  const double div = sweep::max_residual(states, [&](const E3State& s) {
    return std::abs(divergence(s, p, c).analytic);
  }, Execution::Parallel);
  r.check("measure.divergence_free", div, 1e-5);
}

void suite_hamiltonian(const RunConfig& cfg, const CaseSelector& c, std::span<const E3State> states,
                       Report& r) {
  const SystemParams p = cfg.params();
  const auto w = hamiltonian_witness(c, p);
  switch (w.status) {
    case HamiltonianWitness::Status::Hamiltonian: {
      const ScalarField& H = *w.hamiltonian;
      const double res = sweep::max_residual(states, [&](const E3State& s) {
        return (hamiltonian_vector_field(H, s) - vector_field(s, p, c)).cwiseAbs().maxCoeff();
      }, Execution::Parallel);
      r.check("hamiltonian.witness", res, 1e-12).extra.emplace_back("H", H.name());
      break;
    }
    case HamiltonianWitness::Status::NotHamiltonian:
    case HamiltonianWitness::Status::Undetermined:
      r.skip("hamiltonian.witness", w.reason);
      break;
  }
}

void suite_lax(const RunConfig& cfg, const CaseSelector& c, StateSampler& rng, std::uint64_t seed,
               Report& r) {
  std::vector<cplx> lambdas;
  for (int k = 0; k < 5; ++k) lambdas.push_back(rng.next_lambda());
  if (auto tr = trajectory_or_fail(cfg, c, seed, r, "lax.equation"))
    r.check("lax.equation", verify_lax(*tr, lambdas), 1e-10);
}

void suite_rmatrix(const RunConfig& cfg, std::span<const E3State> states, StateSampler& rng,
                   Report& r) {
  const SystemParams p = cfg.params();
  std::vector<std::pair<cplx, cplx>> spectral;
  while (spectral.size() < kTriples) {
    const cplx l = rng.next_lambda();
    const cplx m = rng.next_lambda();
    if (std::abs(l - m) >= 0.1) spectral.emplace_back(l, m);
  }
  const auto res = sweep::evaluate(states.first(kTriples), [&](const E3State& s) {
    const std::size_t i = static_cast<std::size_t>(&s - states.data());
    return verify_rmatrix(s, p, spectral[i].first, spectral[i].second);
  }, Execution::Parallel);
  r.check("rmatrix.identity", *std::max_element(res.begin(), res.end()), 1e-12);
}

void suite_spectral(const RunConfig& cfg, const CaseSelector& c, std::span<const E3State> states,
                    std::uint64_t seed, Report& r) {
  const SystemParams p = cfg.params();
  const double id = sweep::max_residual(states, [&](const E3State& s) {
    const auto a = spectral_coefficients(s, p);
    const auto b = spectral_coefficients_from_integrals(s, p);
    return std::max({std::abs(a.p - b.p), std::abs(a.a_curve - b.a_curve), std::abs(a.b - b.b),
                     std::abs(a.c - b.c), std::abs(a.d - b.d)});
  }, Execution::Parallel);
  r.check("spectral.identities", id, 1e-12);
  if (auto tr = trajectory_or_fail(cfg, c, seed, r, "spectral.constancy"))
    r.check("spectral.constancy", spectral_spread(*tr), 1e-7);
}

// Trajectory times on the uniform sample grid (drops a short final step).
std::size_t uniform_prefix(const std::vector<double>& t) {
  if (t.size() < 3) return t.size();
  const double h = t[1] - t[0];
  const double last = t[t.size() - 1] - t[t.size() - 2];
  return std::abs(last - h) > 1e-9 * h ? t.size() - 1 : t.size();
}

void write_columns(const std::string& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& cols) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  for (std::size_t k = 0; k < header.size(); ++k) f << (k ? "," : "") << header[k];
  f << '\n';
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) f << (k ? "," : "") << fmt(i < cols[k].size() ? cols[k][i] : NAN);
    f << '\n';
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"poisson", "measure", "hamiltonian", "lax", "rmatrix", "spectral", "all"};
}

int cmd_simulate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  try {
    write_trajectory_csv(out, integrate(cfg.initial, cfg.params(), cfg.make_case(), cfg.integrator, seed));
    return kOk;
  } catch (const IntegrationFailure& e) {
    write_trajectory_csv(out, e.partial);
    err << "simulate: partial output (" << e.partial.size() << " rows): " << e.what() << '\n';
    return kPartial;
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::uint64_t seed, std::ostream& out,
               std::ostream& /*err*/) {
  const CaseSelector c = cfg.make_case();
  StateSampler rng(seed);
  const std::vector<E3State> states = rng.draw(kStates);
  Report r;
  r.info("case", c.tag());
  r.info("seed", std::to_string(seed));
  const bool all = suite == "all";
  if (all || suite == "poisson") suite_poisson(cfg, c, states, seed, r);
  if (all || suite == "measure") suite_measure(cfg, c, states, r);
  if (all || suite == "hamiltonian") suite_hamiltonian(cfg, c, states, r);
  if (all || suite == "lax") suite_lax(cfg, c, rng, seed, r);
  if (all || suite == "rmatrix") suite_rmatrix(cfg, states, rng, r);
  if (all || suite == "spectral") suite_spectral(cfg, c, states, seed, r);
  return finish(r, out);
}

int cmd_reduce(const RunConfig& config, std::uint64_t seed, std::ostream& out, std::ostream& /*err*/) {
  // Reconstruction integrates and differentiates the sampled u; it needs a fine grid.
  RunConfig cfg = config;
  cfg.integrator.sample_dt = std::min(cfg.integrator.sample_dt, 0.01);
  const SystemParams p = cfg.params();
  const CaseSelector c = cfg.make_case();
  const auto k = reduced_constants(cfg.initial, p);
  Report r;
  r.info("c1", k.c1);
  r.info("c2", k.c2);
  r.info("d1", k.d1);
  r.info("d2", k.d2);
  r.info("A_shift", k.A_shift);
  r.info("B", k.B);
  r.info("C", k.C);
  r.info("D", k.D);

  const auto tr = trajectory_or_fail(cfg, c, seed, r, "reduction.residual");
  if (!tr) return finish(r, out);
  r.check("reduction.residual", reduction_residual(*tr), 1e-6);
  const std::vector<double> u = u_series(*tr);

  double universality = 0.0;
  for (const auto& other : CaseSelector::named_cases()) {
    try {
      const auto uo = u_series(integrate(cfg.initial, p, other, cfg.integrator, seed));
      for (std::size_t i = 0; i < std::min(u.size(), uo.size()); ++i)
        universality = std::max(universality, std::abs(uo[i] - u[i]));
    } catch (const IntegrationFailure&) {
      universality = INFINITY;
    }
  }
  r.check("reduction.u_universality", universality, 1e-6);

  std::vector<double> sigma, X2, X3, Y2, Y3;
  const std::size_t n = uniform_prefix(tr->times());
  try {
    const std::span<const double> times(tr->times().data(), n);
    const auto rec = reconstruct(times, std::span<const double>(u.data(), n), polar_angle(rotate(cfg.initial, p)),
                                 k, p, c);
    double err = 0.0;
    for (std::size_t i = 0; i < rec.states.size(); ++i) {
      const auto rot = rotate(tr->states()[i], p);
      err = std::max({err, (rec.states[i].X - rot.X).cwiseAbs().maxCoeff(),
                      (rec.states[i].Y - rot.Y).cwiseAbs().maxCoeff()});
      sigma.push_back(rec.sigma[i]);
      X2.push_back(rec.states[i].X(1));
      X3.push_back(rec.states[i].X(2));
      Y2.push_back(rec.states[i].Y(1));
      Y3.push_back(rec.states[i].Y(2));
    }
    auto& e = r.check("reconstruction.error", err, 1e-5);
    if (rec.truncated) e.extra.emplace_back("truncated", "true");
    r.check("reconstruction.consistency", rec.consistency_residual, 1e-6);
  } catch (const Error& e) {
    r.skip("reconstruction.error", e.what());
    r.skip("reconstruction.consistency", e.what());
  }

  std::vector<double> closed;
  const auto iso = verify_isomorphism(cfg.initial, p);
  if (iso.degenerate) {
    r.info("curve", "degenerate");
    r.skip("isomorphism.j_gap", "degenerate: " + iso.reason);
    r.skip("closed_form.gap", "degenerate");
    r.skip("closed_form.kernel", "degenerate");
  } else {
    r.info("curve", "elliptic");
    r.info("j_spectral", iso.j_spectral);
    r.info("j_reduction", iso.j_reduction);
    r.check("isomorphism.j_gap", iso.gap, 1e-8);
    try {
      const auto rot = rotate(cfg.initial, p);
      const Vec6 f = rotated_field(rot, p, coupling_a(cfg.initial, p, c));
      const double du0 = 2.0 * (rot.X(1) * f(1) + rot.X(2) * f(2));
      const auto sol = solve_u_closed_form(k, p.I2(), u[0], du0 >= 0.0 ? 1 : -1);
      double gap = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        closed.push_back(sol(tr->times()[i]));
        gap = std::max(gap, std::abs(closed.back() - u[i]));
      }
      r.info("period", sol.period());
      r.check("closed_form.gap", gap, 1e-6);
      const auto& wp = sol.p_function();
      const double w = wp.real_half_period();
      double kernel = 0.0;
      for (int m = 1; m < 20; ++m) {
        kernel = std::max(kernel, p_kernel_residual(wp, w * (0.05 + 0.1 * m)));
      }
      r.check("closed_form.kernel", kernel, 1e-9);
    } catch (const Error& e) {
      r.skip("closed_form.gap", e.what());
    }
  }

  if (!cfg.data_path.empty()) {
    write_columns(cfg.data_path, {"t", "u", "u_closed_form", "sigma", "X2", "X3", "Y2", "Y3"},
                  {tr->times(), u, closed, sigma, X2, X3, Y2, Y3});
  }
  return finish(r, out);
}

int cmd_separate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& /*err*/) {
  const SystemParams p = cfg.params();
  const CaseSelector c = cfg.make_case();
  const auto v = sep_vars(cfg.initial, p);  // singular chart propagates as a hard error
  Report r;
  if (!c.is_named() || c.kind() == CaseSelector::Kind::GammaChi || c.kind() == CaseSelector::Kind::MSquared)
    r.info("note", "separation is claimed for the Hamiltonian cases only");
  r.info("lambda1", complex_text(v.lambda1));
  r.info("mu1", complex_text(v.mu1));
  r.info("lambda2", complex_text(v.lambda2));
  r.info("mu2", complex_text(v.mu2));
  const auto can = canonicality_residuals(cfg.initial, p);
  for (std::size_t i = 0; i < can.values.size(); ++i)
    r.info("bracket" + std::string(can.names[i]), complex_text(can.values[i]));
  r.check("separation.canonicality", can.max_modulus(), 1e-6);
  const auto rel = separation_relation_residuals(cfg.initial, p);
  r.check("separation.r1", rel.r1, 1e-8);
  r.check("separation.r2", rel.r2, 1e-14);

  StateSampler rng(seed);
  std::vector<E3State> states;
  for (int i = 0; i < 200; ++i) states.push_back(rng.next_nonsingular(p));
  r.check("separation.canonicality_sampled",
          sweep::max_residual(states, [&](const E3State& s) { return canonicality_residuals(s, p).max_modulus(); },
                              Execution::Parallel),
          1e-6);
  r.check("separation.r1_sampled",
          sweep::max_residual(states, [&](const E3State& s) { return separation_relation_residuals(s, p).r1; },
                              Execution::Parallel),
          1e-8);

  if (auto tr = trajectory_or_fail(cfg, c, seed, r, "separation.lambda2mu2_drift")) {
    // lambda2 mu2 = -i x1 is defined even where the chart is singular.
    const double x10 = transform(tr->states().front(), p).x1;
    double drift = 0.0;
    for (const auto& s : tr->states()) drift = std::max(drift, std::abs(transform(s, p).x1 - x10));
    r.check("separation.lambda2mu2_drift", drift, 1e-8);
  }
  return finish(r, out);
}

int cmd_curves(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& /*err*/) {
  const SystemParams p = cfg.params();
  const CaseSelector c = cfg.make_case();
  const auto sc = spectral_coefficients(cfg.initial, p);
  const auto si = spectral_coefficients_from_integrals(cfg.initial, p);
  Report r;
  r.info("p", sc.p);
  r.info("a_curve", sc.a_curve);
  r.info("b", sc.b);
  r.info("c", sc.c);
  r.info("d", sc.d);
  r.check("curves.identities",
          std::max({std::abs(sc.p - si.p), std::abs(sc.a_curve - si.a_curve), std::abs(sc.b - si.b),
                    std::abs(sc.c - si.c), std::abs(sc.d - si.d)}),
          1e-12);
  const auto cubic = CubicCurve::from_reduced(reduced_constants(cfg.initial, p), p.I2());
  r.info("cubic", fmt(cubic.k3) + "," + fmt(cubic.k2) + "," + fmt(cubic.k1) + "," + fmt(cubic.k0));
  const auto iso = verify_isomorphism(cfg.initial, p);
  if (iso.degenerate) {
    r.info("curve", "degenerate");
    r.skip("curves.j_gap", "degenerate: " + iso.reason);
  } else {
    r.info("curve", "elliptic");
    r.info("j_spectral", iso.j_spectral);
    r.info("j_reduction", iso.j_reduction);
    r.check("curves.j_gap", iso.gap, 1e-8);
  }
  if (auto tr = trajectory_or_fail(cfg, c, seed, r, "curves.constancy"))
    r.check("curves.constancy", spectral_spread(*tr), 1e-7);
  return finish(r, out);
}

int cmd_hess(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const HAParams hp = cfg.hess_params();
  const E3State& s0 = cfg.initial;
  Report r;
  r.info("x0", hp.x0());
  r.info("z0", hp.z0());
  r.info("invariant_relation", invariant_relation(s0, hp));

  EquivalenceReport eq;
  try {
    eq = verify_ha_equivalence(s0, hp);
  } catch (const PreconditionError& e) {
    r.fail("hess.equivalence", e.what());
    r.write(out);
    err << "hess: " << e.what() << '\n';
    return kCheckFailed;
  }
  r.info("hess.equivalence.literal", eq.residual_literal);
  r.info("hess.equivalence.index3", eq.residual_index3);
  r.check("hess.equivalence", std::min(eq.residual_literal, eq.residual_index3), 1e-10)
      .extra.emplace_back("matching", eq.matching(1e-10));

  StateSampler rng(seed);
  double lit = 0.0, idx = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto e = verify_ha_equivalence(rng.next_on_surface(hp), hp);
    lit = std::max(lit, e.residual_literal);
    idx = std::max(idx, e.residual_index3);
  }
  EquivalenceReport sampled{lit, idx};
  r.info("hess.equivalence_sampled.literal", lit);
  r.info("hess.equivalence_sampled.index3", idx);
  r.check("hess.equivalence_sampled", std::min(lit, idx), 1e-10)
      .extra.emplace_back("matching", sampled.matching(1e-10));

  const auto sol = integrate_ha(s0, hp, cfg.integrator);
  if (!sol.complete) r.fail("hess.integration", sol.failure);
  const double e0 = ha_energy(s0, hp);
  const double alt0 = ha_energy_alt(s0, hp);
  const auto c0 = casimirs(s0);
  double de = 0.0, dalt = 0.0, dc = 0.0;
  for (const auto& y : sol.states) {
    const E3State s = E3State::from_vector(y);
    de = std::max(de, std::abs(ha_energy(s, hp) - e0) / std::max(1.0, std::abs(e0)));
    dalt = std::max(dalt, std::abs(ha_energy_alt(s, hp) - alt0) / std::max(1.0, std::abs(alt0)));
    const auto cs = casimirs(s);
    dc = std::max({dc, std::abs(cs.F1 - c0.F1) / std::max(1.0, std::abs(c0.F1)),
                   std::abs(cs.F2 - c0.F2) / std::max(1.0, c0.F2)});
  }
  const RelationDrift drift = invariant_relation_drift(s0, hp, cfg.integrator);
  if (drift.complete) {
    r.check("hess.invariant_relation_drift", drift.extended, 1e-9);
  } else {
    r.fail("hess.invariant_relation_drift", "extended-precision integration incomplete");
  }
  r.info("hess.invariant_relation_drift.double", drift.working);
  r.check("hess.energy_drift", de, 1e-7);
  r.check("hess.casimir_drift", dc, 1e-7);
  r.info("hess.energy_printed_form_drift", dalt);

  try {
    const auto sep = ha_separation(s0, hp);
    r.check("hess.mu2", sep.mu2_modulus, 1e-10);
    r.check("hess.relation", sep.relation_residual, 1e-8);
  } catch (const SingularChartError& e) {
    r.skip("hess.mu2", e.what());
    r.skip("hess.relation", e.what());
  }
  return finish(r, out);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"e3lab: integrable families on e(3)"};
  app.require_subcommand(1);
  std::string config_path, out_path, suite = "all";
  std::optional<std::uint64_t> seed_flag;

  const char* names[] = {"simulate", "verify", "reduce", "separate", "curves", "hess"};
  const char* about[] = {"integrate and write the trajectory CSV", "run verification suites",
                         "elliptic reduction report", "separation-variable report",
                         "spectral coefficients and j-invariants", "Hess-Appel'rot report"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], about[i]);
    sub->add_option("--config", config_path, "config file");
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--seed", seed_flag, "random seed");
    if (std::string(names[i]) == "verify")
      sub->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << config_path << ": " << e.what() << '\n';
    return kUsage;
  }

  std::uint64_t seed = 0;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (cfg.seed) {
    seed = *cfg.seed;
  } else if (const char* env = std::getenv("E3LAB_SEED")) {
    try {
      seed = parse_config(std::string("[run]\nseed = ") + env).seed.value();
    } catch (const ConfigError&) {
      err << "E3LAB_SEED: expected a nonnegative integer\n";
      return kUsage;
    }
  }

  if (!out_path.empty()) cfg.output_path = out_path;
  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "cannot write '" << cfg.output_path << "'\n";
      return kCheckFailed;
    }
  }
  std::ostream& dest = cfg.output_path.empty() ? out : file;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "simulate") return cmd_simulate(cfg, seed, dest, err);
    if (cmd == "verify") return cmd_verify(cfg, suite, seed, dest, err);
    if (cmd == "reduce") return cmd_reduce(cfg, seed, dest, err);
    if (cmd == "separate") return cmd_separate(cfg, seed, dest, err);
    if (cmd == "curves") return cmd_curves(cfg, seed, dest, err);
    return cmd_hess(cfg, seed, dest, err);
  } catch (const Error& e) {
    err << cmd << ": " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace e3lab::cli
