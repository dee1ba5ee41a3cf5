#include <cmath>
#include <cstdio>
#include <ostream>

#include "e3lab/cli.hpp"

namespace e3lab::cli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Check& Report::check(std::string name, double residual, double tol) {
  const bool ok = residual < tol;  // false for NaN
  checks_.push_back({std::move(name), ok ? Check::Status::Pass : Check::Status::Fail, residual, {}});
  checks_.back().extra.emplace_back("tol", fmt(tol));
  lines_.push_back({true, checks_.size() - 1, {}});
  return checks_.back();
}

Check& Report::skip(std::string name, std::string why) {
  checks_.push_back({std::move(name), Check::Status::Skip, NAN, {{"note", std::move(why)}}});
  lines_.push_back({true, checks_.size() - 1, {}});
  return checks_.back();
}

Check& Report::fail(std::string name, std::string why) {
  checks_.push_back({std::move(name), Check::Status::Fail, NAN, {{"error", std::move(why)}}});
  lines_.push_back({true, checks_.size() - 1, {}});
  return checks_.back();
}

void Report::info(std::string name, std::string value) {
  lines_.push_back({false, 0, "info=" + std::move(name) + " value=" + std::move(value)});
}

void Report::info(std::string name, double value) { info(std::move(name), fmt(value)); }

bool Report::all_passed() const {
  for (const auto& c : checks_)
    if (c.status == Check::Status::Fail) return false;
  return true;
}

namespace {

const char* status_name(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Skip: return "skip";
  }
  return "?";
}

// Values with spaces are quoted so the line stays splittable on blanks.
std::string value_text(const std::string& v) {
  if (v.find_first_of(" \t\"") == std::string::npos && !v.empty()) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? '\'' : c;
  return q + "\"";
}

}  // namespace

void Report::write(std::ostream& out) const {
  for (const auto& line : lines_) {
    if (!line.is_check) {
      out << line.text << '\n';
      continue;
    }
    const Check& c = checks_[line.index];
    out << "check=" << c.name << " status=" << status_name(c.status) << " residual=" << fmt(c.residual);
    for (const auto& [k, v] : c.extra) out << ' ' << k << '=' << value_text(v);
    out << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr) {
  const auto& meta = tr.meta();
  out << "t,M1,M2,M3,G1,G2,G3,F1,F2,H1,H2,a_value,div_analytic\n";
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const E3State& s = tr.states()[i];
    const InvariantSample& inv = tr.invariant_log()[i];
    const double a = coupling_a(s, meta.params, meta.case_selector);
    const double div = divergence(s, meta.params, meta.case_selector).analytic;
    const double row[] = {tr.times()[i], s.M(0), s.M(1), s.M(2), s.Gamma(0), s.Gamma(1), s.Gamma(2),
                          inv.F1, inv.F2, inv.H1, inv.H2, a, div};
    for (std::size_t k = 0; k < std::size(row); ++k) out << (k ? "," : "") << fmt(row[k]);
    out << '\n';
  }
}

}  // namespace e3lab::cli
