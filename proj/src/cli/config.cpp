#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "e3lab/cli.hpp"
#include "e3lab/polynomial.hpp"

namespace e3lab::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double number(std::string_view text, int line) {
  const std::string s(trim(text));
  if (s.empty()) throw ConfigError(line, "expected a number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) throw ConfigError(line, "not a number: '" + s + "'");
  if (!std::isfinite(v)) throw ConfigError(line, "value must be finite: '" + s + "'");
  return v;
}

Vec3 triple(std::string_view text, int line) {
  Vec3 v;
  int i = 0;
  while (true) {
    const auto comma = text.find(',');
    if (i == 3) throw ConfigError(line, "expected exactly three comma-separated values");
    v(i++) = number(text.substr(0, comma), line);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (i != 3) throw ConfigError(line, "expected exactly three comma-separated values");
  return v;
}

std::uint64_t unsigned_integer(std::string_view text, int line) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(line, "expected a nonnegative integer: '" + std::string(text) + "'");
  return v;
}

void assign(RunConfig& c, const std::string& section, const std::string& key, std::string_view value,
            int line) {
  auto unknown = [&] { throw ConfigError(line, "unknown key '" + key + "' in [" + section + "]"); };
  if (section == "system") {
    if (key == "I2") c.I2 = number(value, line);
    else if (key == "x0") c.x0 = number(value, line);
    else if (key == "z0") c.z0 = number(value, line);
    else unknown();
  } else if (section == "case") {
    if (key == "name") c.case_name = std::string(value);
    else if (key == "value") c.case_value = number(value, line);
    else if (key == "polynomial") c.polynomial = std::string(value);
    else unknown();
  } else if (section == "initial") {
    if (key == "M") c.initial.M = triple(value, line);
    else if (key == "Gamma") c.initial.Gamma = triple(value, line);
    else unknown();
  } else if (section == "integrator") {
    if (key == "method") {
      if (value == "rk45") c.integrator.method = Method::DP54;
      else if (value == "rk4") c.integrator.method = Method::RK4;
      else throw ConfigError(line, "method must be rk45 or rk4");
    } else if (key == "abs_tol") c.integrator.abs_tol = number(value, line);
    else if (key == "rel_tol") c.integrator.rel_tol = number(value, line);
    else if (key == "step") c.integrator.step = number(value, line);
    else if (key == "t_end") c.integrator.t_end = number(value, line);
    else if (key == "sample_dt") c.integrator.sample_dt = number(value, line);
    else unknown();
  } else if (section == "output") {
    if (key == "path") c.output_path = std::string(value);
    else if (key == "format") {
      if (value != "csv") throw ConfigError(line, "only format = csv is supported");
      c.output_format = std::string(value);
    } else if (key == "data") c.data_path = std::string(value);
    else unknown();
  } else if (section == "hess") {
    if (key == "inertia") c.inertia = triple(value, line);
    else if (key == "scale") c.hess_scale = number(value, line);
    else unknown();
  } else if (section == "run") {
    if (key == "seed") c.seed = unsigned_integer(value, line);
    else unknown();
  } else {
    throw ConfigError(line, "unknown section [" + section + "]");
  }
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::string section;
  int line_no = 0;
  std::map<std::string, int> last_line;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto hash = line.find_first_of("#;");
    line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ConfigError(line_no, "empty section name");
      static const std::set<std::string> known{"system", "case",   "initial", "integrator",
                                               "output", "hess", "run"};
      if (!known.contains(section)) throw ConfigError(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    if (section.empty()) throw ConfigError(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (value.empty()) throw ConfigError(line_no, "empty value for '" + key + "'");
    assign(c, section, key, value, line_no);
    last_line[section] = line_no;
  }

  // Semantic checks, reported against the last line that could fix them.
  try {
    c.make_case();
  } catch (const Error& e) {
    throw ConfigError(last_line["case"], e.what());
  }
  try {
    c.params();
  } catch (const Error& e) {
    throw ConfigError(last_line["system"], e.what());
  }
  try {
    c.integrator.validate();
  } catch (const Error& e) {
    throw ConfigError(last_line["integrator"], e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

CaseSelector RunConfig::make_case() const {
  if (case_name == "constant") return CaseSelector::constant(case_value);
  if (case_name == "custom") {
    if (polynomial.empty()) throw InvalidParameter("case custom needs 'polynomial'");
    return CaseSelector::custom(Polynomial::parse(polynomial).as_field());
  }
  if (auto c = CaseSelector::from_tag(case_name)) return *c;
  throw InvalidParameter("unknown case '" + case_name +
                         "' (casimir_f1, casimir_f2, h2, gamma_chi, m_squared, constant, custom)");
}

HAParams RunConfig::hess_params() const {
  return ha_admissible_params(InertiaTriple(inertia(0), inertia(1), inertia(2)), hess_scale);
}

}  // namespace e3lab::cli
