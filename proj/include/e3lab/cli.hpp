#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e3lab/dynamics.hpp"
#include "e3lab/hess.hpp"

namespace e3lab::cli {

/// Exit codes shared by all subcommands.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,  ///< a verification check failed, or a hard runtime error
  kUsage = 2,        ///< bad flags or malformed config
  kPartial = 3,      ///< integration stopped early; partial output written
};

struct ConfigError : Error {
  ConfigError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// Parsed run configuration; every field has a default so an empty file
/// is valid.
struct RunConfig {
  double I2 = 1.0;
  double x0 = 1.0;
  double z0 = 0.0;

  std::string case_name = "casimir_f1";
  double case_value = 0.0;     ///< for case = constant
  std::string polynomial;      ///< for case = custom

  E3State initial{Vec3(0.3, -1.1, 0.7), Vec3(1.2, 0.4, -0.5)};
  SolverSettings integrator{};

  std::string output_path;     ///< empty: stdout
  std::string output_format = "csv";
  std::string data_path;       ///< reduce: columnar data file

  Vec3 inertia{3.0, 2.0, 1.0};
  double hess_scale = -1.0;

  std::optional<std::uint64_t> seed;

  SystemParams params() const { return {I2, x0, z0}; }
  CaseSelector make_case() const;
  HAParams hess_params() const;
};

/// Throws ConfigError naming the offending line.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// One line of a verification report:
///   check=<name> status=<pass|fail|skip> residual=<value> [key=value ...]
struct Check {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status;
  double residual;
  std::vector<std::pair<std::string, std::string>> extra;
};

class Report {
 public:
  /// status = pass iff residual < tol (NaN fails).
  Check& check(std::string name, double residual, double tol);
  Check& skip(std::string name, std::string why);
  Check& fail(std::string name, std::string why);
  void info(std::string name, std::string value);
  void info(std::string name, double value);

  bool all_passed() const;  ///< skips do not count as failures
  void write(std::ostream& out) const;
  const std::vector<Check>& checks() const { return checks_; }

 private:
  struct Line {
    bool is_check;
    std::size_t index;
    std::string text;
  };
  std::vector<Check> checks_;
  std::vector<Line> lines_;
};

/// %.17g
std::string fmt(double v);

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

std::vector<std::string> suite_names();

int cmd_simulate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::uint64_t seed,
               std::ostream& out, std::ostream& err);
int cmd_reduce(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_separate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_curves(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_hess(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace e3lab::cli
