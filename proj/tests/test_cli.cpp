#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "e3lab/cli.hpp"

using namespace e3lab;
using namespace e3lab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "e3lab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "e3lab_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

bool has_line(const std::string& text, const std::string& needle) {
  for (const auto& l : lines(text))
    if (l.find(needle) != std::string::npos) return true;
  return false;
}

const char* kEquilibrium = R"(
[system]
I2 = 1
x0 = 1
z0 = 0
[initial]
M = 0, 0, 0
Gamma = 1, 0, 0
[integrator]
t_end = 2
sample_dt = 0.5
)";

const char* kOnSurface = R"(
[hess]
inertia = 3, 2, 1
scale = -1
[initial]
M = 1.7320508075688772, 0.4, 1
Gamma = 0.3, -0.6, 0.8
[integrator]
t_end = 10
)";

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(R"(
# comment
[system]
I2 = 2.5   ; trailing comment
x0 = 0.6
z0 = -0.8
[case]
name = constant
value = 1.5
[initial]
M = 1, 2, 3
Gamma = -1,0.5 , 2
[integrator]
method = rk4
step = 0.01
t_end = 3
[run]
seed = 42
)");
  CHECK(c.I2 == 2.5);
  CHECK(c.z0 == -0.8);
  CHECK(c.case_name == "constant");
  CHECK(c.initial.Gamma(1) == 0.5);
  CHECK(c.integrator.method == Method::RK4);
  CHECK(c.integrator.step == 0.01);
  CHECK(c.seed.value() == 42);
  CHECK(parse_config("").I2 == 1.0);

  const auto line_of = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("[system]\nI2 = 1\nx0 = abc\n") == 3);
  CHECK(line_of("[system]\n\nbogus = 1\n") == 3);
  CHECK(line_of("[nowhere]\n") == 1);
  CHECK(line_of("x0 = 1\n") == 1);
  CHECK(line_of("[initial]\nM = 1, 2\n") == 2);
  CHECK(line_of("[system]\nx0 = inf\n") == 2);
  CHECK(line_of("[system\n") == 1);
  CHECK(line_of("[system]\nI2 = -1\n") == 2);
  CHECK(line_of("[run]\nseed = -3\n") == 2);
  CHECK(line_of("[integrator]\nmethod = euler\n") == 2);
  CHECK(line_of("[output]\nformat = json\n") == 2);
}

TEST_CASE("report formatting") {
  Report r;
  r.check("a", 1e-3, 1e-2);
  r.check("b", std::nan(""), 1.0);
  r.skip("c", "two words");
  r.info("d", 0.1);
  CHECK_FALSE(r.all_passed());
  std::ostringstream out;
  r.write(out);
  const auto v = lines(out.str());
  REQUIRE(v.size() == 4);
  CHECK(v[0].rfind("check=a status=pass residual=0.001", 0) == 0);
  CHECK(v[1].rfind("check=b status=fail", 0) == 0);
  CHECK(v[2].find("status=skip") != std::string::npos);
  CHECK(v[2].find("\"two words\"") != std::string::npos);
  CHECK(v[3] == "info=d value=0.10000000000000001");
  Report s;
  s.skip("x", "n/a");
  CHECK(s.all_passed());
}

TEST_CASE("malformed config exits 2 with the line") {
  const auto path = write_file("bad.ini", "[system]\nI2 = 1\nx0 = one\n");
  const Run r = run({"simulate", "--config", path});
  CHECK(r.code == kUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"simulate", "--bogus"}).code == kUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"simulate", "--config", (scratch_dir() / "missing.ini").string()}).code == kUsage);
}

TEST_CASE("simulate writes the CSV schema") {
  const Run r = run({"simulate", "--config", write_file("eq.ini", kEquilibrium)});
  REQUIRE(r.code == kOk);
  const auto v = lines(r.out);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == "t,M1,M2,M3,G1,G2,G3,F1,F2,H1,H2,a_value,div_analytic");
  for (std::size_t i = 2; i < v.size(); ++i) {
    CHECK(v[i].substr(v[i].find(',')) == v[1].substr(v[1].find(',')));
  }
  CHECK(v[1] == "0,0,0,0,1,0,0,0,1,1,0,0,0");

  // Drift columns stay within the conservation bound on a generic orbit.
  const Run g = run({"simulate"});
  REQUIRE(g.code == kOk);
  const auto rows = lines(g.out);
  std::vector<double> first;
  double drift = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<double> vals;
    std::istringstream in(rows[i]);
    for (std::string cell; std::getline(in, cell, ',');) vals.push_back(std::stod(cell));
    REQUIRE(vals.size() == 13);
    if (first.empty()) first = vals;
    for (int j = 7; j <= 10; ++j)
      drift = std::max(drift, std::abs(vals[j] - first[j]) / std::max(1.0, std::abs(first[j])));
  }
  CHECK(rows.size() > 10);
  CHECK(drift < 1e-7);
}

TEST_CASE("simulate flags a partial trajectory") {
  const auto path = write_file("blowup.ini", R"(
[case]
name = custom
polynomial = 50*M1^3*G2^2
[initial]
M = 3, 3, 3
Gamma = 3, 3, 3
[integrator]
method = rk4
step = 0.1
t_end = 50
)");
  const Run r = run({"simulate", "--config", path});
  CHECK(r.code == kPartial);
  CHECK_FALSE(r.err.empty());
  CHECK(lines(r.out).front() == "t,M1,M2,M3,G1,G2,G3,F1,F2,H1,H2,a_value,div_analytic");
}

TEST_CASE("verify suites") {
  const Run all = run({"verify", "--suite", "all"});
  CHECK(all.code == kOk);
  CHECK_FALSE(has_line(all.out, "status=fail"));
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    CHECK(has_line(all.out, "check=" + s));
  }

  const auto m2 = write_file("m2.ini", "[case]\nname = custom\npolynomial = M2\n");
  const Run meas = run({"verify", "--config", m2, "--suite", "measure"});
  CHECK(meas.code == kCheckFailed);
  CHECK(has_line(meas.out, "status=fail"));

  const auto g = write_file("gchi.ini", "[case]\nname = gamma_chi\n");
  const Run ham = run({"verify", "--config", g, "--suite", "hamiltonian"});
  CHECK(ham.code == kOk);
  CHECK(has_line(ham.out, "status=skip"));
  CHECK(ham.out.find("not Hamiltonian (by classification)") != std::string::npos);
}

TEST_CASE("reduce reports") {
  const auto data = (scratch_dir() / "reduce.csv").string();
  const auto path = write_file("reduce.ini", "[output]\ndata = " + data + "\n");
  const Run r = run({"reduce", "--config", path});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "check=reduction.residual status=pass"));
  CHECK(has_line(r.out, "check=isomorphism.j_gap status=pass"));
  CHECK(has_line(r.out, "check=closed_form.gap status=pass"));
  CHECK(lines(read_file(data)).size() > 10);

  const Run d = run({"reduce", "--config", write_file("eq2.ini", kEquilibrium)});
  CHECK(d.code == kOk);
  CHECK(has_line(d.out, "info=curve value=degenerate"));
  CHECK(has_line(d.out, "check=isomorphism.j_gap status=skip"));
}

TEST_CASE("separate and curves") {
  const Run s = run({"separate"});
  CHECK(s.code == kOk);
  CHECK(has_line(s.out, "check=separation.canonicality"));
  const Run c = run({"curves"});
  CHECK(c.code == kOk);
  CHECK(has_line(c.out, "j_spectral"));
  const auto sing = write_file("sing.ini", "[initial]\nM = 0, 0, 0\nGamma = 0, 0, 0\n");
  CHECK(run({"separate", "--config", sing}).code != kOk);
}

TEST_CASE("hess on and off the surface") {
  const Run on = run({"hess", "--config", write_file("ha.ini", kOnSurface)});
  CHECK(on.code == kOk);
  CHECK_FALSE(has_line(on.out, "status=fail"));
  CHECK(has_line(on.out, "info=hess.equivalence.literal"));
  CHECK(has_line(on.out, "info=hess.equivalence.index3"));
  CHECK(has_line(on.out, "matching="));

  const auto off = write_file("ha_off.ini", "[initial]\nM = 1, 0.5, 1\nGamma = 0.2, 1, 0.3\n");
  const Run r = run({"hess", "--config", off});
  CHECK(r.code != kOk);
  CHECK(r.err.find("off the invariant") != std::string::npos);
}

TEST_CASE("identical config and seed give identical bytes") {
  const auto cfg = write_file("det.ini", "[integrator]\nt_end = 5\n");
  for (const char* cmd : {"simulate", "verify", "reduce", "separate", "curves"}) {
    const auto a = (scratch_dir() / (std::string(cmd) + "_a.txt")).string();
    const auto b = (scratch_dir() / (std::string(cmd) + "_b.txt")).string();
    REQUIRE(run({cmd, "--config", cfg, "--seed", "9", "--out", a}).code == kOk);
    REQUIRE(run({cmd, "--config", cfg, "--seed", "9", "--out", b}).code == kOk);
    const auto ta = read_file(a);
    CHECK_FALSE(ta.empty());
    CHECK(ta == read_file(b));
  }
}

TEST_CASE("seed precedence") {
  const auto base = run({"verify", "--suite", "measure", "--seed", "5"}).out;
  ::setenv("E3LAB_SEED", "5", 1);
  CHECK(run({"verify", "--suite", "measure"}).out == base);
  CHECK(run({"verify", "--suite", "measure", "--seed", "6"}).out != base);
  ::setenv("E3LAB_SEED", "x", 1);
  CHECK(run({"verify", "--suite", "measure"}).code == kUsage);
  ::unsetenv("E3LAB_SEED");
  CHECK(run({"verify", "--suite", "measure"}).out != base);
  const auto cfg = write_file("seed.ini", "[run]\nseed = 5\n");
  CHECK(run({"verify", "--suite", "measure", "--config", cfg}).out == base);
}
