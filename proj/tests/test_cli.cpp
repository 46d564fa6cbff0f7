#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Drives the installed binary end to end: every test here spawns a fresh
// process and inspects exit code, stdout/stderr and produced files.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "dkposc_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout." + std::to_string(counter));
  const fs::path err = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" +
                          CLI_BINARY_PATH + "' " + args + " > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> ls;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) ls.push_back(line);
  return ls;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

fs::path write_config(const std::string& name, const std::string& json) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << json;
  return p;
}

const std::string kAc1Flags = "--n 0 --m 1 --k 1 --A 1";

}  // namespace

TEST_CASE("solve emits the closed-form root as JSON") {
  const auto r = run("solve " + kAc1Flags);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 0);
  CHECK(j["m"] == 1);
  REQUIRE(j["roots"].size() == 1);
  CHECK(std::fabs(j["roots"][0]["E"].get<double>() - 2.0) < 1e-12);
  CHECK(j["roots"][0]["branch"] == "positive");
  CHECK(j["exponent"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("branch=all returns the symmetric pair") {
  const auto r = run("solve " + kAc1Flags + " --branch all");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["roots"].size() == 2);
  CHECK(std::fabs(j["roots"][0]["E"].get<double>() + 2.0) < 1e-12);
  CHECK(std::fabs(j["roots"][1]["E"].get<double>() - 2.0) < 1e-12);
}

TEST_CASE("invalid deficit parameter exits 3 and names the field") {
  const auto r = run("solve " + kAc1Flags + " --alpha 0");
  CHECK(r.code == 3);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("config file drives the solve and flags override it") {
  const auto cfg = write_config(
      "base.json", R"({"A": 2.0, "k": 1.0, "m": 1, "n": 0})");
  const auto r = run("solve --config '" + cfg.string() + "' --A 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["roots"].size() == 1);
  CHECK(std::fabs(j["roots"][0]["E"].get<double>() - 2.0) < 1e-12);
}

TEST_CASE("unknown config keys are rejected with exit 3") {
  const auto cfg = write_config("bad.json", R"({"Mq": 1.0})");
  const auto r = run("solve --config '" + cfg.string() + "'");
  CHECK(r.code == 3);
  CHECK(r.err.find("Mq") != std::string::npos);
}

TEST_CASE("non-integer quantum numbers in config are rejected") {
  const auto cfg = write_config("badn.json", R"({"n": 1.5})");
  const auto r = run("solve --config '" + cfg.string() + "'");
  CHECK(r.code == 3);
  CHECK(r.err.find("n") != std::string::npos);
}

TEST_CASE("unknown sweep parameter is a parse error, exit 3") {
  const auto r = run("sweep --param bogus --from 0 --to 1");
  CHECK(r.code == 3);
}

TEST_CASE("deficit sweep reproduces the decreasing trend") {
  const auto r = run(
      "sweep --param alpha --from 0.2 --to 1 --steps 50 "
      "--n 1 --m 1 --k 1 --Omega 1 --A 1 --B 1");
  REQUIRE(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 51);
  CHECK(ls[0] == "sweep_param,value,n,m,E,residual,reason");
  double prev = 1e300;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split_csv(ls[i]);
    REQUIRE(cells.size() == 7);
    CHECK(cells[0] == "alpha");
    CHECK(cells[6].empty());
    const double E = std::stod(cells[4]);
    CHECK(E < prev);
    prev = E;
  }
}

TEST_CASE("two-step sweep emits exactly the endpoints") {
  const auto r = run("sweep --param omega --from 0.5 --to 2 --steps 2 " +
                     kAc1Flags);
  REQUIRE(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(split_csv(ls[1])[1] == "0.5");
  CHECK(split_csv(ls[2])[1] == "2");
}

TEST_CASE("sweep range violating the parameter's domain exits 3") {
  const auto r = run("sweep --param alpha --from 0 --to 1 " + kAc1Flags);
  CHECK(r.code == 3);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("sweep output is byte-stable across runs") {
  const std::string cmd =
      "sweep --param Omega --from 0 --to 2 --steps 21 "
      "--n 1 --m 1 --k 1 --A 1 --B 1";
  const auto a = run(cmd);
  const auto b = run(cmd);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("integer flux sweep retraces the angular-number sweep") {
  const auto fx =
      run("sweep --param phi --from 0 --to 3 --steps 4 --m 2 --k 1 --A 1");
  const auto mx =
      run("sweep --param m --from -1 --to 2 --steps 4 --phi 0 --k 1 --A 1");
  REQUIRE(fx.code == 0);
  REQUIRE(mx.code == 0);
  const auto fl = lines_of(fx.out);
  const auto ml = lines_of(mx.out);
  REQUIRE(fl.size() == 5);
  REQUIRE(ml.size() == 5);
  // phi = j at m = 2 matches m = 2 - j at phi = 0; identical text because
  // the two paths are bit-identical.
  for (int j = 0; j <= 3; ++j) {
    const auto a = split_csv(fl[1 + j]);
    const auto b = split_csv(ml[1 + (3 - j)]);
    CHECK(a[4] == b[4]);
  }
}

TEST_CASE("multi-curve sweep prepends a curve column") {
  const auto r = run(
      "sweep --param alpha --from 0.4 --to 1 --steps 5 "
      "--multi omega=0.5,1,1.5 --n 1 --m 1 --k 1 --A 1");
  REQUIRE(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 16);
  CHECK(ls[0] == "curve,sweep_param,value,n,m,E,residual,reason");
  CHECK(split_csv(ls[1])[0] == "omega=0.5");
  CHECK(split_csv(ls[6])[0] == "omega=1");
  CHECK(split_csv(ls[11])[0] == "omega=1.5");
}

TEST_CASE("plot script lands next to the csv and references it") {
  const fs::path csv = work_dir() / "fig1.csv";
  const auto r = run("sweep --param alpha --from 0.5 --to 1 --steps 3 " +
                     kAc1Flags + " --out '" + csv.string() + "' --gnuplot");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(csv));
  const fs::path gp = csv.string() + ".gp";
  REQUIRE(fs::exists(gp));
  CHECK(slurp(gp).find(csv.filename().string()) != std::string::npos);
}

TEST_CASE("wavefunction table starts at the origin and keeps one sign") {
  const auto r = run("wavefunction " + kAc1Flags + " --steps 60");
  REQUIRE(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 61);
  CHECK(ls[0] == "r,phi1,J_t");
  const auto first = split_csv(ls[1]);
  CHECK(std::stod(first[0]) == 0.0);
  CHECK(std::stod(first[1]) == 0.0);
  int sign_changes = 0;
  double prev = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split_csv(ls[i]);
    const double phi1 = std::stod(cells[1]);
    const double jt = std::stod(cells[2]);
    if (i > 1) CHECK(jt >= 0.0);  // static background, positive energy
    if (prev != 0.0 && phi1 != 0.0 && (phi1 < 0) != (prev < 0))
      ++sign_changes;
    if (phi1 != 0.0) prev = phi1;
  }
  CHECK(sign_changes == 0);
}

TEST_CASE("oracle reports agreement as JSON") {
  const auto r = run("oracle " + kAc1Flags + " --grid-points 8001 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::fabs(j["E_closed"].get<double>() - 2.0) < 1e-12);
  CHECK(j["agrees"] == true);
  CHECK(j["relative_difference"].get<double>() < 1e-6);
}

TEST_CASE("a broken grid surfaces as internal failure, exit 4") {
  const auto r = run("oracle " + kAc1Flags + " --grid-points 100");
  CHECK(r.code == 4);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("quick verify passes and prints measured numbers") {
  const auto r = run("verify quick");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("worst=") != std::string::npos);
}

TEST_CASE("seeded verify is reproducible") {
  const auto a = run("verify quick --json", "DKP_SEED=42");
  const auto b = run("verify quick --json", "DKP_SEED=42");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["all_passed"] == true);
}
