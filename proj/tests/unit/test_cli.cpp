#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "amn/serialize.hpp"

using amn::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; `prefix` goes before the binary (env vars),
// `redirect` after the arguments.
Run run(const std::string& args, const std::string& prefix = "", const std::string& redirect = "2>/dev/null") {
  const std::string cmd = prefix + " '" + AMN_CLI_PATH + "' " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run run_stderr(const std::string& args) { return run(args, "", "2>&1 >/dev/null"); }

Json golden(const std::string& name) {
  std::ifstream in(std::string(AMN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / ("amn_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("poly") {
  const Run r = run("poly --m 1 --format json");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("integer_coefficients") == Json{"25", "-34", "9"});
  CHECK(j == golden("poly_m1.json"));

  const Json m5 = Json::parse(run("poly --m 5").out);
  CHECK(m5.at("integer_coefficients").back() == "6561");

  CHECK(run("poly --m 2 --format text").out == "81t^3 - 747t^2 + 1891t - 1225\n");
}

TEST_CASE("poly writes to a file") {
  const auto path = scratch_dir() / "poly.json";
  REQUIRE(run("poly --m 1 --format json -o '" + path.string() + "'").status == 0);
  std::ifstream in(path);
  CHECK(Json::parse(in) == golden("poly_m1.json"));
  std::filesystem::remove_all(path.parent_path());
}

TEST_CASE("roots") {
  const Run r = run("roots --m 3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("oracle") == Json{"1/1", "25/9", "49/9", "9/1"});
  CHECK(j.at("agree") == true);
  CHECK(run("roots --m 1 --format text").out == "1\n25/9\n");
}

TEST_CASE("verify") {
  const Run r = run("verify --m 6");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("oracle") == Json{"1/1", "25/9", "49/9", "9/1", "121/9", "169/9", "25/1"});
  CHECK(j.at("timings_ms").is_object());
  j.erase("timings_ms");
  CHECK(j == golden("verify_m6.json"));

  const Run chain = run("verify --m 26 --chain");
  REQUIRE(chain.status == 0);
  CHECK(Json::parse(chain.out).at("monotonicity_m_max") == 26);

  CHECK(run("verify --m 4 --no-oracle").status == 0);
  CHECK(Json::parse(run("verify --m 4 --no-oracle").out).at("oracle").is_null());
}

TEST_CASE("verify --tamper fails with a counterexample") {
  const Run r = run("verify --m 1 --tamper");
  CHECK(r.status == 1);
  const Json j = Json::parse(r.out);
  CHECK(j.at("ok") == false);
  CHECK(j.contains("counterexample"));
  CHECK(run_stderr("verify --m 1 --tamper").out.find("verification failed") != std::string::npos);
}

TEST_CASE("mode") {
  const Run r = run("mode --m 1");
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out) == golden("mode_m1.json"));

  const Json minus = Json::parse(run("mode --m 2 --j 1 --sign -").out);
  CHECK(minus.at("b0") == "-1/1");
  CHECK(minus.at("sign") == "-");
  CHECK(minus.at("residuals_zero") == true);

  const Json base = Json::parse(run("mode --m 0").out);
  CHECK(base.at("a") == Json{"1/1"});
  CHECK(base.at("b") == Json{"1/1"});

  const Run not_root = run("mode --m 1 --b0 2");
  CHECK(not_root.status == 1);
  CHECK(Json::parse(not_root.out).at("residuals_zero") == false);
}

TEST_CASE("field") {
  const Run r = run("field --m 1 --grid 3 --extent 1");
  REQUIRE(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == amn::kFieldCsvHeader);
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 27);

  CHECK(run("field --m 0 --grid 2").status == 0);
  CHECK(run("field --m 1 --format json").status == 2);
}

TEST_CASE("bench") {
  const Run r = run("bench --m-max 8");
  REQUIRE(r.status == 0);
  const Json rows = Json::parse(r.out).at("rows");
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].at("m") == rows[i - 1].at("m").get<int>() + 1);
    CHECK(rows[i].at("peak_bits").get<std::size_t>() > rows[i - 1].at("peak_bits").get<std::size_t>());
    CHECK(rows[i].at("wall_ms").get<double>() >= 0.0);
  }
}

TEST_CASE("usage errors exit 2") {
  const Run m0 = run_stderr("poly --m 0");
  CHECK(m0.status == 2);
  CHECK(m0.out.find("P_m defined for m ≥ 1") != std::string::npos);
  CHECK(run("poly --m 501").status == 2);
  CHECK(run("poly").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("poly --m 1 --format csv").status == 2);
  CHECK(run("mode --m 51").status == 2);
  CHECK(run("mode --m 2 --j 4").status == 2);
  CHECK(run("mode --m 2 --j 1 --sign x").status == 2);
  CHECK(run("mode --m 2 --j 1 --b0 1").status == 2);
  CHECK(run("mode --m 0 --j 1").status == 2);
  CHECK(run("mode --m 1 --b0 1/0").status == 2);
  CHECK(run("field --m 1 --grid 0").status == 2);
  CHECK(run("bench --m-max 0").status == 2);
}

TEST_CASE("I/O errors exit 3") {
  CHECK(run("poly --m 1 -o /nonexistent-dir/out.json").status == 3);
}

TEST_CASE("AMN_THREADS") {
  CHECK(run("verify --m 8 --chain", "AMN_THREADS=2").status == 0);
  CHECK(run("--threads 3 verify --m 8", "AMN_THREADS=1").status == 0);
  CHECK(run("verify --m 3", "AMN_THREADS=zero").status == 2);
  CHECK(run("verify --m 3", "AMN_THREADS=0").status == 2);
}
