#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Runs the binary with the given arguments, capturing combined output.
RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string capture =
      "/tmp/liecheck_cli_" + std::to_string(counter++) + ".out";
  const std::string cmd =
      std::string(LIECHECK_BIN) + " " + args + " > " + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.output = slurp(capture);
  std::remove(capture.c_str());
  return r;
}

}  // namespace

TEST_CASE("list-cases prints the full sorted registry") {
  const RunResult r = run("list-cases");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  std::istringstream in(r.output);
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines >= 14);
  CHECK(r.output.find("d1-diagonal") != std::string::npos);
  CHECK(r.output.find("coset-dims-d5") != std::string::npos);
  CHECK(r.output.find("d21-ext") != std::string::npos);
  // Sorted: bosonic-o42 is first, su22-n2 last.
  CHECK(r.output.rfind("bosonic-o42", 0) == 0);
  CHECK(r.output.find("su22-n2") != std::string::npos);
}

TEST_CASE("verify of a passing case exits 0 and prints its checks") {
  const RunResult r = run("verify gca-d3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("case gca-d3: pass") != std::string::npos);
  CHECK(r.output.find("[ok] jacobi") != std::string::npos);
  CHECK(r.output.find("15 bosonic, 0 fermionic") != std::string::npos);
}

TEST_CASE("verify exit codes distinguish deviation, allow-flag and errors") {
  CHECK(run("verify physical-n1").exit_code == 1);
  CHECK(run("verify physical-n1 --allow-deviations").exit_code == 0);
  CHECK(run("verify composed-n1").exit_code == 0);

  const RunResult unknown = run("verify no-such-case");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("error:") != std::string::npos);

  // Unwritable output path is an IO failure.
  CHECK(run("verify gca-d1 --out /no-such-dir/sub/x.json").exit_code == 2);

  // Bad flag values are rejected by the parser.
  CHECK(run("verify gca-d1 --format yaml").exit_code != 0);
  CHECK(run("verify gca-d1 --jobs 0").exit_code != 0);
}

TEST_CASE("several cases can be selected with repeatable --case flags") {
  const RunResult r = run("verify --case gca-d1 --case ospN2-1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("case gca-d1: pass") != std::string::npos);
  CHECK(r.output.find("case ospN2-1: pass") != std::string::npos);
  CHECK(r.output.find("2 cases: 2 pass") != std::string::npos);
}

TEST_CASE("full-registry JSON runs are byte-identical across invocations") {
  const RunResult a =
      run("verify --format json --out /tmp/liecheck_a.json --allow-deviations");
  const RunResult b =
      run("verify --format json --out /tmp/liecheck_b.json --allow-deviations");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string ja = slurp("/tmp/liecheck_a.json");
  const std::string jb = slurp("/tmp/liecheck_b.json");
  CHECK(ja == jb);
  CHECK(ja.find("\"case\": \"bosonic-o42\"") != std::string::npos);
  CHECK(ja.find("\"paper_value\"") != std::string::npos);
  std::remove("/tmp/liecheck_a.json");
  std::remove("/tmp/liecheck_b.json");
}

TEST_CASE("parallel jacobi evaluation leaves the JSON report unchanged") {
  const RunResult a = run(
      "verify su22-n2 --format json --out /tmp/liecheck_j1.json");
  const RunResult b = run(
      "verify su22-n2 --format json --out /tmp/liecheck_j4.json --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(slurp("/tmp/liecheck_j1.json") == slurp("/tmp/liecheck_j4.json"));
  std::remove("/tmp/liecheck_j1.json");
  std::remove("/tmp/liecheck_j4.json");
}

TEST_CASE("dump output matches the frozen golden files byte for byte") {
  for (const std::string id : {"ospN2-1", "gca-d1", "d1-diagonal"}) {
    const RunResult r = run("dump " + id);
    CHECK(r.exit_code == 0);
    const std::string golden =
        slurp(std::string(LIECHECK_SOURCE_DIR) + "/tests/golden/" + id + ".txt");
    CHECK(r.output == golden);
  }
}

TEST_CASE("dump of a table-less case explains itself and exits 2") {
  const RunResult r = run("dump coset-dims-d2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("no table") != std::string::npos);

  CHECK(run("dump no-such-case").exit_code == 2);
}
