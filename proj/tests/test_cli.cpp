// End-to-end checks against the built binary. Each run goes through popen
// with stderr folded into stdout; exit codes come from pclose.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#ifndef CAPTOR_CLI_PATH
#error "CAPTOR_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CAPTOR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval on the unit ball prints the known functional value") {
  const auto r = run_cli("eval --ellipsoid 1,1,1 --q 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "g_q"));
  CHECK(contains(r.output, "0.2"));
  CHECK(contains(r.output, "capacity"));
}

TEST_CASE("planar eval prints the ellipse log-capacity") {
  const auto r = run_cli("eval --ellipse 2,1 --q 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "logcap"));
  CHECK(contains(r.output, "1.5"));
}

TEST_CASE("two-axis input is rejected with a pointer to the planar route") {
  const auto r = run_cli("eval --ellipsoid 1,1 --q 1");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "d >= 3"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("eval").exit_code == 2);
  CHECK(run_cli("nonsense-command").exit_code == 2);
  CHECK(run_cli("eval --body /nonexistent/path.json").exit_code == 2);
  CHECK(run_cli("optimize --q 1 --direction sideways").exit_code == 2);
}

TEST_CASE("bounds reports the critical exponent and the engaged constants") {
  const auto r = run_cli("bounds --d 3 --q 0.25 --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["artifact"]["name"] == "captor");
  bool saw_qc = false, saw_inf = false;
  for (const auto& row : j["results"]) {
    if (row["name"] == "q_critical") {
      saw_qc = true;
      CHECK(row["value"].get<double>() == doctest::Approx(0.25));
    }
    if (row["name"] == "inf_coefficient") {
      saw_inf = true;
      CHECK(row["value"]["log10"].get<double>() ==
            doctest::Approx(std::log10(0.004690343738590078))
                .epsilon(1e-10));
    }
  }
  CHECK(saw_qc);
  CHECK(saw_inf);
}

TEST_CASE("sequence emits an increasing exact column for the needle") {
  const auto r =
      run_cli("sequence --family prolate --d 3 --q 0.5 --eps 1e-1..1e-3");
  CHECK(r.exit_code == 0);
  std::vector<std::string> lines;
  std::string cur;
  for (char c : r.output) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0] == "parameter,exact,bound,bound_kind,asymptote,ratio");
  std::vector<double> exact_col;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    // second CSV field
    const auto p1 = lines[i].find(',');
    const auto p2 = lines[i].find(',', p1 + 1);
    exact_col.push_back(std::stod(lines[i].substr(p1 + 1, p2 - p1 - 1)));
  }
  REQUIRE(exact_col.size() == 3);
  CHECK(exact_col[1] > exact_col[0]);
  CHECK(exact_col[2] > exact_col[1]);
}

TEST_CASE("monte carlo runs are reproducible documents") {
  const std::string args =
      "mc --body ball --d 3 --walkers 4000 --seed 7 --json";
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  const auto j = nlohmann::json::parse(r1.output);
  double cap = 0.0;
  for (const auto& row : j["results"])
    if (row["name"] == "capacity") cap = row["value"]["value"].get<double>();
  CHECK(cap == doctest::Approx(12.566).epsilon(0.15));
}

TEST_CASE("json documents round-trip the exact values bit for bit") {
  const std::string args = "eval --ellipsoid 1.7,1.2,0.9 --q 1.5 --json";
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  const auto j = nlohmann::json::parse(r1.output);
  // parse-and-reprint preserves every double exactly
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("optimizer command reports a degenerate window") {
  const auto r = run_cli("optimize --q 0.5 --d 3 --direction max --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  bool saw = false;
  for (const auto& row : j["results"])
    if (row["name"] == "degenerated") {
      saw = true;
      CHECK(row["value"] == "true");
    }
  CHECK(saw);
}

TEST_CASE("config file values are picked up and overridden by flags") {
  const std::string path = "/tmp/captor_cli_test_config.ini";
  FILE* f = fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs("[eval]\nq=2\nellipsoid=1,1,1\n", f);
  fclose(f);
  const auto r = run_cli("--config " + path + " eval --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["config"]["q"].get<double>() == doctest::Approx(2.0));
  // flag wins over the file
  const auto r2 = run_cli("--config " + path + " eval --q 1 --json");
  const auto j2 = nlohmann::json::parse(r2.output);
  CHECK(j2["config"]["q"].get<double>() == doctest::Approx(1.0));
  remove(path.c_str());
}
