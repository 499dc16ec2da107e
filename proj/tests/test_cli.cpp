#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "scrolls/parse.hpp"
#include "scrolls/generators.hpp"

using namespace scrolls;

namespace {

std::string cli_path() {
  const char* env = std::getenv("SCROLLS_CLI");
  REQUIRE_MESSAGE(env != nullptr, "SCROLLS_CLI must point at the scrolls binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_output.tmp";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("exit code contract") {
  // 0: checks pass / output produced
  CHECK(run_cli("gens --blocks 2,2 --set full").exit_code == 0);
  CHECK(run_cli("verify theorem --blocks 2,2 --field Q").exit_code == 0);
  CHECK(run_cli("verify identities --c 3 --d 3 --field Fp:5").exit_code == 0);
  // 1: a mathematical check failed
  CHECK(run_cli("verify corollary4 --p 2 --h 1 --field Q").exit_code == 1);
  // 2: usage or parse errors
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("gens --blocks 0,2 --set full").exit_code == 2);
  CHECK(run_cli("gens --blocks 2,2 --set wat").exit_code == 2);
  CHECK(run_cli("verify theorem --blocks 2,2 --field Fp:9").exit_code == 2);
  // 3: budget exceeded
  CHECK(run_cli("verify theorem --blocks 3,3 --field Q --max-pairs 1").exit_code == 3);
  CHECK(run_cli("points --blocks 3,3 --set full --field Fp:5 --max-points 10").exit_code == 3);
}

TEST_CASE("example 1 binomials in canonical text") {
  RunResult r = run_cli("gens --blocks 2,2 --set charp --field Fp:2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x0*x2 + x1^2\ny0*y2 + y1^2\nx0*y2 + x2*y0\n");
  RunResult rq = run_cli("gens --blocks 2,2 --set charp --field Q");
  CHECK(rq.out == "x0*x2 - x1^2\ny0*y2 - y1^2\nx0*y2 - x2*y0\n");
}

TEST_CASE("json output is byte-identical across runs and round-trips") {
  const std::string args = "gens --blocks 4,3 --set stci --field Q --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["name"] == "stci");
  CHECK(j["ring"]["field"] == "Q");
  REQUIRE(j["generators"].size() == 7);
  // every emitted string re-parses to an equal polynomial
  GeneratorSet expected = gens_stci(4, 3, FieldSpec::rationals());
  for (std::size_t k = 0; k < 7; ++k) {
    const std::string text = j["generators"][k].get<std::string>();
    CHECK(parse_poly(text, expected.ring) == expected.polys[k]);
  }

  RunResult gb = run_cli("gb --blocks 2,2 --set full --format json");
  RunResult gb2 = run_cli("gb --blocks 2,2 --set full --format json");
  CHECK(gb.exit_code == 0);
  CHECK(gb.out == gb2.out);
  const auto jgb = nlohmann::json::parse(gb.out);
  CHECK(jgb["order"] == "degrevlex");
  CHECK(jgb["elements"].size() == 6);
}

TEST_CASE("verify json carries witnesses") {
  RunResult r = run_cli("verify corollary4 --p 2 --h 1 --field Q --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  bool witness_point = false;
  for (const auto& rec : j["checks"]) {
    if (rec["verdict"] == "fail" && rec.contains("witness") &&
        rec["witness"].contains("point")) {
      const auto& pt = rec["witness"]["point"];
      if (pt == nlohmann::json::array({1, 1, 1, 1, -1, 1})) witness_point = true;
    }
  }
  CHECK(witness_point);
  CHECK(j["summary"]["fail"].get<int>() > 0);
}

TEST_CASE("points subcommand, serial and parallel") {
  RunResult par = run_cli("points --blocks 2,2 --set charp --field Fp:2 --format json");
  RunResult ser =
      run_cli("points --blocks 2,2 --set charp --field Fp:2 --format json --serial");
  CHECK(par.exit_code == 0);
  CHECK(par.out == ser.out);
  const auto j = nlohmann::json::parse(par.out);
  CHECK(j["count"].get<int>() == 10);
}

TEST_CASE("wall budget env var") {
  const std::string cmd = "SCROLLS_BUDGET_MS=0 " + cli_path() +
                          " verify theorem --blocks 3,2 --field Q > cli_budget.tmp 2>&1";
  const int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 3);
}

TEST_CASE("smoke suite is green") {
  RunResult r = run_cli("suite --level smoke");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(" 0 fail, 0 budget") != std::string::npos);
}
