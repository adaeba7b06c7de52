#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ARCBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  while (fgets(buf, sizeof(buf), pipe)) res.out += buf;
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
  return res;
}

nlohmann::json parse(const std::string& text) {
  return nlohmann::json::parse(text);
}

std::string dec_of(const nlohmann::json& real_field) {
  return real_field.at("dec").get<std::string>();
}

}  // namespace

TEST_CASE("solve prints the endpoint parameter") {
  const CliResult res = run_cli("solve --format json");
  REQUIRE(res.code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("report") == "solve");
  CHECK(j.at("precision_bits") == 128);
  CHECK(dec_of(j.at("b")).rfind("3.876452545133979", 0) == 0);
  CHECK(dec_of(j.at("target")).rfind("1.570796326794896", 0) == 0);
}

TEST_CASE("solve handles out of range targets") {
  CHECK(run_cli("solve --target 1.2").code == 1);
  CHECK(run_cli("solve --target 2.0").code == 2);
  CHECK(run_cli("solve --target abc").code == 2);
  CHECK(run_cli("solve --target sqrt2").code == 1);
}

TEST_CASE("certify verdict drives the exit code") {
  const CliResult pass = run_cli("certify --format json");
  REQUIRE(pass.code == 0);
  const auto jp = parse(pass.out);
  CHECK(jp.at("verdict") == true);
  CHECK(dec_of(jp.at("b")).rfind("3.876452545133979", 0) == 0);

  const CliResult fail = run_cli("certify --b 4.5 --format json");
  REQUIRE(fail.code == 1);
  CHECK(parse(fail.out).at("verdict") == false);

  CHECK(run_cli("certify --b -1").code == 2);
  CHECK(run_cli("certify --b 4 --precision-bits 256 --format json").code == 1);
}

TEST_CASE("chain verifies and streams csv") {
  const CliResult res = run_cli("chain --grid 200 --format json");
  REQUIRE(res.code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("verdict") == true);
  CHECK(j.at("violation_count") == 0);
  CHECK(j.at("grid_size") == 200);

  const CliResult csv = run_cli("chain --grid 2 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("x,algebraic_lower,sqrt_lower,arcsin,", 0) == 0);
  // The x=1 row carries the exact algebraic endpoint value 3/2 and the
  // snapped zero gaps between the pi/2 members.
  CHECK(csv.out.find("1.5000000000000000") != std::string::npos);
  CHECK(csv.out.find(",0.0000000000000000") != std::string::npos);

  CHECK(run_cli("chain --grid 1").code == 2);
  CHECK(run_cli("chain --grid 64 --grid-kind chebyshev").code == 0);
}

TEST_CASE("crossover output is byte deterministic") {
  const CliResult a = run_cli("crossover --format json");
  const CliResult b = run_cli("crossover --format json");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(dec_of(parse(a.out).at("c")).rfind("3.872662741605988", 0) == 0);
}

TEST_CASE("crossover reports disjoint bounds as an error") {
  const CliResult res = run_cli(
      "crossover --family matched --beta 4 --family2 matched --beta2 b1");
  CHECK(res.code == 1);
}

TEST_CASE("lambda reports the fifth order discrepancy") {
  const CliResult res = run_cli("lambda --order 5 --beta 4 --format json");
  REQUIRE(res.code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("order") == 5);
  CHECK(dec_of(j.at("analytic")).rfind("-4.16666666666", 0) == 0);

  CHECK(run_cli("lambda --order 6 --beta 4").code == 2);
  CHECK(run_cli("lambda --optimality --format json").code == 0);
}

TEST_CASE("bench runs a small measurement") {
  const CliResult res =
      run_cli("bench --iterations 50 --grid 33 --seed 9 --format json");
  REQUIRE(res.code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("iterations") == 50);
  CHECK(j.at("seed") == 9);
  CHECK(j.at("ns_per_eval_bound").get<double>() > 0.0);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("solve --format xml").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("chain --help").code == 0);
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  const CliResult res = run_cli("solve --format json --output " + path);
  REQUIRE(res.code == 0);
  CHECK(res.out.empty());

  std::ifstream file(path);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  CHECK(dec_of(parse(buffer.str()).at("b")).rfind("3.876452545133979", 0) == 0);
  file.close();
  std::remove(path.c_str());

  CHECK(run_cli("solve --output /nonexistent-dir/x.json").code == 2);
}
