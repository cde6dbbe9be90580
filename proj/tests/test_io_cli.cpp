#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entdetect/errors.hpp"
#include "entdetect/io.hpp"
#include "entdetect/linalg.hpp"
#include "entdetect/rng.hpp"
#include "entdetect/states.hpp"
#include "entdetect/version.hpp"
#include "test_util.hpp"

using namespace entdetect;
using nlohmann::json;
using testutil::max_abs;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ENTDETECT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return "/tmp/entdetect_test_" + std::to_string(::getpid()) + "_" + name;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("state json round-trips exactly") {
  const auto state = states::random_hs(2, 3, 71, 0);
  const json j = io::state_to_json(state);
  CHECK(j.at("dA") == 2);
  CHECK(j.at("dB") == 3);
  const auto back = io::state_from_json(j);
  CHECK(back.dim_a == 2);
  CHECK(back.dim_b == 3);
  CHECK((back.rho - state.rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state json schema violations are rejected") {
  const json good = io::state_to_json(states::werner(2, -0.5));

  json missing = good;
  missing.erase("dA");
  CHECK_THROWS_AS(io::state_from_json(missing), InvalidStateError);

  json bad_type = good;
  bad_type["dB"] = "three";
  CHECK_THROWS_AS(io::state_from_json(bad_type), InvalidStateError);

  json bad_rows = good;
  bad_rows["rho"].erase(3);
  CHECK_THROWS_AS(io::state_from_json(bad_rows), InvalidStateError);

  json bad_entry = good;
  bad_entry["rho"][0][0] = json::array({1.0});
  CHECK_THROWS_AS(io::state_from_json(bad_entry), InvalidStateError);

  json not_a_state = good;
  not_a_state["rho"][0][0] = json::array({2.0, 0.0});
  CHECK_THROWS_AS(io::state_from_json(not_a_state), InvalidStateError);
}

TEST_CASE("state files round-trip on disk") {
  const std::string path = temp_path("state.json");
  const auto state = states::horodecki(0.7, 0.9);
  io::write_state_file(path, state);
  const auto back = io::read_state_file(path);
  CHECK((back.rho - state.rho).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(io::read_state_file("/tmp/entdetect_no_such_file.json"),
                  IoError);
  const std::string junk = temp_path("junk.json");
  std::ofstream(junk) << "{ not json";
  CHECK_THROWS_AS(io::read_state_file(junk), InvalidStateError);
  std::remove(junk.c_str());
}

TEST_CASE("report json carries all fields") {
  criteria::CriterionReport report;
  report.criterion = "test";
  report.statistic = 1.5;
  report.bound = 1.0;
  report.margin = 0.5;
  report.verdict = criteria::Verdict::Entangled;
  const json j = io::report_to_json(report);
  CHECK(j.at("criterion") == "test");
  CHECK(j.at("statistic") == 1.5);
  CHECK(j.at("bound") == 1.0);
  CHECK(j.at("margin") == 0.5);
  CHECK(j.at("verdict") == "Entangled");
}

TEST_CASE("cli version flag") {
  const auto result = run_cli("--version");
  CHECK(result.code == 0);
  CHECK(result.out.find(kVersion) != std::string::npos);
}

TEST_CASE("cli check detects the werner state and exits 3") {
  const std::string path = temp_path("werner.json");
  CHECK(run_cli("gen --family werner --d 3 --phi -1 --out " + path).code == 0);
  const auto result = run_cli("check --state " + path + " --criterion vicente");
  CHECK(result.code == 3);
  const json j = json::parse(result.out);
  CHECK(j.at("criterion") == "vicente");
  CHECK(j.at("verdict") == "Entangled");
  CHECK(std::abs(j.at("statistic").get<double>() - 8.0 / 3.0) < 1e-10);
  CHECK(std::abs(j.at("bound").get<double>() - 4.0 / 3.0) < 1e-12);
  std::remove(path.c_str());
}

TEST_CASE("cli check is quiet on separable input and exits 0") {
  const std::string path = temp_path("sep.json");
  CHECK(run_cli("gen --family random-separable --dA 3 --dB 3 --k 3 --seed 5 "
                "--out " + path).code == 0);
  for (const std::string crit :
       {"ccnr", "esic", "vicente", "obs2:t=1", "ppt", "sarbicki:hA=0.3,hB=0.3"}) {
    const auto result = run_cli("check --state " + path + " --criterion " + crit);
    CHECK(result.code == 0);
    const json j = json::parse(result.out);
    CHECK(j.at("verdict") == "Inconclusive");
  }
  std::remove(path.c_str());
}

TEST_CASE("cli check distinguishes ppt from ccnr on bound entanglement") {
  const std::string path = temp_path("horo.json");
  CHECK(run_cli("gen --family horodecki --s 0.5 --p 1 --out " + path).code == 0);
  CHECK(run_cli("check --state " + path + " --criterion ppt").code == 0);
  const auto ccnr = run_cli("check --state " + path + " --criterion ccnr");
  CHECK(ccnr.code == 3);
  const json j = json::parse(ccnr.out);
  CHECK(std::abs(j.at("bound").get<double>() - 2.25) < 1e-12);
  std::remove(path.c_str());
}

TEST_CASE("cli obs2 reports nested upper and lower parts") {
  const std::string path = temp_path("werner2.json");
  CHECK(run_cli("gen --family werner --d 3 --phi -0.5 --out " + path).code == 0);
  const auto result = run_cli("check --state " + path + " --criterion obs2:t=1");
  CHECK(result.code == 3);
  const json j = json::parse(result.out);
  CHECK(j.at("criterion") == "obs2:t=1");
  CHECK(std::abs(j.at("lower").at("margin").get<double>() - 1.125) < 1e-12);
  CHECK(std::abs(j.at("upper").at("margin").get<double>() - 0.375) < 1e-12);
  CHECK(j.at("verdict") == "Entangled");
  std::remove(path.c_str());
}

TEST_CASE("cli witness on the bell state") {
  const std::string path = temp_path("bell.json");
  CHECK(run_cli("gen --family max-entangled --d 2 --out " + path).code == 0);
  const auto result = run_cli("witness --state " + path + " --criterion vicente");
  CHECK(result.code == 3);
  const json j = json::parse(result.out);
  CHECK(std::abs(j.at("expectation").get<double>() + 2.0) < 1e-9);
  CHECK(std::abs(j.at("kappa").get<double>() - 1.0) < 1e-12);
  CHECK(j.at("rank") == 3);
  CHECK(j.at("W").size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("cli normal-form emits filters and the filtered tensor") {
  const std::string path = temp_path("wnf.json");
  CHECK(run_cli("gen --family werner --d 3 --phi -0.7 --out " + path).code == 0);
  const auto result = run_cli("normal-form --state " + path);
  CHECK(result.code == 0);
  const json j = json::parse(result.out);
  CHECK(j.at("iterations") == 1);
  CHECK(j.at("residual").get<double>() < 1e-10);
  CHECK(j.at("T_tilde").size() == 8);
  CHECK(j.at("F_A").size() == 3);
  CHECK(j.at("F_B").size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("cli simplex prints csv columns per vertex") {
  const auto result = run_cli("simplex --n 3");
  CHECK(result.code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].rfind("# cmd=simplex n=3 version=", 0) == 0);
  for (int i = 1; i <= 3; ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 3);
  }
  // First vertex is e_1: leading column reads 1, 0, 0.
  CHECK(lines[1].substr(0, 2) == "1,");
  CHECK(lines[2].substr(0, 2) == "0,");
  CHECK(lines[3].substr(0, 2) == "0,");
}

TEST_CASE("cli gen defaults to stdout and validates physics") {
  const auto result = run_cli("gen --family upb --p 0.8");
  CHECK(result.code == 0);
  const auto state = io::state_from_json(json::parse(result.out));
  CHECK(state.dim_a == 3);
  CHECK(state.dim_b == 3);
  CHECK(run_cli("gen --family chessboard --m 0").code == 2);
  CHECK(run_cli("gen --family no-such-family").code == 2);
}

TEST_CASE("cli rejects malformed invocations with exit 2") {
  CHECK(run_cli("check --state /tmp/entdetect_no_such_file.json").code == 2);
  CHECK(run_cli("check").code == 2);

  const std::string path = temp_path("w.json");
  CHECK(run_cli("gen --family werner --d 2 --phi -1 --out " + path).code == 0);
  CHECK(run_cli("check --state " + path + " --criterion frobnicate").code == 2);
  CHECK(run_cli("check --state " + path + " --criterion simplex:tA").code == 2);
  CHECK(run_cli("witness --state " + path + " --criterion ppt").code == 2);
  std::remove(path.c_str());

  const std::string junk = temp_path("junk2.json");
  std::ofstream(junk) << "[1, 2";
  CHECK(run_cli("check --state " + junk).code == 2);
  std::remove(junk.c_str());
}

TEST_CASE("scan outputs are deterministic and carry headers") {
  const auto a =
      run_cli("scan-random --samples 16 --dims 2 --grid 0:5:3 --seed 7");
  const auto b =
      run_cli("scan-random --samples 16 --dims 2 --grid 0:5:3 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto lines = lines_of(a.out);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0].rfind("# cmd=scan-random seed=7 samples=16", 0) == 0);
  CHECK(lines[1] == "dim,samples,param,criterion,fraction");
  CHECK(lines.size() == 2 + 2 * 3);

  const auto c =
      run_cli("scan-random --samples 16 --dims 2 --grid 0:5:3 --seed 8");
  CHECK(c.out != a.out);
}

TEST_CASE("scan-werner csv shape") {
  const auto result = run_cli("scan-werner --d 2 --grid -1:1:5");
  CHECK(result.code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 2 + 3 * 5);
  CHECK(lines[1] == "phi,criterion,statistic,bound,margin,detected");
  CHECK(lines[2].rfind("-1,sarbicki", 0) == 0);
  // Last grid point phi = 1 must be undetected by every criterion.
  for (std::size_t i = lines.size() - 3; i < lines.size(); ++i) {
    CHECK(lines[i].back() == '0');
  }
}

TEST_CASE("scan-horodecki csv shape") {
  const auto result = run_cli("scan-horodecki --grid 0:1:3 --t 1.5");
  CHECK(result.code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 2 + 9);
  CHECK(lines[1] == "s,p,t,statistic,bound,detected");
  CHECK(lines[2].rfind("0,0,1.5,", 0) == 0);
}

TEST_CASE("scan-upb-chessboard csv shape") {
  const auto result = run_cli(
      "scan-upb-chessboard --grid 0:1:11 --t 0.866025403784439,1.73205080756888 "
      "--samples 40 --seed 3");
  CHECK(result.code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 2 + 2 + 2);
  CHECK(lines[1] == "family,t,p_star,fraction");
  CHECK(lines[2].rfind("upb,", 0) == 0);
  CHECK(lines[4].rfind("chessboard,", 0) == 0);
  // upb rows leave the fraction cell empty; chessboard rows the p_star cell.
  CHECK(lines[2].back() == ',');
  CHECK(lines[4].find(",,") != std::string::npos);
}

TEST_CASE("cli scan --out writes the same bytes as stdout") {
  const std::string path = temp_path("scan.csv");
  const auto direct = run_cli("scan-werner --d 2 --grid -1:0:3");
  CHECK(run_cli("scan-werner --d 2 --grid -1:0:3 --out " + path).code == 0);
  std::ifstream file(path);
  std::stringstream buf;
  buf << file.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());
}
