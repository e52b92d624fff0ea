#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string path = "cli_test_output.txt";
  const std::string cmd = env + " " + HECKOID_CLI + " " + args + " > " + path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

}  // namespace

TEST_CASE("check-gamma exit codes") {
  auto r = run("check-gamma 3 3 1,1,1 --root-index 1");
  CHECK(r.status == 1);  // Fricke quadratic does not split
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["conditions"]["signature"] == true);
  CHECK(j["field"]["discriminant"] == -3);
  CHECK(run("check-gamma 3 6 2,1").status == 1);
  CHECK(run("check-gamma 3 5 -1,1").status == 1);
  CHECK(run("check-gamma inf inf 2,0,1 --root-index 1").status == 0);
  CHECK(run("check-gamma inf inf 2,0,1 --root-index 1 --gamma-field").status == 1);
  CHECK(run("check-gamma 3 3 -1,0,1").status == 2);
  CHECK(run("check-gamma 3 3 1,x").status == 2);
  CHECK(run("check-gamma 1 3 1,1,1").status == 2);
  CHECK(run("check-gamma 3 3 1,1,1 --root-index 5").status == 2);
}

TEST_CASE("farey subcommand") {
  auto r = run("farey 3 6 2,1 --max-denominator 10");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["hits"].size() >= 1);
  CHECK(j["hits"][0]["slope"] == "1/2");
  CHECK(j["hits"][0]["n"] == 2);
  j = nlohmann::json::parse(run("farey 3 3 3,1 --max-denominator 10").out);
  CHECK(j["hits"][0]["slope"] == "1/2");
  CHECK(j["hits"][0]["n"] == 3);
  j = nlohmann::json::parse(run("farey 3 3 -5,1 --max-denominator 20").out);
  CHECK(j["hits"].empty());
  CHECK(run("farey 3 3 2,0,1 --rho").status == 2);
}

TEST_CASE("slope-half subcommand") {
  auto r = run("slope-half --n-max 3");
  REQUIRE(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 18);
  CHECK(r.out.rfind("index,symbol,field_discriminant,min_poly_string,min_poly_coeffs_json\n", 0) == 0);
  CHECK(run("slope-half --n-max 3", "HECKOID_PRECISION=256").out == r.out);
  CHECK(run("slope-half --n-max 3 --serial").out == r.out);
  CHECK(run("slope-half --n-max 3 --verify-golden").status == 1);
  CHECK(run("slope-half --p-max 2").status == 2);
  CHECK(run("slope-half --n-max 2", "HECKOID_PRECISION=abc").status == 2);
  CHECK(run("slope-half --format xml").status == 2);
  auto js = nlohmann::json::parse(run("slope-half --n-max 2 --format json").out);
  CHECK(js.size() == 10);
  CHECK(js[1]["min_poly_coeffs"] == nlohmann::json::array({15, 0, 1}));
}

TEST_CASE("scan subcommands") {
  auto r = run("scan 3 3 --region -2,1,0,2 --max-denominator 0");
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["status"] != "fails");
  }
  r = run("scan-parabolic --region 0,1,1,3 --max-denominator 4 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("re,im,degree,status\n", 0) == 0);
  CHECK(run("scan 3 3 --degree-max 5 --cap 10").status == 2);
  CHECK(run("scan inf 3").status == 2);
  CHECK(run("scan-parabolic --region 1,2").status == 2);
  CHECK(run("nonsense").status == 2);
}
