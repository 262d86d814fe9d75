#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("REFLECTIA_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "REFLECTIA_BIN is not set");
  const std::string cmd = env + " '" + std::string(bin) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  const Run r = run("--json " + args);
  CHECK_MESSAGE(r.code == expect_code, args);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("hilb on a line") {
  const auto j = run_json("hilb --group 'G(2,1,1)' --cap 3");
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "hilb");
  CHECK(j["ok"] == true);
  CHECK(j["series_str"] == "1 + t*s + q*s + q*t + q^2 + q^2*t*s + q^3*s + q^3*t + O(q^4)");
}

TEST_CASE("cluster counts for A2") {
  const auto j = run_json("cluster --group A2");
  CHECK(j["f"][1] == 5);
  CHECK(j["fomin_reading"][1] == 5);
  CHECK(j["h_to_f"] == true);
}

TEST_CASE("output is reproducible") {
  const Run a = run("--json verify --group G4"), b = run("--json verify --group G4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK_FALSE(j["report"].contains("seconds"));
}

TEST_CASE("verify G24") {
  const Run r = run("verify --group G24");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("formula sources") {
  CHECK(run_json("formula --group B2 --r 1")["source"] == "theorem");
  CHECK(run_json("formula --group G24 --r 2")["source"] == "table");
  CHECK(run_json("formula --group 'G(3,3,3)' --r 1")["source"] == "koike");
}

TEST_CASE("rank2 and identities") {
  const auto j = run_json("rank2 --group G4");
  CHECK(j["ok"] == true);
  CHECK(run("rank2 --group G7").code == 2);
  CHECK(run("rank2 --group G7 --any").code == 0);
  CHECK(run_json("identity h-to-f --n 2 --e1 1 --a 2 --cap 20")["ok"] == true);
}

TEST_CASE("errors and exit codes") {
  CHECK(run("hilb --group G99").code == 2);
  const auto j = run_json("hilb --group G99", 2);
  CHECK(j["ok"] == false);
  CHECK(j["schema"] == 1);
  CHECK(run("hilb").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("catalan --group B2 --p 4").code == 2);
}

TEST_CASE("catalog override") {
  const std::string path = "/tmp/reflectia_cli_catalog.json";
  {
    std::ofstream f(path);
    f << R"({"schema":1,"groups":[{"name":"Flip","n":1,"m":1,"unitary":true,"real":true,"source":"test",
      "generators":[[[["-1"]]]]}]})";
  }
  const Run r = run("--json groups check --group Flip", "REFLECTIA_CATALOG=" + path);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  CHECK(run("hilb --group G4", "REFLECTIA_CATALOG=" + path).code == 2);
}
