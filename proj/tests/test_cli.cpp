// Copyright 2026 The zfun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kCli = ZFUN_CLI_PATH;
const std::string kData = ZFUN_TEST_DATA;

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return kData + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate exit codes") {
    auto ok = run("validate " + data("triangle.json"));
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["diameter"] == "2");
    auto bad = run("validate " + data("bad_triangle.json"));
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.out)["violations"][0]["axiom"] == "triangle");
    CHECK(run("validate " + data("malformed.json")).exit_code == 2);
    CHECK(run("validate " + data("missing.json")).exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
  }

  TEST_CASE("dist prints the exact value and certificates") {
    auto r = run("dist " + data("mu.json") + " " + data("nu.json"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "1/2");
    CHECK(j["gap"] == "0");
    auto f = run("--mode float dist " + data("mu.json") + " " + data("nu.json"));
    CHECK(f.exit_code == 0);
    CHECK(nlohmann::json::parse(f.out)["value"] == "0.5");
  }

  TEST_CASE("push and extend") {
    auto p = run("push " + data("swap.json") + " --measure " + data("nu.json"));
    CHECK(p.exit_code == 0);
    CHECK(nlohmann::json::parse(p.out)["result"]["weights"]["a"] == "1");
    auto e = run("extend " + data("fixture.json") + " " + data("extend_swap.json") + " --check-laws");
    CHECK(e.exit_code == 0);
    auto j = nlohmann::json::parse(e.out);
    CHECK(j["injective"] == true);
    CHECK(j["surjective"] == true);
  }

  TEST_CASE("check is deterministic and honours ZFUN_SEED") {
    auto a = run("check step --trials 5 --seed 9");
    auto b = run("check step --trials 5 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto env = run("check step --trials 5", "ZFUN_SEED=9");
    CHECK(env.out == a.out);
    auto other = run("check step --trials 5 --seed 10");
    CHECK(other.out != a.out);
    CHECK(run("check nope").exit_code == 2);
  }

  TEST_CASE("mutation is caught under the metric-compatibility tag") {
    auto r = run("check scheme --trials 4 --inject-mutation");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& rec : j["records"]) found = found || (rec["tag"] == "(Λ4)" && rec["passed"] == false);
    CHECK(found);
  }

  TEST_CASE("output file and report summary") {
    const auto path = std::filesystem::temp_directory_path() / "zfun_cli_test_report.json";
    auto r = run("check measure --trials 4 --output " + path.string());
    CHECK(r.exit_code == 0);
    REQUIRE(std::filesystem::exists(path));
    auto s = run("report " + path.string());
    CHECK(s.exit_code == 0);
    CHECK(nlohmann::json::parse(s.out)["pass"] == true);
    std::filesystem::remove(path);
  }
}
