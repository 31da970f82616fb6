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
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "zfun/zfun.h"

namespace {

const char* kTwoPoint = R"({"points": ["a", "b"], "dist": [["0", "1"], ["1", "0"]]})";

std::string take(char* text) {
  std::string out = text ? text : "";
  zfun_string_free(text);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and status names") {
    CHECK(std::string(zfun_version()) == "0.1.0");
    CHECK(std::string(zfun_status_name(ZFUN_OK)) == "OK");
  }

  TEST_CASE("space handles") {
    zfun_space* s = nullptr;
    REQUIRE(zfun_space_from_json(R"({"points": ["a", "b", "c"], "dist": [["0", "1", "2"], ["1", "0", "2"], ["2", "2", "0"]]})",
                                 &s) == ZFUN_OK);
    size_t n = 0;
    CHECK(zfun_space_size(s, &n) == ZFUN_OK);
    CHECK(n == 3);
    char* d = nullptr;
    CHECK(zfun_space_diameter(s, &d) == ZFUN_OK);
    CHECK(take(d) == "2");

    zfun_space* anchor = nullptr;
    REQUIRE(zfun_space_from_json(kTwoPoint, &anchor) == ZFUN_OK);
    zfun_space* glued = nullptr;
    CHECK(zfun_space_glue(s, anchor, &glued) == ZFUN_OK);
    CHECK(zfun_space_size(glued, &n) == ZFUN_OK);
    CHECK(n == 5);
    zfun_space_free(glued);
    zfun_space_free(anchor);
    zfun_space_free(s);
  }

  TEST_CASE("errors set last_error") {
    zfun_space* s = nullptr;
    CHECK(zfun_space_from_json("{", &s) == ZFUN_ERR_PARSE);
    CHECK(s == nullptr);
    CHECK(std::string(zfun_last_error()).size() > 0);
    CHECK(zfun_space_from_json(R"({"points": ["a", "b", "c"], "dist": [["0", "1", "3"], ["1", "0", "1"], ["3", "1", "0"]]})",
                               &s) == ZFUN_ERR_AXIOM_VIOLATION);
    CHECK(zfun_space_from_json(nullptr, &s) == ZFUN_ERR_NULL_ARGUMENT);
    CHECK(zfun_space_size(nullptr, nullptr) == ZFUN_ERR_NULL_ARGUMENT);
    CHECK(zfun_space_load("/nonexistent/space.json", &s) == ZFUN_ERR_IO);
  }

  TEST_CASE("Kantorovich distance and pushforward") {
    const std::string space = kTwoPoint;
    zfun_measure* mu = nullptr;
    zfun_measure* nu = nullptr;
    REQUIRE(zfun_measure_from_json(("{\"space\": " + space + R"(, "weights": {"a": "1/2", "b": "1/2"}})").c_str(),
                                   &mu) == ZFUN_OK);
    zfun_space* s = nullptr;
    REQUIRE(zfun_space_from_json(kTwoPoint, &s) == ZFUN_OK);
    REQUIRE(zfun_measure_dirac(s, "a", &nu) == ZFUN_OK);
    char* value = nullptr;
    CHECK(zfun_kantorovich(mu, nu, &value) == ZFUN_OK);
    CHECK(take(value) == "1/2");

    zfun_map* swap = nullptr;
    REQUIRE(zfun_map_from_json(("{\"domain\": " + space + ", \"codomain\": " + space +
                                R"(, "assignment": {"a": "b", "b": "a"}})")
                                   .c_str(),
                               &swap) == ZFUN_OK);
    zfun_measure* pushed = nullptr;
    CHECK(zfun_map_pushforward(swap, nu, &pushed) == ZFUN_OK);
    char* json = nullptr;
    CHECK(zfun_measure_to_json(pushed, &json) == ZFUN_OK);
    auto j = nlohmann::json::parse(take(json));
    CHECK(j["weights"]["b"] == "1");
    CHECK(zfun_measure_dirac(s, "z", &pushed) == ZFUN_ERR_UNKNOWN_POINT);

    zfun_measure_free(pushed);
    zfun_map_free(swap);
    zfun_space_free(s);
    zfun_measure_free(nu);
    zfun_measure_free(mu);
  }

  TEST_CASE("step functions") {
    const std::string space = kTwoPoint;
    zfun_step* u = nullptr;
    zfun_step* v = nullptr;
    REQUIRE(zfun_step_from_json(("{\"target\": " + space + R"(, "breakpoints": ["0", "1/2", "1"], "values": ["a", "b"]})")
                                    .c_str(),
                                &u) == ZFUN_OK);
    REQUIRE(zfun_step_from_json(("{\"target\": " + space + R"(, "breakpoints": ["0", "1"], "values": ["a"]})").c_str(),
                                &v) == ZFUN_OK);
    char* d = nullptr;
    CHECK(zfun_step_distance(u, v, &d) == ZFUN_OK);
    CHECK(take(d) == "1/2");
    zfun_step_free(v);
    zfun_step_free(u);
  }

  TEST_CASE("run_command") {
    char* out = nullptr;
    int exit_code = -1;
    CHECK(zfun_run_command("check", R"({"args": {"suite": "step"}, "config": {"trials": 4}})", &out, &exit_code) ==
          ZFUN_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(exit_code == 0);
    CHECK(j["pass"] == true);
    CHECK(zfun_run_command("check", R"({"args": {"suite": "nope"}})", &out, &exit_code) == ZFUN_OK);
    CHECK(exit_code == 2);
    CHECK(nlohmann::json::parse(take(out))["error"]["code"] == "UnknownSuite");
  }
}
