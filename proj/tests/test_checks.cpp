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

#include <algorithm>

#include "test_util.hpp"
#include "zfun/checks.hpp"
#include "zfun/commands.hpp"

using namespace zfun;
using testing::code_of;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.trials = 8;
  return c;
}

}  // namespace

TEST_SUITE("checks") {
  TEST_CASE("shrinker reaches a minimal failing instance") {
    // Fails while both 3 and 7 are present; each step drops one element.
    using V = std::vector<int>;
    V start{1, 3, 5, 7, 9, 11};
    auto result = shrink_by_point_removal<V>(
        start, [](const V& v) { return v.size(); },
        [](const V& v, std::size_t i) -> std::optional<V> {
          V out = v;
          out.erase(out.begin() + static_cast<long>(i));
          return out;
        },
        [](const V& v) {
          return std::count(v.begin(), v.end(), 3) && std::count(v.begin(), v.end(), 7);
        });
    CHECK(result == V{3, 7});
  }

  TEST_CASE("every suite passes at a small budget") {
    for (const auto& suite : suite_names()) {
      CAPTURE(suite);
      auto report = run_check(suite, small_config());
      CHECK(report.pass());
      for (const auto& rec : report.records) {
        CHECK(is_property_tag(rec.tag()));
        CHECK(rec.failure_count() <= rec.instances());
      }
    }
  }

  TEST_CASE("float mode passes the Kantorovich suite") {
    auto c = small_config();
    c.mode = Mode::kFloat;
    CHECK(run_check("kantorovich", c).pass());
  }

  TEST_CASE("injected mutation is reported under the metric-compatibility tag") {
    auto c = small_config();
    c.inject_mutation = true;
    auto report = run_check("scheme", c);
    CHECK_FALSE(report.pass());
    bool found = false;
    for (const auto& rec : report.records) {
      if (rec.tag() == "(Λ4)" && !rec.passed()) {
        found = true;
        CHECK(!rec.failures().empty());
        CHECK(rec.failures().size() <= CheckRecord::kMaxWitnesses);
      }
    }
    CHECK(found);
  }

  TEST_CASE("reports are deterministic for a seed") {
    auto a = run_check("measure", small_config()).to_json().dump();
    auto b = run_check("measure", small_config()).to_json().dump();
    CHECK(a == b);
    auto other = small_config();
    other.seed = 7;
    CHECK(run_check("measure", other).pass());
  }

  TEST_CASE("report JSON shape") {
    auto j = run_check("step", small_config()).to_json();
    CHECK(j["command"] == "check step");
    CHECK(j["pass"] == true);
    CHECK(j.contains("config"));
    CHECK_FALSE(j.contains("duration_ms"));
    for (const auto& rec : j["records"]) {
      for (const char* key : {"name", "tag", "instances", "passed", "failure_count", "failures"}) {
        CHECK(rec.contains(key));
      }
    }
  }

  TEST_CASE("configuration errors") {
    CHECK(code_of([] { (void)run_check("nope", RunConfig{}); }) == ErrorCode::kUnknownSuite);
    RunConfig bad;
    bad.trials = 0;
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::kBadParameters);
    CHECK(code_of([] { (void)parse_mode("approx"); }) == ErrorCode::kParse);
    CHECK(code_of([] { CheckRecord("x", "(zz)"); }) == ErrorCode::kInternal);
  }

  TEST_CASE("run_command maps outcomes to exit codes") {
    auto ok = run_command("check", Json{{"args", {{"suite", "step"}}}, {"config", {{"trials", 4}}}});
    CHECK(ok.exit_code == kExitPass);
    auto bad = run_command("check", Json{{"args", {{"suite", "nope"}}}});
    CHECK(bad.exit_code == kExitUsage);
    CHECK(bad.output["error"]["code"] == "UnknownSuite");
    auto unknown = run_command("frobnicate", Json::object());
    CHECK(unknown.exit_code == kExitUsage);
  }
}
