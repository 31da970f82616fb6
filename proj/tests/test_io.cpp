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

#include <filesystem>

#include "test_util.hpp"
#include "zfun/io.hpp"
#include "zfun/kantorovich.hpp"
#include "zfun/random.hpp"

using namespace zfun;
using testing::code_of;
using testing::q;

namespace {

const std::filesystem::path kData = ZFUN_TEST_DATA;

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("files with relative references") {
    auto s = load_space(kData / "triangle.json");
    CHECK(s->labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(diameter(*s) == 2);
    auto mu = load_measure(kData / "mu.json");
    auto nu = load_measure(kData / "nu.json");
    CHECK(kantorovich_primal(mu, nu).value == q("1/2"));
    auto swap = load_map(kData / "swap.json");
    CHECK(swap.assignment() == std::vector<std::size_t>{1, 0});
    auto step = load_step(kData / "step.json");
    CHECK(step.breakpoints() == std::vector<Rational>{0, q("1/2"), 1});
  }

  TEST_CASE("errors carry their codes") {
    CHECK(code_of([] { (void)load_space(kData / "missing.json"); }) == ErrorCode::kIo);
    CHECK(code_of([] { (void)load_space(kData / "malformed.json"); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)load_space(kData / "bad_triangle.json"); }) == ErrorCode::kAxiomViolation);
    CHECK(code_of([] { (void)parse_json_text("{"); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)space_from_json(Json{{"points", {"a"}}}, kData); }) == ErrorCode::kParse);
  }

  TEST_CASE("numbers: strings and integers, never floats") {
    CHECK(rational_from_json(Json("3/6")) == q("1/2"));
    CHECK(rational_from_json(Json(4)) == 4);
    CHECK(rational_from_json(Json(-2)) == -2);
    CHECK(code_of([] { (void)rational_from_json(Json(0.5)); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)rational_from_json(Json(nullptr)); }) == ErrorCode::kParse);
    auto s = space_from_json(Json::parse(R"({"points": ["a", "b"], "dist": [[0, 2], [2, 0]]})"), kData);
    CHECK(s->distance(0, 1) == 2);
  }

  TEST_CASE("round trips") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
      auto x = random_space(rng, uniform_between(rng, 1, 6), "x");
      auto y = random_space(rng, uniform_between(rng, 1, 6), "y");
      CHECK(*space_from_json(to_json(*x), kData) == *x);
      auto mu = random_measure(rng, x);
      CHECK(measure_from_json(to_json(mu), kData) == mu);
      auto f = random_map(rng, x, y);
      CHECK(map_from_json(to_json(f), kData) == f);
      auto u = random_step(rng, y);
      CHECK(step_from_json(to_json(u), kData) == u);
    }
  }

  TEST_CASE("double formatting is shortest round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  }
}
