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

#include <numeric>

#include "test_util.hpp"
#include "zfun/random.hpp"
#include "zfun/step_function.hpp"

using namespace zfun;
using testing::code_of;
using testing::q;
using testing::space;

namespace {

std::size_t value_at(const StepFunction& u, const Rational& x) {
  for (std::size_t i = 0; i < u.segments(); ++i) {
    if (u.breakpoints()[i] <= x && x < u.breakpoints()[i + 1]) return u.values()[i];
  }
  return u.values().back();
}

// Oracle: refine both partitions to a common uniform grid and sum the
// distances at cell midpoints.
Rational midpoint_grid(const StepFunction& f, const StepFunction& g) {
  mpz_class den = 1;
  for (const auto* u : {&f, &g}) {
    for (const auto& t : u->breakpoints()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.get_den().get_mpz_t());
  }
  const long cells = den.get_si();
  Rational total = 0;
  for (long c = 0; c < cells; ++c) {
    const Rational mid = ratio(2 * c + 1, 2 * cells);
    total += f.target()->distance(value_at(f, mid), value_at(g, mid));
  }
  return total / cells;
}

SpaceRef three_points() {
  return space({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
}

}  // namespace

TEST_SUITE("step") {
  TEST_CASE("integral metric example: 1/2") {
    auto s = testing::two_point();
    auto u = StepFunction::from_labels(s, {q("0"), q("1/2"), q("1")}, {"a", "b"});
    CHECK(integral_metric(u, dirac_const(s, "a")) == q("1/2"));
    CHECK(integral_metric(u, dirac_const(s, "b")) == q("1/2"));
    CHECK(integral_metric(dirac_const(s, "a"), dirac_const(s, "b")) == 1);
    CHECK(integral_metric(u, u) == 0);
  }

  TEST_CASE("integral metric matches the midpoint-grid oracle") {
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
      auto s = random_space(rng, uniform_between(rng, 1, 5), "x");
      auto f = random_step(rng, s), g = random_step(rng, s);
      CHECK(integral_metric(f, g) == midpoint_grid(f, g));
    }
  }

  TEST_CASE("adjacent equal segments are merged") {
    auto s = three_points();
    StepFunction u(s, {q("0"), q("1/4"), q("2/4"), q("1")}, {0, 0, 1});
    CHECK(u.segments() == 2);
    CHECK(u.breakpoints() == std::vector<Rational>{0, q("1/2"), 1});
    CHECK(u == StepFunction(s, {q("0"), q("1/2"), q("1")}, {0, 1}));
    CHECK(StepFunction(s, {q("0"), q("1/3"), q("1")}, {2, 2}) == dirac_const(s, 2));
  }

  TEST_CASE("construction errors") {
    auto s = three_points();
    CHECK(code_of([&] { StepFunction(s, {q("0"), q("1")}, {0, 1}); }) == ErrorCode::kBadParameters);
    CHECK(code_of([&] { StepFunction(s, {q("1/4"), q("1")}, {0}); }) == ErrorCode::kBadParameters);
    CHECK(code_of([&] { StepFunction(s, {q("0"), q("3/4")}, {0}); }) == ErrorCode::kBadParameters);
    CHECK(code_of([&] { StepFunction(s, {q("0"), q("1/2"), q("1/2"), q("1")}, {0, 1, 2}); }) ==
          ErrorCode::kBadParameters);
    CHECK(code_of([&] { StepFunction(s, {q("0"), q("1")}, {3}); }) == ErrorCode::kUnknownPoint);
    CHECK(code_of([&] { (void)StepFunction::from_labels(s, {q("0"), q("1")}, {"z"}); }) == ErrorCode::kUnknownPoint);
    CHECK(code_of([&] { (void)integral_metric(dirac_const(s, 0), dirac_const(testing::two_point(), 0)); }) ==
          ErrorCode::kTargetMismatch);
  }

  TEST_CASE("pushforward composes pointwise") {
    auto s = three_points();
    auto t = testing::two_point();
    MetricMap f(s, t, {0, 0, 1});
    StepFunction u(s, {q("0"), q("1/3"), q("2/3"), q("1")}, {0, 1, 2});
    auto v = compose_pushforward(f, u);
    CHECK(v == StepFunction(t, {q("0"), q("2/3"), q("1")}, {0, 1}));
    CHECK(compose_pushforward(identity_map(s), u) == u);
    CHECK(compose_pushforward(f, dirac_const(s, 2)) == dirac_const(t, 1));
  }

  TEST_CASE("phi_n witness examples") {
    auto s = three_points();
    StepFunction u(s, {q("0"), q("1/2"), q("1")}, {1, 2});
    auto w = phi_n_witness(0, 4, u);
    CHECK(w == StepFunction(s, {q("0"), q("1/4"), q("1/2"), q("1")}, {0, 1, 2}));
    CHECK(integral_metric(w, u) == q("1/4"));
    CHECK(phi_n_witness(0, 1, u) == dirac_const(s, 0));
    auto late = phi_n_witness(2, 3, u);
    CHECK(late == StepFunction(s, {q("0"), q("1/3"), q("1/2"), q("1")}, {2, 1, 2}));
    CHECK(code_of([&] { (void)phi_n_witness(0, 0, u); }) == ErrorCode::kBadN);
    CHECK(code_of([&] { (void)phi_n_witness(0, -2, u); }) == ErrorCode::kBadN);
    CHECK(code_of([&] { (void)phi_n_witness(5, 2, u); }) == ErrorCode::kUnknownPoint);
  }

  TEST_CASE("phi_n stays within diam / n and leaves the subspace") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
      auto s = random_space(rng, uniform_between(rng, 2, 5), "x");
      auto u = random_step(rng, s);
      const std::size_t a = uniform_index(rng, s->size());
      for (long n = 1; n <= 64; ++n) {
        auto w = phi_n_witness(a, n, u);
        CHECK(integral_metric(w, u) <= diameter(*s) / n);
        CHECK(value_at(w, 0) == a);
      }
    }
  }

  TEST_CASE("select_preimage picks the least index and round-trips") {
    auto s = three_points();
    auto t = testing::two_point();
    MetricMap f(s, t, {1, 0, 1});
    auto v = StepFunction::from_labels(t, {q("0"), q("1/3"), q("1")}, {"b", "a"});
    auto u = select_preimage(f, v);
    CHECK(u == StepFunction(s, {q("0"), q("1/3"), q("1")}, {0, 1}));
    CHECK(compose_pushforward(f, u) == v);

    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
      auto x = random_space(rng, uniform_between(rng, 1, 5), "x");
      auto y = random_space(rng, uniform_between(rng, 1, 5), "y");
      auto g = random_map(rng, x, y);
      auto image = g.image();
      auto w = random_step(rng, subspace(y, image));
      std::vector<std::size_t> values;
      for (auto val : w.values()) values.push_back(image[val]);
      StepFunction in_image(y, w.breakpoints(), values);
      auto pre = select_preimage(g, in_image);
      CHECK(compose_pushforward(g, pre) == in_image);
    }
  }

  TEST_CASE("select_preimage reports the first segment outside the image") {
    auto s = three_points();
    auto t = testing::two_point();
    MetricMap f(s, t, {0, 0, 0});
    auto v = StepFunction::from_labels(t, {q("0"), q("1/2"), q("1")}, {"a", "b"});
    try {
      (void)select_preimage(f, v);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kValueOutsideImage);
      CHECK(e.witness() == std::vector<std::size_t>{1});
    }
  }
}
