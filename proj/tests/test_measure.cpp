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

#include "test_util.hpp"
#include "zfun/measure.hpp"
#include "zfun/random.hpp"

using namespace zfun;
using testing::code_of;
using testing::q;
using testing::space;

TEST_SUITE("measure") {
  TEST_CASE("construction validates weights") {
    auto s = testing::two_point();
    CHECK(code_of([&] { (void)ProbMeasure(s, {q("1/2"), q("1/3")}); }) == ErrorCode::kInvalidMeasure);
    CHECK(code_of([&] { (void)ProbMeasure(s, {q("3/2"), q("-1/2")}); }) == ErrorCode::kInvalidMeasure);
    CHECK(code_of([&] { (void)ProbMeasure(s, {q("1")}); }) == ErrorCode::kSpaceMismatch);
    CHECK(code_of([&] { (void)ProbMeasure::from_labels(s, {{"z", q("1")}}); }) == ErrorCode::kUnknownPoint);
    auto mu = ProbMeasure::from_labels(s, {{"b", q("1")}});
    CHECK(mu.weight(0) == 0);
    CHECK(mu.support() == std::vector<std::size_t>{1});
  }

  TEST_CASE("dirac examples") {
    auto s = testing::two_point();
    CHECK(dirac(s, "a").weights() == std::vector<Rational>{1, 0});
    CHECK_FALSE(dirac(s, "a") == dirac(s, "b"));
    CHECK(code_of([&] { (void)dirac(s, "z"); }) == ErrorCode::kUnknownPoint);
  }

  TEST_CASE("pushforward examples") {
    auto x = testing::two_point();
    auto y = space({"y", "z"}, {{"0", "1"}, {"1", "0"}});
    MetricMap collapse(x, y, {0, 0});
    ProbMeasure mu(x, {q("3/10"), q("7/10")});
    CHECK(pushforward(collapse, mu) == dirac(y, "y"));
    CHECK(pushforward(identity_map(x), mu) == mu);
    CHECK(pushforward(MetricMap(x, x, {1, 0}), mu) == ProbMeasure(x, {q("7/10"), q("3/10")}));
    CHECK(code_of([&] { (void)pushforward(collapse, dirac(y, "y")); }) == ErrorCode::kSpaceMismatch);
  }

  TEST_CASE("change of variables") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
      auto x = random_space(rng, uniform_between(rng, 1, 5), "x");
      auto y = random_space(rng, uniform_between(rng, 1, 5), "y");
      auto phi = random_map(rng, x, y);
      auto mu = random_measure(rng, x);
      std::vector<Rational> g(y->size());
      for (auto& v : g) v = ratio(static_cast<long>(uniform_index(rng, 9)) - 4, 3);
      auto [lhs, rhs] = change_of_variables_check(phi, mu, g);
      // Direct double sum over domain points as the oracle.
      Rational oracle = 0;
      for (std::size_t i = 0; i < x->size(); ++i) oracle += mu.weight(i) * g[phi(i)];
      CHECK(lhs == oracle);
      CHECK(rhs == oracle);
    }
    auto x = testing::two_point();
    ProbMeasure mu(x, {q("1/4"), q("3/4")});
    CHECK(change_of_variables_check(identity_map(x), mu, {0, 0}) == std::pair<Rational, Rational>{0, 0});
    CHECK(change_of_variables_check(identity_map(x), mu, {5, 5}) == std::pair<Rational, Rational>{5, 5});
  }

  TEST_CASE("image law and preimage witness") {
    auto x = testing::two_point();
    auto y = space({"u", "v", "w"}, {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
    MetricMap phi(x, y, {0, 0});
    CHECK(in_image(phi, dirac(y, "u")));
    CHECK_FALSE(in_image(phi, dirac(y, "v")));
    CHECK_FALSE(in_image(phi, ProbMeasure(y, {q("1/2"), q("1/2"), 0})));
    auto w = preimage_witness(phi, dirac(y, "u"));
    REQUIRE(w);
    // The uniform split over the fiber {a, b}.
    CHECK(*w == ProbMeasure(x, {q("1/2"), q("1/2")}));
    CHECK_FALSE(preimage_witness(phi, dirac(y, "w")));
  }

  TEST_CASE("injectivity transfer with a collision witness") {
    auto x = space({"a", "b", "c"}, {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
    auto y = testing::two_point();
    MetricMap folding(x, y, {0, 1, 0});
    std::pair<std::size_t, std::size_t> witness;
    CHECK_FALSE(measure_map_injective(folding, &witness));
    CHECK(witness.first != witness.second);
    CHECK(folding(witness.first) == folding(witness.second));
    CHECK(injectivity_transfer_check(folding));
    MetricMap embedding(y, x, {2, 0});
    CHECK(measure_map_injective(embedding));
    CHECK_FALSE(measure_map_surjective(embedding));
    CHECK(measure_map_surjective(folding));
  }

  TEST_CASE("convex combinations stay exact") {
    auto x = testing::two_point();
    auto mix = convex_combination(q("1/3"), dirac(x, "a"), dirac(x, "b"));
    CHECK(mix == ProbMeasure(x, {q("1/3"), q("2/3")}));
    CHECK(integrate({q("3"), q("6")}, mix) == 5);
  }
}
