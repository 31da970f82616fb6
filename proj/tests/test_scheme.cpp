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
#include <set>

#include "test_util.hpp"
#include "zfun/random.hpp"
#include "zfun/scheme.hpp"

using namespace zfun;
using testing::code_of;
using testing::q;

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t>& subset, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (std::find(subset.begin(), subset.end(), p) == subset.end()) out.push_back(p);
  }
  return out;
}

// Oracle for the order-preserving fixture: φ on K, and the i-th point of
// Ω∖K goes to the i-th point of Ω∖L.
std::vector<std::size_t> expected_hat(const ContinuationContext& ctx, std::size_t km, std::size_t lm,
                                      const MetricMap& phi) {
  const std::size_t n = ctx.ambient->size();
  const auto& k = ctx.family[km];
  const auto& l = ctx.family[lm];
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < k.size(); ++i) out[k[i]] = l[phi(i)];
  const auto rest_k = complement(k, n), rest_l = complement(l, n);
  for (std::size_t i = 0; i < rest_k.size(); ++i) out[rest_k[i]] = rest_l[i];
  return out;
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("fixture shape") {
    auto ctx = build_finite_fixture(4, 1, 3);
    CHECK(ctx.family.size() == 4);
    CHECK(ctx.ambient->size() == 4);
    for (const auto& m : ctx.members) CHECK(ctx.lambda->on_space(m)->size() == 4);
    auto ctx2 = build_finite_fixture(6, 3, 3);
    CHECK(ctx2.family.size() == 20);
    std::set<std::vector<std::size_t>> distinct(ctx2.family.begin(), ctx2.family.end());
    CHECK(distinct.size() == 20);
    CHECK(verify_context(build_finite_fixture(4, 2, 1), true).empty());
  }

  TEST_CASE("fixture parameter errors") {
    CHECK(code_of([] { (void)build_finite_fixture(4, 0, 1); }) == ErrorCode::kBadParameters);
    CHECK(code_of([] { (void)build_finite_fixture(4, 3, 1); }) == ErrorCode::kBadParameters);
    CHECK(code_of([] { (void)build_finite_fixture(2, 1, 1); }) == ErrorCode::kBadParameters);
    CHECK(code_of([] { (void)build_finite_fixture(14, 2, 1); }) == ErrorCode::kBadParameters);
  }

  TEST_CASE("extensions match the order-preserving oracle") {
    auto ctx = build_finite_fixture(5, 2, 11);
    for (std::size_t km = 0; km < ctx.members.size(); ++km) {
      for (std::size_t lm = 0; lm < ctx.members.size(); ++lm) {
        for (const auto& phi : all_maps(ctx.members[km], ctx.members[lm])) {
          auto ext = extend_map(ctx, phi);
          CHECK(ext.hat.assignment() == expected_hat(ctx, km, lm, phi));
          CHECK(ext.bar.assignment() == phi.assignment());
        }
      }
    }
  }

  TEST_CASE("extension restricts to φ for random H") {
    auto ctx = build_finite_fixture(6, 3, 21, {.randomize_h = true});
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
      const std::size_t km = uniform_index(rng, ctx.members.size());
      const std::size_t lm = uniform_index(rng, ctx.members.size());
      auto phi = random_map(rng, ctx.members[km], ctx.members[lm]);
      auto hat = extend_map(ctx, phi).hat;
      for (std::size_t i = 0; i < 3; ++i) CHECK(hat(ctx.family[km][i]) == ctx.family[lm][phi(i)]);
      CHECK(hat.injective() == phi.injective());
    }
  }

  TEST_CASE("identity, bijections and non-injective maps") {
    auto ctx = build_finite_fixture(4, 2, 5, {.randomize_h = true});
    const auto& k = ctx.members[0];
    CHECK(extend_map(ctx, identity_map(k)).hat == identity_map(ctx.ambient));
    auto swap = MetricMap(k, ctx.members[5], {1, 0});
    auto hat = extend_map(ctx, swap).hat;
    CHECK(hat.injective());
    CHECK(hat.surjective());
    auto collapse = MetricMap(k, k, {0, 0});
    auto flat = extend_map(ctx, collapse).hat;
    CHECK_FALSE(flat.injective());
    CHECK_FALSE(flat.surjective());
  }

  TEST_CASE("maps outside the family are rejected") {
    auto ctx = build_finite_fixture(4, 2, 5);
    auto loose = testing::space({"p0", "zz"}, {{"0", "1"}, {"1", "0"}});
    CHECK(code_of([&] { (void)extend_map(ctx, identity_map(loose)); }) == ErrorCode::kNotInFamily);
  }

  TEST_CASE("extended metric matches the glued oracle") {
    auto ctx = build_finite_fixture(4, 2, 5);
    const auto& l = ctx.members[0];  // {p0, p1}
    auto scaled = with_metric(l, {{q("0"), q("3")}, {q("3"), q("0")}});
    auto ext = extend_metric(ctx, scaled);
    CHECK(diameter(*ext) == 3);
    CHECK(ext->distance(0, 1) == 3);
    CHECK(ext->distance(2, 3) == 1);
    CHECK(ext->distance(0, 2) == 3);
    auto small = with_metric(l, {{q("0"), q("1/4")}, {q("1/4"), q("0")}});
    auto ext_small = extend_metric(ctx, small);
    CHECK(ext_small->distance(0, 1) == q("1/4"));
    CHECK(ext_small->distance(1, 3) == 1);

    auto single = build_finite_fixture(4, 1, 5);
    CHECK(diameter(*extend_metric(single, single.members[2])) == 1);
  }

  TEST_CASE("extension is an isometry for the sup metric") {
    auto ctx = build_finite_fixture(4, 2, 8, {.randomize_h = true});
    Rng rng(6);
    for (std::size_t lm = 0; lm < ctx.members.size(); ++lm) {
      auto l = ctx.members[lm];
      auto metric = random_metric_on(rng, l->labels());
      std::vector<std::pair<MetricMap, MetricMap>> pairs;
      const auto maps = all_maps(ctx.members[0], l);
      for (const auto& a : maps) {
        for (const auto& b : maps) pairs.emplace_back(a, b);
      }
      for (const auto& p : extension_isometry_check(ctx, metric, pairs)) CHECK(p.map_distance == p.extended_distance);
    }
  }

  TEST_CASE("automorphism decomposition") {
    auto ctx = build_finite_fixture(4, 2, 5, {.randomize_h = true});
    auto id = identity_map(ctx.ambient);
    auto d = decompose_automorphism(ctx, 0, id);
    CHECK(d.u == id);
    CHECK(d.v == id);

    // h fixes K pointwise: the K-part of the decomposition is trivial.
    MetricMap fixes(ctx.ambient, ctx.ambient, {0, 1, 3, 2});
    auto df = decompose_automorphism(ctx, 0, fixes);
    CHECK(df.u == fixes);
    CHECK(df.v == id);

    for (const auto& h : setwise_automorphisms(ctx, 0)) {
      auto dh = decompose_automorphism(ctx, 0, h);
      CHECK(compose(dh.u, dh.v) == h);
      CHECK(dh.u(0) == 0);
      CHECK(dh.u(1) == 1);
    }
    CHECK(setwise_automorphisms(ctx, 0).size() == 4);

    MetricMap moves(ctx.ambient, ctx.ambient, {2, 1, 0, 3});
    CHECK(code_of([&] { (void)decompose_automorphism(ctx, 0, moves); }) == ErrorCode::kNotSetwiseInvariant);
    MetricMap flat(ctx.ambient, ctx.ambient, {0, 0, 2, 3});
    CHECK(code_of([&] { (void)decompose_automorphism(ctx, 0, flat); }) == ErrorCode::kBadParameters);
  }

  TEST_CASE("mutated Λ breaks compatibility with the metric") {
    auto ctx = build_finite_fixture(4, 2, 5, {.mutate_lambda_metric = true});
    auto v = verify_context(ctx, true);
    CHECK(std::any_of(v.begin(), v.end(), [](const auto& x) { return x.tag == "(Λ4)"; }));
  }
}
