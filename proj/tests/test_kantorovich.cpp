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
#include <cmath>
#include <numeric>

#include "test_util.hpp"
#include "zfun/kantorovich.hpp"
#include "zfun/random.hpp"
#include "zfun/simplex.hpp"
#include "zfun/transport.hpp"

using namespace zfun;
using testing::code_of;
using testing::q;
using testing::space;

namespace {

// Oracle: maximum of Σ f·(μ − ν) over the vertices of the Lipschitz polytope
// pinned at f(0) = 0. Every vertex makes n−1 independent constraints tight,
// i.e. f(i) − f(j) = d(i, j) along the oriented edges of a spanning tree, so
// enumerating Prüfer sequences and edge orientations visits all of them.
Rational vertex_enumeration_dual(const ProbMeasure& mu, const ProbMeasure& nu) {
  const auto& s = *mu.space();
  const std::size_t n = s.size();
  if (n == 1) return 0;
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = mu.weight(i) - nu.weight(i);

  Rational best = -1;
  std::vector<std::size_t> pruefer(n - 2, 0);
  while (true) {
    // Decode the tree.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> degree(n, 1);
    for (auto v : pruefer) ++degree[v];
    for (auto v : pruefer) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, v);
      --degree[leaf];
      --degree[v];
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree[i] == 1) rest.push_back(i);
    }
    edges.emplace_back(rest[0], rest[1]);

    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      // Propagate values from point 0 across the oriented tree.
      std::vector<std::optional<Rational>> f(n);
      f[0] = Rational(0);
      for (std::size_t round = 0; round < n; ++round) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          auto [i, j] = edges[e];
          const Rational sign = (mask >> e) & 1 ? 1 : -1;  // f(i) − f(j) = ±d(i, j)
          if (f[i] && !f[j]) f[j] = *f[i] - sign * s.distance(i, j);
          if (f[j] && !f[i]) f[i] = *f[j] + sign * s.distance(i, j);
        }
      }
      bool feasible = true;
      for (std::size_t i = 0; i < n && feasible; ++i) {
        for (std::size_t j = 0; j < n && feasible; ++j) feasible = *f[i] - *f[j] <= s.distance(i, j);
      }
      if (!feasible) continue;
      Rational value = 0;
      for (std::size_t i = 0; i < n; ++i) value += *f[i] * diff[i];
      best = std::max(best, value);
    }

    std::size_t pos = 0;
    while (pos < pruefer.size() && ++pruefer[pos] == n) pruefer[pos++] = 0;
    if (pos == pruefer.size()) break;
  }
  return best;
}

// Oracle on a line: W1 = Σ |F_μ − F_ν| over consecutive gaps.
Rational line_w1(const std::vector<Rational>& positions, const ProbMeasure& mu, const ProbMeasure& nu) {
  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return positions[a] < positions[b]; });
  Rational total = 0, cdf = 0;
  for (std::size_t r = 0; r + 1 < order.size(); ++r) {
    cdf += mu.weight(order[r]) - nu.weight(order[r]);
    total += abs(cdf) * (positions[order[r + 1]] - positions[order[r]]);
  }
  return total;
}

}  // namespace

TEST_SUITE("kantorovich") {
  TEST_CASE("two-point example: value 1/2, plan moves 1/2 from b to a") {
    auto s = testing::two_point();
    ProbMeasure mu(s, {q("1/2"), q("1/2")});
    auto nu = dirac(s, "a");
    const auto primal = kantorovich_primal(mu, nu);
    const auto dual = kantorovich_dual(mu, nu);
    CHECK(primal.value == q("1/2"));
    CHECK(dual.value == q("1/2"));
    CHECK(primal.plan.matrix[1][0] == q("1/2"));
    CHECK(primal.plan.matrix[0][0] == q("1/2"));
    CHECK(primal.plan.matrix[0][1] == 0);
    CHECK(dual.potential.values[0] == 0);
    CHECK(is_nonexpansive(dual.potential));
  }

  TEST_CASE("identical measures and Dirac pairs") {
    auto s = space({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
    ProbMeasure mu(s, {q("1/3"), q("1/6"), q("1/2")});
    CHECK(kantorovich_primal(mu, mu).value == 0);
    CHECK(kantorovich_dual(mu, mu).value == 0);
    const auto plan = kantorovich_primal(mu, mu).plan;
    for (std::size_t i = 0; i < 3; ++i) CHECK(plan.matrix[i][i] == mu.weight(i));
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        CHECK(kantorovich_primal(dirac(s, a), dirac(s, b)).value == s->distance(a, b));
        CHECK(kantorovich_dual(dirac(s, a), dirac(s, b)).value == s->distance(a, b));
      }
    }
  }

  TEST_CASE("both solvers match the vertex-enumeration oracle (n <= 5)") {
    Rng rng(17);
    for (int t = 0; t < 120; ++t) {
      auto s = random_space(rng, uniform_between(rng, 1, 5), "x");
      auto mu = random_measure(rng, s), nu = random_measure(rng, s);
      const Rational oracle = vertex_enumeration_dual(mu, nu);
      CAPTURE(t);
      CHECK(kantorovich_dual(mu, nu).value == oracle);
      CHECK(kantorovich_primal(mu, nu).value == oracle);
    }
  }

  TEST_CASE("line metrics match the CDF formula (n <= 8)") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = uniform_between(rng, 2, 8);
      std::vector<Rational> pos;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        Rational p;
        do {
          p = ratio(static_cast<long>(uniform_index(rng, 40)), static_cast<long>(uniform_between(rng, 1, 3)));
        } while (std::find(pos.begin(), pos.end(), p) != pos.end());
        pos.push_back(p);
        labels.push_back("x" + std::to_string(i));
      }
      DistanceMatrix d(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i][j] = abs(pos[i] - pos[j]);
      }
      auto s = make_space(labels, d);
      auto mu = random_measure(rng, s), nu = random_measure(rng, s);
      const Rational oracle = line_w1(pos, mu, nu);
      CHECK(kantorovich_primal(mu, nu).value == oracle);
      CHECK(kantorovich_dual(mu, nu).value == oracle);
    }
  }

  TEST_CASE("certificates are feasible") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
      auto s = random_space(rng, uniform_between(rng, 2, 8), "x");
      auto mu = random_measure(rng, s), nu = random_measure(rng, s);
      const auto primal = kantorovich_primal(mu, nu);
      const auto dual = kantorovich_dual(mu, nu);
      CHECK(primal.plan.has_exact_marginals());
      CHECK(primal.plan.cost() == primal.value);
      CHECK(is_nonexpansive(dual.potential));
      CHECK(dual.potential.values[0] == 0);
      CHECK(abs(integrate(dual.potential.values, mu) - integrate(dual.potential.values, nu)) == dual.value);
      CHECK(duality_gap(mu, nu) == 0);
    }
  }

  TEST_CASE("float route agrees with the exact route") {
    Rng rng(37);
    for (int t = 0; t < 100; ++t) {
      auto s = random_space(rng, uniform_between(rng, 2, 8), "x");
      auto mu = random_measure(rng, s), nu = random_measure(rng, s);
      const auto f = kantorovich_float(mu, nu);
      CHECK(std::fabs(f.gap) <= 1e-9);
      CHECK(std::fabs(f.primal - to_double(kantorovich_primal(mu, nu).value)) <= 1e-9);
    }
  }

  TEST_CASE("float mass drift is renormalised or rejected") {
    const std::vector<std::vector<double>> d{{0, 1}, {1, 0}};
    const auto ok = kantorovich_float(d, {0.5 + 1e-14, 0.5}, {0, 1});
    CHECK(ok.mass_drift > 0);
    CHECK(ok.primal == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(code_of([&] { (void)kantorovich_float(d, {0.6, 0.5}, {0, 1}); }) == ErrorCode::kInfeasibleMass);
  }

  TEST_CASE("mismatched spaces") {
    auto a = testing::two_point(), b = testing::two_point("2");
    CHECK(code_of([&] { (void)kantorovich_primal(dirac(a, 0), dirac(b, 0)); }) == ErrorCode::kSpaceMismatch);
    CHECK(code_of([&] { (void)kantorovich_dual(dirac(a, 0), dirac(b, 0)); }) == ErrorCode::kSpaceMismatch);
  }

  TEST_CASE("diameter and map isometry checks") {
    Rng rng(41);
    auto single = space({"a"}, {{"0"}});
    auto one = measure_diameter_check(single, 10, rng);
    CHECK(one.dirac_max == 0);
    CHECK(one.space_diameter == 0);
    auto two = measure_diameter_check(testing::two_point(), 10, rng);
    CHECK(two.dirac_max == 1);
    CHECK(two.holds());

    auto x = space({"a", "b", "c"}, {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
    auto y = testing::two_point("5/2");
    MetricMap phi(x, y, {0, 0, 0}), psi(x, y, {0, 1, 0});
    auto same = map_isometry_check(phi, phi, 10, rng);
    CHECK(same.dirac_sup == 0);
    CHECK(same.sup_dist == 0);
    auto differ = map_isometry_check(phi, psi, 100, rng);
    CHECK(differ.dirac_sup == q("5/2"));
    CHECK(differ.sup_dist == q("5/2"));
    CHECK(differ.holds());
    CHECK(code_of([&] { (void)map_isometry_check(phi, MetricMap(y, y, {0, 1}), 1, rng); }) ==
          ErrorCode::kDomainMismatch);
  }

  TEST_CASE("simplex: textbook instance and unboundedness") {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6).
    std::vector<std::vector<Rational>> a{{1, 0}, {0, 2}, {3, 2}};
    auto r = maximize_slack_feasible<Rational>(a, {4, 12, 18}, {3, 5});
    CHECK(r.status == LpStatus::kOptimal);
    CHECK(r.value == 36);
    CHECK(r.x == std::vector<Rational>{2, 6});
    auto u = maximize_slack_feasible<Rational>({{1, -1}}, {1}, {0, 1});
    CHECK(u.status == LpStatus::kUnbounded);
    auto fd = maximize_slack_feasible<double>({{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {3, 5});
    CHECK(fd.value == doctest::Approx(36));
  }

  TEST_CASE("transport: unequal totals are infeasible") {
    const std::vector<std::vector<Rational>> cost{{0, 1}, {1, 0}};
    CHECK(code_of([&] { (void)solve_transport<Rational>({1, 0}, {0, 2}, cost); }) == ErrorCode::kInfeasibleMass);
    auto sol = solve_transport<Rational>({1, 0}, {0, 1}, cost);
    CHECK(sol.cost == 1);
    CHECK(sol.plan[0][1] == 1);
  }
}
