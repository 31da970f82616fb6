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

#include <cmath>

#include "check_util.hpp"
#include "zfun/kantorovich.hpp"

namespace zfun {

using detail::assignment_of;
using detail::MeasurePair;
using detail::pair_witness;
using detail::stream;

namespace {

Rational kantorovich(const ProbMeasure& mu, const ProbMeasure& nu) { return kantorovich_primal(mu, nu).value; }

// Empty when the pair passes, otherwise a short description of what broke.
std::string exact_duality_problem(const MeasurePair& p) {
  const auto primal = kantorovich_primal(p.mu, p.nu);
  const auto dual = kantorovich_dual(p.mu, p.nu);
  if (primal.value != dual.value) return "primal " + to_string(primal.value) + " != dual " + to_string(dual.value);
  if (!primal.plan.has_exact_marginals()) return "plan marginals differ from μ, ν";
  if (primal.plan.cost() != primal.value) return "plan cost differs from the primal value";
  if (!is_nonexpansive(dual.potential)) return "potential is not nonexpansive";
  const Rational lifted = integrate(dual.potential.values, p.mu) - integrate(dual.potential.values, p.nu);
  if (abs(lifted) != dual.value) return "potential does not attain the dual value";
  return {};
}

std::string float_duality_problem(const MeasurePair& p, double tolerance) {
  const auto f = kantorovich_float(p.mu, p.nu);
  if (!(std::fabs(f.gap) <= tolerance)) return "float gap " + std::to_string(f.gap) + " exceeds tolerance";
  const double exact = to_double(kantorovich(p.mu, p.nu));
  if (!(std::fabs(f.primal - exact) <= tolerance)) return "float value strays from the exact value";
  return {};
}

void duality(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("strong duality: primal = dual with feasible certificates", "plumbing");
  Rng rng = stream(config, 21);
  const bool exact = config.mode == Mode::kExact;
  auto problem = [&](const MeasurePair& p) {
    return exact ? exact_duality_problem(p) : float_duality_problem(p, config.tolerance);
  };
  double worst = 0;
  for (std::size_t t = 0; t < 2 * config.trials; ++t) {
    SpaceRef space = random_space(rng, uniform_between(rng, 2, 8), "x");
    MeasurePair pair{random_measure(rng, space), random_measure(rng, space)};
    if (!exact) worst = std::max(worst, std::fabs(kantorovich_float(pair.mu, pair.nu).gap));
    rec.count();
    std::string why = problem(pair);
    if (!why.empty()) {
      MeasurePair small = detail::shrink_pair(pair, [&](const MeasurePair& p) { return !problem(p).empty(); });
      rec.fail(problem(small), pair_witness(small));
    }
  }
  if (!exact) rec.set_value("max_abs_gap", format_double(worst));
  out.push_back(std::move(rec));
}

void dirac_and_diameter(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord iso("K(δ_a, δ_b) = d(a, b)", "(Λ4)");
  CheckRecord diam("diam M(X) = diam X (Diracs attain it, 100 sampled pairs stay below)", "(i)");
  Rng rng = stream(config, 22);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef space = random_space(rng, uniform_between(rng, 1, 7), "x");
    for (std::size_t a = 0; a < space->size(); ++a) {
      for (std::size_t b = 0; b < space->size(); ++b) {
        iso.count();
        const Rational k = kantorovich(dirac(space, a), dirac(space, b));
        if (k != space->distance(a, b)) {
          iso.fail("Dirac distance differs",
                   Json{{"space", to_json(*space)}, {"a", space->label(a)}, {"b", space->label(b)},
                        {"kantorovich", to_string(k)}});
        }
      }
    }
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef space = random_space(rng, uniform_between(rng, 1, 6), "x");
    diam.count();
    const auto check = measure_diameter_check(space, 100, rng);
    if (!check.holds()) {
      diam.fail("diameter not preserved",
                Json{{"space", to_json(*space)},
                     {"diameter", to_string(check.space_diameter)},
                     {"dirac_max", to_string(check.dirac_max)},
                     {"sampled_max", to_string(check.sampled_max)}});
    }
  }
  out.push_back(std::move(iso));
  out.push_back(std::move(diam));
}

void metric_axioms(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("Kantorovich distance is a metric on M(X)", "plumbing");
  Rng rng = stream(config, 23);
  auto check_all = [&](const std::vector<ProbMeasure>& ms) {
    const std::size_t m = ms.size();
    std::vector<std::vector<Rational>> k(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) k[i][j] = kantorovich(ms[i], ms[j]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        rec.count();
        const bool same = ms[i] == ms[j];
        bool ok = k[i][j] == k[j][i] && (k[i][j] == 0) == same && k[i][j] >= 0;
        for (std::size_t l = 0; ok && l < m; ++l) ok = k[i][j] <= k[i][l] + k[l][j];
        if (!ok) rec.fail("axiom fails", Json{{"mu", to_json(ms[i])}, {"nu", to_json(ms[j])}});
      }
    }
  };
  // Every measure on a two-point space with weights in steps of 1/6.
  SpaceRef two = random_space(rng, 2, "x");
  std::vector<ProbMeasure> grid;
  for (long w = 0; w <= 6; ++w) grid.emplace_back(two, std::vector<Rational>{ratio(w, 6), ratio(6 - w, 6)});
  check_all(grid);
  for (std::size_t t = 0; t < config.trials; t += 10) {
    SpaceRef space = random_space(rng, uniform_between(rng, 2, 5), "x");
    std::vector<ProbMeasure> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(random_measure(rng, space));
    ms.push_back(ms.front());
    check_all(ms);
  }
  out.push_back(std::move(rec));
}

void map_isometry(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("sup distance of M(φ), M(ψ) equals sup distance of φ, ψ", "(Λ5)");
  Rng rng = stream(config, 24);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 5), "y");
    MetricMap phi = random_map(rng, x, y), psi = random_map(rng, x, y);
    rec.count();
    const auto check = map_isometry_check(phi, psi, 4, rng);
    if (!check.holds()) {
      rec.fail("isometry fails", Json{{"phi", assignment_of(phi)},
                                      {"psi", assignment_of(psi)},
                                      {"sup_distance", to_string(check.sup_dist)},
                                      {"dirac_sup", to_string(check.dirac_sup)},
                                      {"sampled_max", to_string(check.sampled_max)}});
    }
  }
  out.push_back(std::move(rec));
}

void pointwise_convergence(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("φ_n -> φ pointwise gives M(φ_n)μ -> M(φ)μ within d_sup(φ_n, φ)", "(h)");
  Rng rng = stream(config, 25);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 6), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 5), "y");
    MetricMap phi = random_map(rng, x, y);
    ProbMeasure mu = random_measure(rng, x);
    const ProbMeasure limit = pushforward(phi, mu);
    // φ_n agrees with φ on the first n points and is random elsewhere.
    for (std::size_t n = 0; n <= x->size(); ++n) {
      std::vector<std::size_t> a = phi.assignment();
      for (std::size_t i = n; i < a.size(); ++i) a[i] = uniform_index(rng, y->size());
      MetricMap phi_n(x, y, a);
      const Rational k = kantorovich(pushforward(phi_n, mu), limit);
      rec.count();
      const bool ok = k <= sup_distance(phi_n, phi) && (n < x->size() || k == 0);
      if (!ok) {
        rec.fail("bound fails", Json{{"phi", assignment_of(phi)}, {"phi_n", assignment_of(phi_n)},
                                     {"mu", to_json(mu)}, {"kantorovich", to_string(k)}});
      }
    }
  }
  out.push_back(std::move(rec));
}

}  // namespace

void run_kantorovich_suite(const RunConfig& config, std::vector<CheckRecord>& out) {
  duality(config, out);
  dirac_and_diameter(config, out);
  metric_axioms(config, out);
  map_isometry(config, out);
  pointwise_convergence(config, out);
}

}  // namespace zfun
