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

#include "zfun/kantorovich.hpp"

#include <cmath>

#include "zfun/random.hpp"
#include "zfun/simplex.hpp"
#include "zfun/transport.hpp"

namespace zfun {
namespace {

void require_same_space(const ProbMeasure& mu, const ProbMeasure& nu) {
  if (!same_space(mu.space(), nu.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "Kantorovich distance needs two measures on one space");
  }
}

// Potentials pinned at f[0] = 0 satisfy |f[i]| <= d(0, i), so g[i] = f[i] +
// d(0, i) >= 0 and every Lipschitz constraint g[i] − g[j] <= d(i,j) + d(0,i) −
// d(0,j) has a nonnegative right-hand side by the triangle inequality. That
// puts the polytope in slack-feasible form with variables g[1..n-1].
template <class T>
std::pair<T, std::vector<T>> solve_dual(const std::vector<std::vector<T>>& d, const std::vector<T>& mu,
                                        const std::vector<T>& nu) {
  const std::size_t n = d.size();
  std::vector<T> f(n, T(0));
  if (n == 1) return {T(0), f};
  const std::size_t vars = n - 1;
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<T> row(vars, T(0));
    row[i - 1] = T(1);
    a.push_back(std::move(row));
    b.push_back(T(d[0][i] + d[i][0]));
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) continue;
      std::vector<T> row(vars, T(0));
      row[i - 1] = T(1);
      row[j - 1] = T(-1);
      a.push_back(std::move(row));
      T rhs = d[i][j] + d[0][i] - d[0][j];
      // Float mode only: round-off can push a tight triangle slightly negative.
      if (Numeric<T>::zero(rhs)) rhs = T(0);
      b.push_back(rhs);
    }
  }
  std::vector<T> c(vars);
  T offset(0);
  for (std::size_t i = 1; i < n; ++i) {
    c[i - 1] = mu[i] - nu[i];
    offset += c[i - 1] * d[0][i];
  }
  LpResult<T> lp = maximize_slack_feasible(a, b, c);
  if (lp.status != LpStatus::kOptimal) throw Error(ErrorCode::kInternal, "dual LP reported unbounded");
  for (std::size_t i = 1; i < n; ++i) f[i] = lp.x[i - 1] - d[0][i];
  return {T(lp.value - offset), f};
}

}  // namespace

bool is_nonexpansive(const LipschitzPotential& f) {
  const auto& space = *f.space;
  if (f.values.size() != space.size()) return false;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (abs(f.values[i] - f.values[j]) > space.distance(i, j)) return false;
    }
  }
  return true;
}

Rational TransportPlan::cost() const {
  Rational total = 0;
  const auto& space = *source.space();
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix[i].size(); ++j) total += matrix[i][j] * space.distance(i, j);
  }
  return total;
}

bool TransportPlan::has_exact_marginals() const {
  const std::size_t n = source.weights().size();
  if (matrix.size() != n) return false;
  std::vector<Rational> cols(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) return false;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0) return false;
      row += matrix[i][j];
      cols[j] += matrix[i][j];
    }
    if (row != source.weight(i)) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j] != target.weight(j)) return false;
  }
  return true;
}

DualSolution kantorovich_dual(const ProbMeasure& mu, const ProbMeasure& nu) {
  require_same_space(mu, nu);
  auto [value, f] = solve_dual<Rational>(mu.space()->matrix(), mu.weights(), nu.weights());
  for (auto& v : f) v.canonicalize();
  value.canonicalize();
  return DualSolution{value, LipschitzPotential{mu.space(), std::move(f)}};
}

PrimalSolution kantorovich_primal(const ProbMeasure& mu, const ProbMeasure& nu) {
  require_same_space(mu, nu);
  auto solution = solve_transport<Rational>(mu.weights(), nu.weights(), mu.space()->matrix());
  for (auto& row : solution.plan) {
    for (auto& x : row) x.canonicalize();
  }
  solution.cost.canonicalize();
  return PrimalSolution{solution.cost, TransportPlan{mu, nu, std::move(solution.plan)}};
}

Rational duality_gap(const ProbMeasure& mu, const ProbMeasure& nu) {
  Rational gap = kantorovich_primal(mu, nu).value - kantorovich_dual(mu, nu).value;
  gap.canonicalize();
  return gap;
}

FloatKantorovich kantorovich_float(const std::vector<std::vector<double>>& dist, std::vector<double> mu,
                                   std::vector<double> nu) {
  if (mu.size() != dist.size() || nu.size() != dist.size()) {
    throw Error(ErrorCode::kSpaceMismatch, "weights and distance matrix disagree in size");
  }
  FloatKantorovich out;
  for (auto* w : {&mu, &nu}) {
    double total = 0;
    for (double x : *w) {
      if (x < 0) throw Error(ErrorCode::kInvalidMeasure, "negative weight");
      total += x;
    }
    const double drift = std::abs(total - 1.0);
    if (drift > 1e-12) throw Error(ErrorCode::kInfeasibleMass, "weights total drifts from 1 by more than 1e-12");
    out.mass_drift = std::max(out.mass_drift, drift);
    for (double& x : *w) x /= total;
  }
  auto transport = solve_transport<double>(mu, nu, dist);
  auto [dual, potential] = solve_dual<double>(dist, mu, nu);
  out.primal = transport.cost;
  out.dual = dual;
  out.gap = out.primal - out.dual;
  out.potential = std::move(potential);
  out.plan = std::move(transport.plan);
  return out;
}

FloatKantorovich kantorovich_float(const ProbMeasure& mu, const ProbMeasure& nu) {
  require_same_space(mu, nu);
  const auto& space = *mu.space();
  std::vector<std::vector<double>> dist(space.size(), std::vector<double>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) dist[i][j] = to_double(space.distance(i, j));
  }
  std::vector<double> a, b;
  for (const auto& w : mu.weights()) a.push_back(to_double(w));
  for (const auto& w : nu.weights()) b.push_back(to_double(w));
  return kantorovich_float(dist, std::move(a), std::move(b));
}

DiameterCheck measure_diameter_check(const SpaceRef& space, std::size_t samples, std::mt19937_64& rng) {
  DiameterCheck out;
  out.space_diameter = diameter(*space);
  out.dirac_max = 0;
  for (std::size_t a = 0; a < space->size(); ++a) {
    for (std::size_t b = a + 1; b < space->size(); ++b) {
      Rational d = kantorovich_dual(dirac(space, a), dirac(space, b)).value;
      if (d > out.dirac_max) out.dirac_max = d;
    }
  }
  out.sampled_max = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ProbMeasure mu = random_measure(rng, space);
    ProbMeasure nu = random_measure(rng, space);
    Rational d = kantorovich_dual(mu, nu).value;
    if (d > out.sampled_max) out.sampled_max = d;
  }
  out.samples = samples;
  return out;
}

MapIsometryCheck map_isometry_check(const MetricMap& phi, const MetricMap& psi, std::size_t samples,
                                    std::mt19937_64& rng) {
  MapIsometryCheck out;
  out.sup_dist = sup_distance(phi, psi);
  out.dirac_sup = 0;
  for (std::size_t x = 0; x < phi.domain()->size(); ++x) {
    ProbMeasure delta = dirac(phi.domain(), x);
    Rational d = kantorovich_dual(pushforward(phi, delta), pushforward(psi, delta)).value;
    if (d > out.dirac_sup) out.dirac_sup = d;
  }
  out.sampled_max = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ProbMeasure mu = random_measure(rng, phi.domain());
    Rational d = kantorovich_dual(pushforward(phi, mu), pushforward(psi, mu)).value;
    if (d > out.sampled_max) out.sampled_max = d;
  }
  out.samples = samples;
  return out;
}

}  // namespace zfun
