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

#include "zfun/measure.hpp"

#include <algorithm>

namespace zfun {

ProbMeasure::ProbMeasure(SpaceRef space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_->size()) {
    throw Error(ErrorCode::kSpaceMismatch, "measure has " + std::to_string(weights_.size()) +
                                                " weights for " + std::to_string(space_->size()) + " points");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    weights_[i].canonicalize();
    if (weights_[i] < 0) {
      throw Error(ErrorCode::kInvalidMeasure, "negative weight at \"" + space_->label(i) + "\"", {i});
    }
    total += weights_[i];
  }
  if (total != 1) throw Error(ErrorCode::kInvalidMeasure, "weights total " + to_string(total) + ", expected 1");
}

ProbMeasure ProbMeasure::from_labels(SpaceRef space, const std::map<std::string, Rational>& weights) {
  std::vector<Rational> dense(space->size(), Rational(0));
  for (const auto& [label, w] : weights) dense[space->index_of(label)] = w;
  return ProbMeasure(std::move(space), std::move(dense));
}

std::vector<std::size_t> ProbMeasure::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0) out.push_back(i);
  }
  return out;
}

ProbMeasure dirac(const SpaceRef& space, std::size_t point) {
  if (point >= space->size()) throw Error(ErrorCode::kUnknownPoint, "point index out of range", {point});
  std::vector<Rational> w(space->size(), Rational(0));
  w[point] = 1;
  return ProbMeasure(space, std::move(w));
}

ProbMeasure dirac(const SpaceRef& space, const std::string& label) { return dirac(space, space->index_of(label)); }

ProbMeasure pushforward(const MetricMap& phi, const ProbMeasure& mu) {
  if (!same_space(phi.domain(), mu.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "measure does not live on the map's domain");
  }
  std::vector<Rational> w(phi.codomain()->size(), Rational(0));
  for (std::size_t x = 0; x < mu.weights().size(); ++x) w[phi(x)] += mu.weight(x);
  return ProbMeasure(phi.codomain(), std::move(w));
}

ProbMeasure convex_combination(const Rational& t, const ProbMeasure& mu, const ProbMeasure& nu) {
  if (!same_space(mu.space(), nu.space())) throw Error(ErrorCode::kSpaceMismatch, "measures on different spaces");
  if (t < 0 || t > 1) throw Error(ErrorCode::kBadParameters, "convex weight outside [0, 1]");
  std::vector<Rational> w(mu.weights().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = t * mu.weight(i) + (1 - t) * nu.weight(i);
  return ProbMeasure(mu.space(), std::move(w));
}

Rational integrate(const std::vector<Rational>& g, const ProbMeasure& mu) {
  if (g.size() != mu.weights().size()) throw Error(ErrorCode::kSpaceMismatch, "integrand size mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g[i] * mu.weight(i);
  return total;
}

std::pair<Rational, Rational> change_of_variables_check(const MetricMap& phi, const ProbMeasure& mu,
                                                       const std::vector<Rational>& g) {
  if (g.size() != phi.codomain()->size()) {
    throw Error(ErrorCode::kSpaceMismatch, "potential must assign a value to every codomain point");
  }
  Rational pushed = integrate(g, pushforward(phi, mu));
  std::vector<Rational> pulled(phi.domain()->size());
  for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = g[phi(x)];
  return {pushed, integrate(pulled, mu)};
}

bool in_image(const MetricMap& phi, const ProbMeasure& mu) {
  if (!same_space(phi.codomain(), mu.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "measure does not live on the map's codomain");
  }
  Rational on_image = 0;
  for (auto y : phi.image()) on_image += mu.weight(y);
  return on_image == 1;
}

std::optional<ProbMeasure> preimage_witness(const MetricMap& phi, const ProbMeasure& mu) {
  if (!same_space(phi.codomain(), mu.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "measure does not live on the map's codomain");
  }
  std::vector<std::vector<std::size_t>> fibers(phi.codomain()->size());
  for (std::size_t x = 0; x < phi.domain()->size(); ++x) fibers[phi(x)].push_back(x);
  std::vector<Rational> w(phi.domain()->size(), Rational(0));
  for (std::size_t y = 0; y < fibers.size(); ++y) {
    if (mu.weight(y) == 0) continue;
    if (fibers[y].empty()) return std::nullopt;
    Rational share = mu.weight(y) / Rational(static_cast<long>(fibers[y].size()));
    for (auto x : fibers[y]) w[x] = share;
  }
  return ProbMeasure(phi.domain(), std::move(w));
}

namespace {

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool measure_map_injective(const MetricMap& phi, std::pair<std::size_t, std::size_t>* collision) {
  const std::size_t n = phi.domain()->size();
  const std::size_t m = phi.codomain()->size();
  std::vector<std::vector<Rational>> matrix(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t x = 0; x < n; ++x) matrix[phi(x)][x] = 1;
  if (exact_rank(std::move(matrix)) == n) return true;
  if (collision) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (pushforward(phi, dirac(phi.domain(), a)) == pushforward(phi, dirac(phi.domain(), b))) {
          *collision = {a, b};
          return false;
        }
      }
    }
  }
  return false;
}

bool measure_map_surjective(const MetricMap& phi) {
  for (std::size_t y = 0; y < phi.codomain()->size(); ++y) {
    if (!preimage_witness(phi, dirac(phi.codomain(), y))) return false;
  }
  return true;
}

bool injectivity_transfer_check(const MetricMap& phi) { return phi.injective() == measure_map_injective(phi); }

}  // namespace zfun
