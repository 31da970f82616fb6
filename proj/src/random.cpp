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

#include "zfun/random.hpp"

#include <algorithm>

namespace zfun {

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  if (bound == 0) throw Error(ErrorCode::kBadParameters, "empty range");
  return static_cast<std::size_t>(rng() % bound);
}

std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_index(rng, hi - lo + 1);
}

Rational random_unit_rational(Rng& rng, unsigned max_den) {
  const auto den = static_cast<long>(uniform_between(rng, 1, max_den));
  const auto num = static_cast<long>(uniform_between(rng, 0, static_cast<std::size_t>(den)));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

SpaceRef random_space(Rng& rng, std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return random_metric_on(rng, labels);
}

SpaceRef random_metric_on(Rng& rng, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational w(static_cast<long>(uniform_between(rng, 1, 10)), static_cast<long>(uniform_between(rng, 1, 4)));
      w.canonicalize();
      dist[i][j] = dist[j][i] = w;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
      }
    }
  }
  return make_space(labels, std::move(dist));
}

ProbMeasure random_measure(Rng& rng, const SpaceRef& space) {
  const std::size_t n = space->size();
  const bool sparse = uniform_index(rng, 3) == 0;
  std::vector<long> raw(n, 0);
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sparse && uniform_index(rng, 2) == 0) continue;
    raw[i] = static_cast<long>(uniform_index(rng, 7));
    total += raw[i];
  }
  if (total == 0) {
    raw[uniform_index(rng, n)] = 1;
    total = 1;
  }
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = Rational(raw[i], total);
    w[i].canonicalize();
  }
  return ProbMeasure(space, std::move(w));
}

MetricMap random_map(Rng& rng, const SpaceRef& domain, const SpaceRef& codomain) {
  std::vector<std::size_t> values(domain->size());
  for (auto& v : values) v = uniform_index(rng, codomain->size());
  return MetricMap(domain, codomain, std::move(values));
}

StepFunction random_step(Rng& rng, const SpaceRef& target, std::size_t max_segments) {
  const std::size_t segments = uniform_between(rng, 1, max_segments);
  std::vector<Rational> cuts;
  for (std::size_t i = 1; i < segments; ++i) {
    const auto den = static_cast<long>(uniform_between(rng, 2, 16));
    const auto num = static_cast<long>(uniform_between(rng, 1, static_cast<std::size_t>(den - 1)));
    Rational t(num, den);
    t.canonicalize();
    cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> breaks{Rational(0)};
  breaks.insert(breaks.end(), cuts.begin(), cuts.end());
  breaks.push_back(Rational(1));
  std::vector<std::size_t> values(breaks.size() - 1);
  for (auto& v : values) v = uniform_index(rng, target->size());
  return StepFunction(target, std::move(breaks), std::move(values));
}

}  // namespace zfun
