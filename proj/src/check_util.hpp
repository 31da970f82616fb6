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

// Helpers shared by the property suites. Not installed.

#ifndef ZFUN_SRC_CHECK_UTIL_HPP_
#define ZFUN_SRC_CHECK_UTIL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "zfun/checks.hpp"
#include "zfun/random.hpp"

namespace zfun::detail {

// Separate, reproducible random streams per property.
inline Rng stream(const RunConfig& config, std::uint64_t salt) {
  return Rng(config.seed * 0x9E3779B97F4A7C15ULL + salt);
}

inline std::vector<std::size_t> all_but(std::size_t n, std::size_t drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != drop) keep.push_back(i);
  }
  return keep;
}

// μ restricted to `keep` (a subspace built from the same indices) and
// renormalised; nullopt when no mass survives.
inline std::optional<ProbMeasure> restrict_measure(const ProbMeasure& mu, const SpaceRef& sub,
                                                   const std::vector<std::size_t>& keep) {
  Rational total = 0;
  for (auto i : keep) total += mu.weight(i);
  if (total == 0) return std::nullopt;
  std::vector<Rational> w;
  for (auto i : keep) w.push_back(mu.weight(i) / total);
  return ProbMeasure(sub, std::move(w));
}

struct MeasurePair {
  ProbMeasure mu;
  ProbMeasure nu;
};

inline std::optional<MeasurePair> drop_point(const MeasurePair& pair, std::size_t i) {
  const auto keep = all_but(pair.mu.space()->size(), i);
  SpaceRef sub = subspace(pair.mu.space(), keep);
  auto mu = restrict_measure(pair.mu, sub, keep);
  auto nu = restrict_measure(pair.nu, sub, keep);
  if (!mu || !nu) return std::nullopt;
  return MeasurePair{*mu, *nu};
}

inline MeasurePair shrink_pair(MeasurePair pair, const std::function<bool(const MeasurePair&)>& fails) {
  return shrink_by_point_removal<MeasurePair>(
      std::move(pair), [](const MeasurePair& p) { return p.mu.space()->size(); }, drop_point, fails);
}

inline Json pair_witness(const MeasurePair& pair) {
  return Json{{"mu", to_json(pair.mu)}, {"nu", to_json(pair.nu)}};
}

inline Json labels_of(const FiniteMetricSpace& space) { return Json(space.labels()); }

inline Json assignment_of(const MetricMap& map) {
  Json a = Json::object();
  for (std::size_t x = 0; x < map.assignment().size(); ++x) a[map.domain()->label(x)] = map.codomain()->label(map(x));
  return a;
}

// Metric scaled by a positive rational; stays a metric.
inline SpaceRef scaled(const SpaceRef& space, const Rational& factor) {
  DistanceMatrix d = space->matrix();
  for (auto& row : d) {
    for (auto& x : row) x *= factor;
  }
  return with_metric(space, std::move(d));
}

// Anchors the gluing checks run against: every one has diameter exactly 1.
std::vector<SpaceRef> test_anchors();

}  // namespace zfun::detail

#endif  // ZFUN_SRC_CHECK_UTIL_HPP_
