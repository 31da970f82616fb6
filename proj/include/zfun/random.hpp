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

#ifndef ZFUN_RANDOM_HPP_
#define ZFUN_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "zfun/measure.hpp"
#include "zfun/step_function.hpp"

namespace zfun {

// All generators draw raw 64-bit words from mt19937_64 and reduce them
// without std:: distributions, so a seed reproduces the same instances on
// every standard library.
using Rng = std::mt19937_64;

std::size_t uniform_index(Rng& rng, std::size_t bound);
std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

// Rational in [0, 1] with denominator at most `max_den`.
Rational random_unit_rational(Rng& rng, unsigned max_den = 12);

// Shortest-path closure of random positive rational edge weights: always a
// valid metric. Labels are prefix + index.
SpaceRef random_space(Rng& rng, std::size_t n, const std::string& prefix = "x");

// Small integer weights normalised to 1; sometimes sparse, never empty.
ProbMeasure random_measure(Rng& rng, const SpaceRef& space);

MetricMap random_map(Rng& rng, const SpaceRef& domain, const SpaceRef& codomain);

// A random metric on the given labels (same construction as random_space).
SpaceRef random_metric_on(Rng& rng, const std::vector<std::string>& labels);

// 1..max_segments segments with breakpoints of denominator <= 16.
StepFunction random_step(Rng& rng, const SpaceRef& target, std::size_t max_segments = 8);

}  // namespace zfun

#endif  // ZFUN_RANDOM_HPP_
