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

#include "zfun/step_function.hpp"

#include <algorithm>

namespace zfun {

StepFunction::StepFunction(SpaceRef target, std::vector<Rational> breakpoints, std::vector<std::size_t> values)
    : target_(std::move(target)) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size()) {
    throw Error(ErrorCode::kBadParameters, "step function needs m+1 breakpoints for m values");
  }
  for (auto& t : breakpoints) t.canonicalize();
  if (breakpoints.front() != 0 || breakpoints.back() != 1) {
    throw Error(ErrorCode::kBadParameters, "breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw Error(ErrorCode::kBadParameters, "breakpoints must be strictly increasing", {i + 1});
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= target_->size()) throw Error(ErrorCode::kUnknownPoint, "segment value outside target", {i});
  }
  breakpoints_.push_back(breakpoints.front());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values_.empty() && values_.back() == values[i]) {
      breakpoints_.back() = breakpoints[i + 1];
      continue;
    }
    values_.push_back(values[i]);
    breakpoints_.push_back(breakpoints[i + 1]);
  }
}

StepFunction StepFunction::from_labels(SpaceRef target, std::vector<Rational> breakpoints,
                                       const std::vector<std::string>& values) {
  std::vector<std::size_t> idx;
  for (const auto& v : values) idx.push_back(target->index_of(v));
  return StepFunction(std::move(target), std::move(breakpoints), std::move(idx));
}

Rational integral_metric(const StepFunction& f, const StepFunction& g) {
  if (!same_space(f.target(), g.target())) {
    throw Error(ErrorCode::kTargetMismatch, "step functions take values in different spaces");
  }
  const auto& space = *f.target();
  Rational total = 0;
  Rational left = 0;
  std::size_t a = 0, b = 0;
  while (a < f.segments() && b < g.segments()) {
    const Rational& right_a = f.breakpoints()[a + 1];
    const Rational& right_b = g.breakpoints()[b + 1];
    const Rational right = right_a < right_b ? right_a : right_b;
    total += (right - left) * space.distance(f.values()[a], g.values()[b]);
    left = right;
    if (right_a == right) ++a;
    if (right_b == right) ++b;
  }
  total.canonicalize();
  return total;
}

StepFunction dirac_const(const SpaceRef& target, std::size_t point) {
  return StepFunction(target, {Rational(0), Rational(1)}, {point});
}

StepFunction dirac_const(const SpaceRef& target, const std::string& label) {
  return dirac_const(target, target->index_of(label));
}

StepFunction compose_pushforward(const MetricMap& f, const StepFunction& u) {
  if (!same_space(f.domain(), u.target())) {
    throw Error(ErrorCode::kTargetMismatch, "step function does not take values in the map's domain");
  }
  std::vector<std::size_t> values;
  values.reserve(u.segments());
  for (auto v : u.values()) values.push_back(f(v));
  return StepFunction(f.codomain(), u.breakpoints(), std::move(values));
}

StepFunction phi_n_witness(std::size_t point, long n, const StepFunction& u) {
  if (n < 1) throw Error(ErrorCode::kBadN, "n must be a positive integer");
  if (point >= u.target()->size()) throw Error(ErrorCode::kUnknownPoint, "witness point outside target", {point});
  const Rational cut(1, n);
  std::vector<Rational> breaks{Rational(0)};
  std::vector<std::size_t> values{point};
  if (cut < 1) {
    breaks.push_back(cut);
    for (std::size_t i = 0; i < u.segments(); ++i) {
      if (u.breakpoints()[i + 1] <= cut) continue;
      values.push_back(u.values()[i]);
      breaks.push_back(u.breakpoints()[i + 1]);
    }
  } else {
    breaks.push_back(Rational(1));
  }
  return StepFunction(u.target(), std::move(breaks), std::move(values));
}

bool lies_in_subspace(const StepFunction& u, const std::vector<std::size_t>& allowed) {
  return std::all_of(u.values().begin(), u.values().end(), [&](std::size_t v) {
    return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
  });
}

StepFunction select_preimage(const MetricMap& f, const StepFunction& v) {
  if (!same_space(f.codomain(), v.target())) {
    throw Error(ErrorCode::kTargetMismatch, "step function does not take values in the map's codomain");
  }
  const std::size_t none = f.domain()->size();
  std::vector<std::size_t> first_preimage(f.codomain()->size(), none);
  for (std::size_t x = 0; x < f.domain()->size(); ++x) {
    if (first_preimage[f(x)] == none) first_preimage[f(x)] = x;
  }
  std::vector<std::size_t> values;
  for (std::size_t s = 0; s < v.segments(); ++s) {
    std::size_t x = first_preimage[v.values()[s]];
    if (x == none) {
      throw Error(ErrorCode::kValueOutsideImage,
                  "segment " + std::to_string(s) + " takes value \"" + v.target()->label(v.values()[s]) +
                      "\" outside the image",
                  {s});
    }
    values.push_back(x);
  }
  return StepFunction(f.domain(), v.breakpoints(), std::move(values));
}

}  // namespace zfun
