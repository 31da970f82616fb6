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

#ifndef ZFUN_STEP_FUNCTION_HPP_
#define ZFUN_STEP_FUNCTION_HPP_

#include <string>
#include <vector>

#include "zfun/metric_space.hpp"

namespace zfun {

// A piecewise-constant function [0,1] -> target: value values[i] on
// [breakpoints[i], breakpoints[i+1]). Always held in canonical form (no two
// adjacent segments share a value), so two step functions are equal almost
// everywhere exactly when they compare equal.
class StepFunction {
 public:
  // Throws Error(kBadParameters) unless 0 = t0 < t1 < ... < tm = 1 and there
  // are m values; Error(kUnknownPoint) for a value outside the target.
  StepFunction(SpaceRef target, std::vector<Rational> breakpoints, std::vector<std::size_t> values);

  static StepFunction from_labels(SpaceRef target, std::vector<Rational> breakpoints,
                                  const std::vector<std::string>& values);

  const SpaceRef& target() const { return target_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t segments() const { return values_.size(); }
  Rational length(std::size_t segment) const { return breakpoints_[segment + 1] - breakpoints_[segment]; }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.values_ == b.values_ && a.breakpoints_ == b.breakpoints_ && same_space(a.target_, b.target_);
  }

 private:
  SpaceRef target_;
  std::vector<Rational> breakpoints_;
  std::vector<std::size_t> values_;
};

// ∫₀¹ d(f(t), g(t)) dt over the common refinement. Throws Error(kTargetMismatch).
Rational integral_metric(const StepFunction& f, const StepFunction& g);

// The constant function with value `point`.
StepFunction dirac_const(const SpaceRef& target, std::size_t point);
StepFunction dirac_const(const SpaceRef& target, const std::string& label);

// f ∘ u. Throws Error(kTargetMismatch) unless u takes values in f's domain.
StepFunction compose_pushforward(const MetricMap& f, const StepFunction& u);

// `point` on [0, 1/n), u on [1/n, 1]. Throws Error(kBadN) for n < 1 and
// Error(kUnknownPoint) for an out-of-range point.
StepFunction phi_n_witness(std::size_t point, long n, const StepFunction& u);

// True when every value of u lies in `allowed` (u belongs to the step space
// over that subset).
bool lies_in_subspace(const StepFunction& u, const std::vector<std::size_t>& allowed);

// A u with f ∘ u = v, choosing the lowest-index preimage on every segment.
// Throws Error(kValueOutsideImage) carrying the first offending segment.
StepFunction select_preimage(const MetricMap& f, const StepFunction& v);

}  // namespace zfun

#endif  // ZFUN_STEP_FUNCTION_HPP_
