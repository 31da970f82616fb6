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

#ifndef ZFUN_MEASURE_HPP_
#define ZFUN_MEASURE_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zfun/metric_space.hpp"

namespace zfun {

// A probability measure on a finite space. Weights are stored densely with
// one exact entry per point, so a zero entry and an omitted key are the same
// thing and operator== compares canonical forms.
class ProbMeasure {
 public:
  // Throws Error(kInvalidMeasure) for negative weights or total != 1 and
  // Error(kSpaceMismatch) for a length mismatch.
  ProbMeasure(SpaceRef space, std::vector<Rational> weights);

  // Missing labels get weight 0; unknown labels throw Error(kUnknownPoint).
  static ProbMeasure from_labels(SpaceRef space, const std::map<std::string, Rational>& weights);

  const SpaceRef& space() const { return space_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const ProbMeasure& a, const ProbMeasure& b) {
    return a.weights_ == b.weights_ && same_space(a.space_, b.space_);
  }

 private:
  SpaceRef space_;
  std::vector<Rational> weights_;
};

ProbMeasure dirac(const SpaceRef& space, std::size_t point);
ProbMeasure dirac(const SpaceRef& space, const std::string& label);

// (M(φ)μ)(y) = μ(φ⁻¹(y)). Throws Error(kSpaceMismatch) unless μ lives on φ's domain.
ProbMeasure pushforward(const MetricMap& phi, const ProbMeasure& mu);

// t·μ + (1−t)·ν for t in [0, 1].
ProbMeasure convex_combination(const Rational& t, const ProbMeasure& mu, const ProbMeasure& nu);

// ∫ g dμ, one value of g per point of μ's space.
Rational integrate(const std::vector<Rational>& g, const ProbMeasure& mu);

// (∫ g d(M(φ)μ), ∫ g∘φ dμ); the two components agree.
std::pair<Rational, Rational> change_of_variables_check(const MetricMap& phi, const ProbMeasure& mu,
                                                       const std::vector<Rational>& g);

// True iff μ(im φ) = 1. μ must live on φ's codomain.
bool in_image(const MetricMap& phi, const ProbMeasure& mu);

// A measure ν on φ's domain with M(φ)ν = μ, built by splitting each image
// point's weight uniformly over its preimages; nullopt when some weight sits
// outside im φ.
std::optional<ProbMeasure> preimage_witness(const MetricMap& phi, const ProbMeasure& mu);

// Injectivity of μ ↦ M(φ)μ on the simplex, decided through the rank of the
// pushforward matrix. On failure `collision` receives two distinct domain
// points whose Diracs have the same image.
bool measure_map_injective(const MetricMap& phi, std::pair<std::size_t, std::size_t>* collision = nullptr);

// Surjectivity of μ ↦ M(φ)μ onto the codomain simplex: every vertex must be
// reachable through preimage_witness.
bool measure_map_surjective(const MetricMap& phi);

// φ injective ⇔ M(φ) injective.
bool injectivity_transfer_check(const MetricMap& phi);

}  // namespace zfun

#endif  // ZFUN_MEASURE_HPP_
