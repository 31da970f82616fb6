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

#ifndef ZFUN_SCHEME_HPP_
#define ZFUN_SCHEME_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zfun/metric_space.hpp"

namespace zfun {

// The functor Λ together with the embeddings δ_K : K -> Λ(K).
class LambdaFunctor {
 public:
  virtual ~LambdaFunctor() = default;

  virtual SpaceRef on_space(const SpaceRef& k) const = 0;
  // Λ(f) : Λ(dom f) -> Λ(cod f).
  virtual MetricMap on_map(const MetricMap& f) const = 0;
  virtual MetricMap delta(const SpaceRef& k) const = 0;
  // Λ(d) as a matrix over the points of on_space(k), where d is the metric
  // carried by `k_with_metric`. nullopt when the functor has no metric part.
  virtual std::optional<DistanceMatrix> on_metric(const SpaceRef& /*k_with_metric*/) const { return std::nullopt; }
};

// Λ = gluing with a fixed pad: Λ(K) = K ∪ pad, Λ(f) = f on K and identity on
// the pad, δ_K the inclusion, Λ(d) the glued metric.
class GluingLambda : public LambdaFunctor {
 public:
  // Test hook: when set, on_metric corrupts one distance inside the δ-image
  // (the first K pair becomes its cross distance plus one).
  explicit GluingLambda(SpaceRef pad, bool mutate_metric = false)
      : pad_(std::move(pad)), mutate_metric_(mutate_metric) {}

  SpaceRef on_space(const SpaceRef& k) const override;
  MetricMap on_map(const MetricMap& f) const override;
  MetricMap delta(const SpaceRef& k) const override;
  std::optional<DistanceMatrix> on_metric(const SpaceRef& k_with_metric) const override;

  const SpaceRef& pad() const { return pad_; }

 private:
  SpaceRef pad_;
  bool mutate_metric_;
};

// Ω with its distinguished family K(Ω), the functor Λ and the pair
// isomorphisms H_K : (Λ(K), im δ_K) -> (Ω, K).
struct ContinuationContext {
  SpaceRef ambient;
  std::vector<std::vector<std::size_t>> family;  // ascending ambient indices
  std::vector<SpaceRef> members;                 // subspace of ambient per family entry
  std::shared_ptr<const LambdaFunctor> lambda;
  std::vector<MetricMap> h;                      // h[i] : Λ(members[i]) -> ambient

  // Family entry whose points are exactly `space`'s labels in order.
  std::optional<std::size_t> find_member(const FiniteMetricSpace& space) const;
  // Throws Error(kNotInFamily).
  std::size_t member_index(const FiniteMetricSpace& space) const;
};

struct FixtureOptions {
  bool randomize_h = false;
  bool mutate_lambda_metric = false;
};

// n points with a random metric; family = all k-subsets; Λ = gluing with a
// pad of n−k points at mutual distance 1; H_K = identity on K plus the
// order-preserving bijection pad -> Ω∖K (or random bijections of both parts
// when randomize_h). Requires 1 <= k <= n/2 and a pad of at least two points;
// otherwise throws Error(kBadParameters).
ContinuationContext build_finite_fixture(std::size_t n, std::size_t k, std::uint64_t seed,
                                         const FixtureOptions& options = {});

// The same Ω, family and Λ with freshly drawn random H_K.
ContinuationContext rerandomize_h(const ContinuationContext& ctx, std::uint64_t seed);

struct ContextViolation {
  std::string tag;  // "(Λ1)", "(Λ2)", "(Λ3)", "(Λ4)" or "H"
  std::string message;
};

// Re-verifies the ContinuationContext invariants. Λ1 composition and Λ3 run
// over every map between family members when `exhaustive`, otherwise over
// `samples` seeded random maps. Λ4 is checked with each member's own metric.
std::vector<ContextViolation> verify_context(const ContinuationContext& ctx, bool exhaustive,
                                             std::uint64_t seed = 0, std::size_t samples = 64);

struct ExtensionResult {
  MetricMap original;  // φ : K -> L
  MetricMap bar;       // δ_L⁻¹ ∘ H_L⁻¹ ∘ φ ∘ H_K ∘ δ_K : K -> L
  MetricMap hat;       // H_L ∘ Λ(bar) ∘ H_K⁻¹ : Ω -> Ω
};

// φ's domain and codomain are matched to family members by labels; their
// metrics are ignored. Throws Error(kNotInFamily).
ExtensionResult extend_map(const ContinuationContext& ctx, const MetricMap& phi);

// d̂ = Λ(d̄) ∘ (H_L⁻¹ × H_L⁻¹) with d̄ = d ∘ ((H_L∘δ_L) × (H_L∘δ_L)), where d is
// the metric carried by `l_with_metric`. Returns Ω carrying d̂. Throws
// Error(kNotInFamily), or Error(kInvalidMetric) when d̂ fails the axioms or Λ
// has no metric part.
SpaceRef extend_metric(const ContinuationContext& ctx, const SpaceRef& l_with_metric);

struct IsometryPair {
  Rational map_distance;       // d_sup(ξ, η)
  Rational extended_distance;  // d̂_sup(ξ̂, η̂)
};

std::vector<IsometryPair> extension_isometry_check(const ContinuationContext& ctx, const SpaceRef& l_with_metric,
                                                   const std::vector<std::pair<MetricMap, MetricMap>>& pairs);

struct Decomposition {
  MetricMap u;  // fixes K pointwise
  MetricMap v;  // ĥ|_K extended
};

// h = u ∘ v with v = (h|_K)^ and u = h ∘ v⁻¹. Throws Error(kNotSetwiseInvariant)
// unless h maps K onto K, Error(kBadParameters) unless h is a bijection of Ω.
Decomposition decompose_automorphism(const ContinuationContext& ctx, std::size_t member, const MetricMap& h);

// Restriction of h : Ω -> Ω to the family member (must map it into itself).
MetricMap restrict_to_member(const ContinuationContext& ctx, std::size_t member, const MetricMap& h);

// Every bijection of Ω that preserves member setwise.
std::vector<MetricMap> setwise_automorphisms(const ContinuationContext& ctx, std::size_t member);

}  // namespace zfun

#endif  // ZFUN_SCHEME_HPP_
