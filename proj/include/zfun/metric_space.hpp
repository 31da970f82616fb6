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

#ifndef ZFUN_METRIC_SPACE_HPP_
#define ZFUN_METRIC_SPACE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zfun/error.hpp"
#include "zfun/rational.hpp"

namespace zfun {

using DistanceMatrix = std::vector<std::vector<Rational>>;

enum class Axiom { kIdentity, kSymmetry, kPositivity, kTriangle };

const char* axiom_name(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  // (i) for identity, (i, j) for symmetry and positivity, (i, j, k) for the
  // triangle d(i,k) <= d(i,j) + d(j,k).
  std::vector<std::size_t> witness;
};

class AxiomViolationError : public Error {
 public:
  AxiomViolationError(std::vector<std::string> labels, std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<AxiomViolation> violations_;
};

struct ValidationOptions {
  // 0 means exact comparison; float mode uses 1e-9.
  double tolerance = 0.0;
};

// Returns every violated axiom (empty for a metric). Structural problems
// (empty, non-square, duplicate labels) throw Error(kInvalidMetric).
std::vector<AxiomViolation> find_axiom_violations(const std::vector<std::string>& points,
                                                  const DistanceMatrix& dist,
                                                  const ValidationOptions& options = {});

// A nonempty labelled point set with a validated metric. Immutable.
class FiniteMetricSpace {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const DistanceMatrix& matrix() const { return dist_; }
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  std::optional<std::size_t> find(const std::string& label) const;
  // Throws Error(kUnknownPoint).
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  friend FiniteMetricSpace validate_space(std::vector<std::string>, DistanceMatrix,
                                          const ValidationOptions&);
  FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist);

  std::vector<std::string> labels_;
  DistanceMatrix dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpaceRef = std::shared_ptr<const FiniteMetricSpace>;

// Throws AxiomViolationError listing every violation.
FiniteMetricSpace validate_space(std::vector<std::string> points, DistanceMatrix dist,
                                 const ValidationOptions& options = {});
SpaceRef make_space(std::vector<std::string> points, DistanceMatrix dist,
                    const ValidationOptions& options = {});

bool same_space(const SpaceRef& a, const SpaceRef& b);

Rational diameter(const FiniteMetricSpace& space);

// The induced metric on the points at `indices` (kept in the given order).
SpaceRef subspace(const SpaceRef& space, const std::vector<std::size_t>& indices);

// The same point set carrying another metric.
SpaceRef with_metric(const SpaceRef& space, DistanceMatrix dist);

// A total assignment between the points of two finite metric spaces.
class MetricMap {
 public:
  // Throws Error(kUnknownPoint) when an assigned index is out of range or the
  // assignment is not total.
  MetricMap(SpaceRef domain, SpaceRef codomain, std::vector<std::size_t> assignment);

  static MetricMap from_labels(SpaceRef domain, SpaceRef codomain,
                               const std::map<std::string, std::string>& assignment);

  const SpaceRef& domain() const { return domain_; }
  const SpaceRef& codomain() const { return codomain_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t i) const { return assignment_[i]; }

  bool injective() const;
  bool surjective() const;
  // Codomain indices hit by the map, ascending.
  std::vector<std::size_t> image() const;

  friend bool operator==(const MetricMap& a, const MetricMap& b);

 private:
  SpaceRef domain_;
  SpaceRef codomain_;
  std::vector<std::size_t> assignment_;
};

MetricMap identity_map(const SpaceRef& space);

// outer ∘ inner. Throws Error(kDomainMismatch) when inner's codomain is not
// outer's domain.
MetricMap compose(const MetricMap& outer, const MetricMap& inner);

// The same assignment between spaces with the same labels (typically the same
// point sets carrying other metrics). Throws Error(kDomainMismatch).
MetricMap rebase(const MetricMap& map, SpaceRef domain, SpaceRef codomain);

// Inverse of a bijection. Throws Error(kBadParameters) otherwise.
MetricMap inverse(const MetricMap& map);

// max_x d(f(x), g(x)) in the codomain metric.
Rational sup_distance(const MetricMap& f, const MetricMap& g);

// Every map domain -> codomain, in lexicographic order of assignments.
void for_each_map(const SpaceRef& domain, const SpaceRef& codomain,
                  const std::function<void(const MetricMap&)>& visit);
std::vector<MetricMap> all_maps(const SpaceRef& domain, const SpaceRef& codomain);
// Every bijection of a space onto itself, lexicographic.
std::vector<MetricMap> all_permutations(const SpaceRef& space);

// ---------------------------------------------------------------------------
// Gluing: K ∪ anchor, anchor kept as-is, cross distances max(diam K, 1).

inline constexpr const char* kAnchorPrefix = "ω:";

// The two-point anchor {ω:0, ω:1} at distance 1.
SpaceRef default_anchor();

struct GluedSpace {
  SpaceRef space;   // K points first (same order), then the anchor points
  SpaceRef core;    // K
  SpaceRef anchor;  // the anchor as supplied
  std::size_t anchor_offset() const { return core->size(); }
};

// Throws Error(kAnchorDiameterNotOne).
GluedSpace glue_space(const SpaceRef& core, const SpaceRef& anchor);
DistanceMatrix glue_metric(const FiniteMetricSpace& core, const FiniteMetricSpace& anchor);

// f on K, identity on the anchor.
MetricMap glue_map(const MetricMap& f, const SpaceRef& anchor);
// As above with explicit glued spaces; throws Error(kAnchorMismatch) when they
// carry different anchors and Error(kDomainMismatch) when their cores are not
// f's domain and codomain.
MetricMap glue_map(const MetricMap& f, const GluedSpace& domain, const GluedSpace& codomain);

}  // namespace zfun

#endif  // ZFUN_METRIC_SPACE_HPP_
