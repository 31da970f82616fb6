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

#include "zfun/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace zfun {
namespace {

std::string describe(const std::vector<std::string>& labels, const std::vector<AxiomViolation>& violations) {
  std::ostringstream out;
  out << "metric axioms violated:";
  for (const auto& v : violations) {
    out << ' ' << axiom_name(v.axiom) << '(';
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ',';
      out << labels[v.witness[i]];
    }
    out << ')';
  }
  return out.str();
}

std::vector<std::size_t> witness_indices(const std::vector<AxiomViolation>& violations) {
  return violations.empty() ? std::vector<std::size_t>{} : violations.front().witness;
}

}  // namespace

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kIdentity: return "identity";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kPositivity: return "positivity";
    case Axiom::kTriangle: return "triangle";
  }
  return "?";
}

AxiomViolationError::AxiomViolationError(std::vector<std::string> labels,
                                         std::vector<AxiomViolation> violations)
    : Error(ErrorCode::kAxiomViolation, describe(labels, violations), witness_indices(violations)),
      labels_(std::move(labels)),
      violations_(std::move(violations)) {}

std::vector<AxiomViolation> find_axiom_violations(const std::vector<std::string>& points,
                                                  const DistanceMatrix& dist,
                                                  const ValidationOptions& options) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::kInvalidMetric, "a metric space needs at least one point");
  if (dist.size() != n) {
    throw Error(ErrorCode::kInvalidMetric, "distance matrix has " + std::to_string(dist.size()) +
                                               " rows for " + std::to_string(n) + " points");
  }
  for (const auto& row : dist) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidMetric, "distance matrix is not square");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(points[i]).second) {
      throw Error(ErrorCode::kInvalidMetric, "duplicate point label \"" + points[i] + "\"", {i});
    }
  }

  const double tol = options.tolerance;
  const bool exact = tol <= 0.0;
  auto value = [&](std::size_t i, std::size_t j) { return to_double(dist[i][j]); };

  std::vector<AxiomViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool bad = exact ? dist[i][i] != 0 : std::abs(value(i, i)) > tol;
    if (bad) out.push_back({Axiom::kIdentity, {i}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool bad = exact ? dist[i][j] != dist[j][i] : std::abs(value(i, j) - value(j, i)) > tol;
      if (bad) out.push_back({Axiom::kSymmetry, {i, j}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dist[i][j] <= 0) out.push_back({Axiom::kPositivity, {i, j}});
    }
  }
  auto violates = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (exact) return dist[a][c] > dist[a][b] + dist[b][c];
    return value(a, c) > value(a, b) + value(b, c) + tol;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (violates(i, j, k) || violates(k, j, i)) out.push_back({Axiom::kTriangle, {i, j, k}});
      }
    }
  }
  return out;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::size_t> FiniteMetricSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMetricSpace::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kUnknownPoint, "unknown point \"" + label + "\"");
}

FiniteMetricSpace validate_space(std::vector<std::string> points, DistanceMatrix dist,
                                 const ValidationOptions& options) {
  auto violations = find_axiom_violations(points, dist, options);
  if (!violations.empty()) throw AxiomViolationError(std::move(points), std::move(violations));
  for (auto& row : dist) {
    for (auto& x : row) x.canonicalize();
  }
  return FiniteMetricSpace(std::move(points), std::move(dist));
}

SpaceRef make_space(std::vector<std::string> points, DistanceMatrix dist, const ValidationOptions& options) {
  return std::make_shared<const FiniteMetricSpace>(validate_space(std::move(points), std::move(dist), options));
}

bool same_space(const SpaceRef& a, const SpaceRef& b) { return a == b || (a && b && *a == *b); }

Rational diameter(const FiniteMetricSpace& space) {
  Rational best = 0;
  for (const auto& row : space.matrix()) {
    for (const auto& x : row) {
      if (x > best) best = x;
    }
  }
  return best;
}

SpaceRef subspace(const SpaceRef& space, const std::vector<std::size_t>& indices) {
  std::vector<std::string> labels;
  DistanceMatrix dist(indices.size(), std::vector<Rational>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    labels.push_back(space->label(indices[a]));
    for (std::size_t b = 0; b < indices.size(); ++b) dist[a][b] = space->distance(indices[a], indices[b]);
  }
  return make_space(std::move(labels), std::move(dist));
}

SpaceRef with_metric(const SpaceRef& space, DistanceMatrix dist) {
  return make_space(space->labels(), std::move(dist));
}

// ---------------------------------------------------------------------------

MetricMap::MetricMap(SpaceRef domain, SpaceRef codomain, std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (!domain_ || !codomain_) throw Error(ErrorCode::kBadParameters, "map needs a domain and a codomain");
  if (assignment_.size() != domain_->size()) {
    throw Error(ErrorCode::kUnknownPoint, "assignment is not total on the domain");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= codomain_->size()) {
      throw Error(ErrorCode::kUnknownPoint, "assigned value outside the codomain", {i});
    }
  }
}

MetricMap MetricMap::from_labels(SpaceRef domain, SpaceRef codomain,
                                 const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> values(domain->size(), codomain->size());
  for (const auto& [from, to] : assignment) values[domain->index_of(from)] = codomain->index_of(to);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == codomain->size()) {
      throw Error(ErrorCode::kUnknownPoint, "no value assigned to \"" + domain->label(i) + "\"", {i});
    }
  }
  return MetricMap(std::move(domain), std::move(codomain), std::move(values));
}

bool MetricMap::injective() const {
  std::vector<bool> hit(codomain_->size(), false);
  for (auto y : assignment_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool MetricMap::surjective() const { return image().size() == codomain_->size(); }

std::vector<std::size_t> MetricMap::image() const {
  std::vector<std::size_t> out(assignment_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const MetricMap& a, const MetricMap& b) {
  return a.assignment_ == b.assignment_ && same_space(a.domain_, b.domain_) &&
         same_space(a.codomain_, b.codomain_);
}

MetricMap identity_map(const SpaceRef& space) {
  std::vector<std::size_t> values(space->size());
  std::iota(values.begin(), values.end(), std::size_t{0});
  return MetricMap(space, space, std::move(values));
}

MetricMap compose(const MetricMap& outer, const MetricMap& inner) {
  if (!same_space(inner.codomain(), outer.domain())) {
    throw Error(ErrorCode::kDomainMismatch, "cannot compose: codomain of the inner map is not the outer domain");
  }
  std::vector<std::size_t> values(inner.assignment().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = outer(inner(i));
  return MetricMap(inner.domain(), outer.codomain(), std::move(values));
}

MetricMap rebase(const MetricMap& map, SpaceRef domain, SpaceRef codomain) {
  if (domain->labels() != map.domain()->labels() || codomain->labels() != map.codomain()->labels()) {
    throw Error(ErrorCode::kDomainMismatch, "rebase needs spaces with the same points");
  }
  return MetricMap(std::move(domain), std::move(codomain), map.assignment());
}

MetricMap inverse(const MetricMap& map) {
  if (map.domain()->size() != map.codomain()->size() || !map.injective()) {
    throw Error(ErrorCode::kBadParameters, "map is not a bijection");
  }
  std::vector<std::size_t> values(map.assignment().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[map(i)] = i;
  return MetricMap(map.codomain(), map.domain(), std::move(values));
}

Rational sup_distance(const MetricMap& f, const MetricMap& g) {
  if (!same_space(f.domain(), g.domain()) || !same_space(f.codomain(), g.codomain())) {
    throw Error(ErrorCode::kDomainMismatch, "sup distance needs maps with a common domain and codomain");
  }
  Rational best = 0;
  for (std::size_t x = 0; x < f.assignment().size(); ++x) {
    const Rational& d = f.codomain()->distance(f(x), g(x));
    if (d > best) best = d;
  }
  return best;
}

void for_each_map(const SpaceRef& domain, const SpaceRef& codomain,
                  const std::function<void(const MetricMap&)>& visit) {
  const std::size_t n = domain->size();
  const std::size_t m = codomain->size();
  std::vector<std::size_t> values(n, 0);
  while (true) {
    visit(MetricMap(domain, codomain, values));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++values[pos] < m) break;
      values[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<MetricMap> all_maps(const SpaceRef& domain, const SpaceRef& codomain) {
  std::vector<MetricMap> out;
  for_each_map(domain, codomain, [&](const MetricMap& f) { out.push_back(f); });
  return out;
}

std::vector<MetricMap> all_permutations(const SpaceRef& space) {
  std::vector<std::size_t> values(space->size());
  std::iota(values.begin(), values.end(), std::size_t{0});
  std::vector<MetricMap> out;
  do {
    out.emplace_back(space, space, values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

// ---------------------------------------------------------------------------

SpaceRef default_anchor() {
  static const SpaceRef anchor = make_space({"0", "1"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  return anchor;
}

DistanceMatrix glue_metric(const FiniteMetricSpace& core, const FiniteMetricSpace& anchor) {
  if (diameter(anchor) != 1) {
    throw Error(ErrorCode::kAnchorDiameterNotOne,
                "anchor diameter is " + to_string(diameter(anchor)) + ", expected 1");
  }
  const std::size_t k = core.size();
  const std::size_t n = k + anchor.size();
  Rational cross = diameter(core);
  if (cross < 1) cross = 1;
  DistanceMatrix dist(n, std::vector<Rational>(n, cross));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) dist[i][j] = core.distance(i, j);
  }
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    for (std::size_t j = 0; j < anchor.size(); ++j) dist[k + i][k + j] = anchor.distance(i, j);
  }
  return dist;
}

GluedSpace glue_space(const SpaceRef& core, const SpaceRef& anchor) {
  DistanceMatrix dist = glue_metric(*core, *anchor);
  std::vector<std::string> labels = core->labels();
  for (const auto& a : anchor->labels()) {
    std::string label = kAnchorPrefix + a;
    while (core->find(label)) label = kAnchorPrefix + label;
    labels.push_back(std::move(label));
  }
  return GluedSpace{make_space(std::move(labels), std::move(dist)), core, anchor};
}

MetricMap glue_map(const MetricMap& f, const GluedSpace& domain, const GluedSpace& codomain) {
  if (!same_space(domain.anchor, codomain.anchor)) {
    throw Error(ErrorCode::kAnchorMismatch, "glued spaces carry different anchors");
  }
  if (!same_space(domain.core, f.domain()) || !same_space(codomain.core, f.codomain())) {
    throw Error(ErrorCode::kDomainMismatch, "glued spaces do not match the map");
  }
  const std::size_t k = f.domain()->size();
  const std::size_t l = f.codomain()->size();
  std::vector<std::size_t> values(domain.space->size());
  for (std::size_t i = 0; i < k; ++i) values[i] = f(i);
  for (std::size_t a = 0; a < domain.anchor->size(); ++a) values[k + a] = l + a;
  return MetricMap(domain.space, codomain.space, std::move(values));
}

MetricMap glue_map(const MetricMap& f, const SpaceRef& anchor) {
  return glue_map(f, glue_space(f.domain(), anchor), glue_space(f.codomain(), anchor));
}

}  // namespace zfun
