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

#include "zfun/scheme.hpp"

#include <algorithm>
#include <numeric>

#include "zfun/random.hpp"

namespace zfun {

SpaceRef GluingLambda::on_space(const SpaceRef& k) const { return glue_space(k, pad_).space; }

MetricMap GluingLambda::on_map(const MetricMap& f) const { return glue_map(f, pad_); }

MetricMap GluingLambda::delta(const SpaceRef& k) const {
  std::vector<std::size_t> values(k->size());
  std::iota(values.begin(), values.end(), std::size_t{0});
  return MetricMap(k, on_space(k), std::move(values));
}

std::optional<DistanceMatrix> GluingLambda::on_metric(const SpaceRef& k_with_metric) const {
  DistanceMatrix d = glue_metric(*k_with_metric, *pad_);
  const std::size_t k = k_with_metric->size();
  if (mutate_metric_ && k >= 2) {
    d[0][1] = d[1][0] = d[0][k] + 1;
  }
  return d;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> ContinuationContext::find_member(const FiniteMetricSpace& space) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i]->labels() == space.labels()) return i;
  }
  return std::nullopt;
}

std::size_t ContinuationContext::member_index(const FiniteMetricSpace& space) const {
  if (auto i = find_member(space)) return *i;
  std::string labels;
  for (const auto& l : space.labels()) labels += (labels.empty() ? "" : ",") + l;
  throw Error(ErrorCode::kNotInFamily, "{" + labels + "} is not a member of the distinguished family");
}

namespace {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> shuffled(std::vector<std::size_t> v, Rng* rng) {
  if (rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(*rng, i)]);
  }
  return v;
}

std::vector<MetricMap> build_h(const ContinuationContext& ctx, Rng* rng) {
  std::vector<MetricMap> h;
  const std::size_t n = ctx.ambient->size();
  for (std::size_t m = 0; m < ctx.members.size(); ++m) {
    const auto& k = ctx.family[m];
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n; ++p) {
      if (!std::binary_search(k.begin(), k.end(), p)) rest.push_back(p);
    }
    SpaceRef lambda_k = ctx.lambda->on_space(ctx.members[m]);
    if (lambda_k->size() != n) throw Error(ErrorCode::kBadParameters, "Λ(K) and Ω differ in size");
    std::vector<std::size_t> core = shuffled(k, rng);
    std::vector<std::size_t> pad = shuffled(rest, rng);
    std::vector<std::size_t> values(core);
    values.insert(values.end(), pad.begin(), pad.end());
    h.emplace_back(lambda_k, ctx.ambient, std::move(values));
  }
  return h;
}

// Ambient index of the i-th point of member m.
std::size_t ambient_index(const ContinuationContext& ctx, std::size_t m, std::size_t i) { return ctx.family[m][i]; }

// Position of an ambient point inside member m, if any.
std::optional<std::size_t> position_in(const ContinuationContext& ctx, std::size_t m, std::size_t p) {
  const auto& k = ctx.family[m];
  auto it = std::lower_bound(k.begin(), k.end(), p);
  if (it == k.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - k.begin());
}

}  // namespace

ContinuationContext build_finite_fixture(std::size_t n, std::size_t k, std::uint64_t seed,
                                         const FixtureOptions& options) {
  if (k < 1 || 2 * k > n) throw Error(ErrorCode::kBadParameters, "fixture needs 1 <= k <= n/2");
  if (n - k < 2) throw Error(ErrorCode::kBadParameters, "fixture pad needs at least two points to have diameter 1");
  if (n > 12) throw Error(ErrorCode::kBadParameters, "fixture limited to n <= 12");

  Rng rng(seed);
  ContinuationContext ctx;
  ctx.ambient = random_space(rng, n, "p");

  std::vector<std::string> pad_labels;
  for (std::size_t i = 0; i < n - k; ++i) pad_labels.push_back("pad" + std::to_string(i));
  DistanceMatrix pad_dist(n - k, std::vector<Rational>(n - k, Rational(1)));
  for (std::size_t i = 0; i < n - k; ++i) pad_dist[i][i] = 0;
  ctx.lambda = std::make_shared<GluingLambda>(make_space(std::move(pad_labels), std::move(pad_dist)),
                                              options.mutate_lambda_metric);

  ctx.family = k_subsets(n, k);
  for (const auto& subset : ctx.family) ctx.members.push_back(subspace(ctx.ambient, subset));
  ctx.h = build_h(ctx, options.randomize_h ? &rng : nullptr);

  // A mutated Λ is meant to be caught later by the checks, not here.
  if (options.mutate_lambda_metric) return ctx;
  if (auto violations = verify_context(ctx, false, seed, 16); !violations.empty()) {
    throw Error(ErrorCode::kInternal, "fixture violates " + violations.front().tag + ": " + violations.front().message);
  }
  return ctx;
}

ContinuationContext rerandomize_h(const ContinuationContext& ctx, std::uint64_t seed) {
  Rng rng(seed);
  ContinuationContext out = ctx;
  out.h = build_h(out, &rng);
  return out;
}

std::vector<ContextViolation> verify_context(const ContinuationContext& ctx, bool exhaustive, std::uint64_t seed,
                                             std::size_t samples) {
  std::vector<ContextViolation> out;
  const auto& lambda = *ctx.lambda;
  const std::size_t n = ctx.ambient->size();

  for (std::size_t m = 0; m < ctx.members.size(); ++m) {
    const SpaceRef& k = ctx.members[m];
    const MetricMap& h = ctx.h[m];
    const MetricMap delta = lambda.delta(k);
    const std::string name = "member " + std::to_string(m);

    if (lambda.on_space(k)->size() != n) out.push_back({"(Λ2)", name + ": |Λ(K)| != |Ω|"});
    if (!delta.injective()) out.push_back({"(Λ2)", name + ": δ_K is not injective"});
    if (delta.image().size() != k->size()) out.push_back({"(Λ2)", name + ": im δ_K has the wrong size"});

    if (!same_space(h.domain(), lambda.on_space(k)) || !same_space(h.codomain(), ctx.ambient) || !h.injective()) {
      out.push_back({"H", name + ": H_K is not a bijection Λ(K) -> Ω"});
    } else {
      std::vector<std::size_t> carried;
      for (std::size_t x = 0; x < k->size(); ++x) carried.push_back(h(delta(x)));
      std::sort(carried.begin(), carried.end());
      if (carried != ctx.family[m]) out.push_back({"H", name + ": H_K(im δ_K) != K"});
    }

    if (!(lambda.on_map(identity_map(k)) == identity_map(lambda.on_space(k)))) {
      out.push_back({"(Λ1)", name + ": Λ(id_K) != id"});
    }

    if (auto metric = lambda.on_metric(k)) {
      for (std::size_t i = 0; i < k->size(); ++i) {
        for (std::size_t j = 0; j < k->size(); ++j) {
          if ((*metric)[delta(i)][delta(j)] != k->distance(i, j)) {
            out.push_back({"(Λ4)", name + ": Λ(d)(δ" + k->label(i) + ", δ" + k->label(j) + ") != d"});
          }
        }
      }
    }
  }

  auto check_map = [&](const MetricMap& f) {
    MetricMap lhs = compose(lambda.on_map(f), lambda.delta(f.domain()));
    MetricMap rhs = compose(lambda.delta(f.codomain()), f);
    if (!(lhs == rhs)) out.push_back({"(Λ3)", "Λ(f)∘δ_K != δ_L∘f"});
  };
  auto check_pair = [&](const MetricMap& f, const MetricMap& g) {
    if (!(lambda.on_map(compose(g, f)) == compose(lambda.on_map(g), lambda.on_map(f)))) {
      out.push_back({"(Λ1)", "Λ(g∘f) != Λ(g)∘Λ(f)"});
    }
  };

  const std::size_t count = ctx.members.size();
  if (exhaustive) {
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        auto fs = all_maps(ctx.members[a], ctx.members[b]);
        for (const auto& f : fs) check_map(f);
        for (std::size_t c = 0; c < count; ++c) {
          auto gs = all_maps(ctx.members[b], ctx.members[c]);
          for (const auto& f : fs) {
            for (const auto& g : gs) check_pair(f, g);
          }
        }
      }
    }
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& ka = ctx.members[uniform_index(rng, count)];
      const auto& kb = ctx.members[uniform_index(rng, count)];
      const auto& kc = ctx.members[uniform_index(rng, count)];
      MetricMap f = random_map(rng, ka, kb);
      MetricMap g = random_map(rng, kb, kc);
      check_map(f);
      check_pair(f, g);
    }
  }
  return out;
}

ExtensionResult extend_map(const ContinuationContext& ctx, const MetricMap& phi) {
  const std::size_t km = ctx.member_index(*phi.domain());
  const std::size_t lm = ctx.member_index(*phi.codomain());
  const SpaceRef& k = ctx.members[km];
  const SpaceRef& l = ctx.members[lm];
  const MetricMap original = rebase(phi, k, l);
  const auto& lambda = *ctx.lambda;
  const MetricMap delta_k = lambda.delta(k);
  const MetricMap delta_l = lambda.delta(l);
  const MetricMap& h_k = ctx.h[km];
  const MetricMap& h_l = ctx.h[lm];
  const MetricMap h_l_inv = inverse(h_l);

  // δ_L⁻¹ on Λ(L): only defined on im δ_L.
  std::vector<std::size_t> delta_l_inv(delta_l.codomain()->size(), l->size());
  for (std::size_t y = 0; y < l->size(); ++y) delta_l_inv[delta_l(y)] = y;

  std::vector<std::size_t> bar_values(k->size());
  for (std::size_t x = 0; x < k->size(); ++x) {
    const std::size_t in_omega = h_k(delta_k(x));
    const auto in_k = position_in(ctx, km, in_omega);
    if (!in_k) throw Error(ErrorCode::kInternal, "H_K does not carry im δ_K into K");
    const std::size_t image = ambient_index(ctx, lm, original(*in_k));
    const std::size_t back = delta_l_inv[h_l_inv(image)];
    if (back == l->size()) throw Error(ErrorCode::kInternal, "H_L⁻¹(L) leaves im δ_L");
    bar_values[x] = back;
  }
  MetricMap bar(k, l, std::move(bar_values));
  MetricMap hat = compose(h_l, compose(lambda.on_map(bar), inverse(h_k)));
  return ExtensionResult{original, std::move(bar), std::move(hat)};
}

SpaceRef extend_metric(const ContinuationContext& ctx, const SpaceRef& l_with_metric) {
  const std::size_t lm = ctx.member_index(*l_with_metric);
  const SpaceRef& l = ctx.members[lm];
  const auto& lambda = *ctx.lambda;
  const MetricMap delta_l = lambda.delta(l);
  const MetricMap& h_l = ctx.h[lm];

  // σ = H_L ∘ δ_L as a permutation of L.
  std::vector<std::size_t> sigma(l->size());
  for (std::size_t x = 0; x < l->size(); ++x) {
    auto pos = position_in(ctx, lm, h_l(delta_l(x)));
    if (!pos) throw Error(ErrorCode::kInternal, "H_L does not carry im δ_L into L");
    sigma[x] = *pos;
  }
  DistanceMatrix bar(l->size(), std::vector<Rational>(l->size()));
  for (std::size_t x = 0; x < l->size(); ++x) {
    for (std::size_t y = 0; y < l->size(); ++y) bar[x][y] = l_with_metric->distance(sigma[x], sigma[y]);
  }
  auto lambda_bar = lambda.on_metric(with_metric(l, std::move(bar)));
  if (!lambda_bar) throw Error(ErrorCode::kInvalidMetric, "Λ has no action on metrics");

  const MetricMap h_l_inv = inverse(h_l);
  const std::size_t n = ctx.ambient->size();
  DistanceMatrix hat(n, std::vector<Rational>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) hat[p][q] = (*lambda_bar)[h_l_inv(p)][h_l_inv(q)];
  }
  auto violations = find_axiom_violations(ctx.ambient->labels(), hat);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidMetric,
                std::string("extended metric violates the ") + axiom_name(violations.front().axiom) + " axiom",
                violations.front().witness);
  }
  return make_space(ctx.ambient->labels(), std::move(hat));
}

std::vector<IsometryPair> extension_isometry_check(const ContinuationContext& ctx, const SpaceRef& l_with_metric,
                                                   const std::vector<std::pair<MetricMap, MetricMap>>& pairs) {
  SpaceRef extended = extend_metric(ctx, l_with_metric);
  std::vector<IsometryPair> out;
  for (const auto& [xi, eta] : pairs) {
    if (xi.codomain()->labels() != l_with_metric->labels() || eta.codomain()->labels() != l_with_metric->labels()) {
      throw Error(ErrorCode::kDomainMismatch, "maps must take values in L");
    }
    if (xi.domain()->labels() != eta.domain()->labels()) {
      throw Error(ErrorCode::kDomainMismatch, "maps must share a domain");
    }
    IsometryPair pair;
    pair.map_distance = sup_distance(rebase(xi, xi.domain(), l_with_metric), rebase(eta, xi.domain(), l_with_metric));
    MetricMap xi_hat = extend_map(ctx, xi).hat;
    MetricMap eta_hat = extend_map(ctx, eta).hat;
    pair.extended_distance = sup_distance(rebase(xi_hat, extended, extended), rebase(eta_hat, extended, extended));
    out.push_back(std::move(pair));
  }
  return out;
}

MetricMap restrict_to_member(const ContinuationContext& ctx, std::size_t member, const MetricMap& h) {
  const SpaceRef& k = ctx.members.at(member);
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < k->size(); ++i) {
    auto pos = position_in(ctx, member, h(ambient_index(ctx, member, i)));
    if (!pos) {
      throw Error(ErrorCode::kNotSetwiseInvariant, "h moves " + k->label(i) + " out of K", {i});
    }
    values.push_back(*pos);
  }
  return MetricMap(k, k, std::move(values));
}

Decomposition decompose_automorphism(const ContinuationContext& ctx, std::size_t member, const MetricMap& h) {
  if (h.domain()->labels() != ctx.ambient->labels() || h.codomain()->labels() != ctx.ambient->labels()) {
    throw Error(ErrorCode::kDomainMismatch, "h must act on the ambient space");
  }
  if (!h.injective()) throw Error(ErrorCode::kBadParameters, "h is not a bijection");
  MetricMap on_ambient = rebase(h, ctx.ambient, ctx.ambient);
  MetricMap restricted = restrict_to_member(ctx, member, on_ambient);
  if (!restricted.injective()) throw Error(ErrorCode::kNotSetwiseInvariant, "h(K) != K");
  MetricMap v = extend_map(ctx, restricted).hat;
  MetricMap u = compose(on_ambient, inverse(v));
  return Decomposition{std::move(u), std::move(v)};
}

std::vector<MetricMap> setwise_automorphisms(const ContinuationContext& ctx, std::size_t member) {
  std::vector<MetricMap> out;
  for (auto& h : all_permutations(ctx.ambient)) {
    bool keeps = true;
    for (auto p : ctx.family.at(member)) {
      if (!position_in(ctx, member, h(p))) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace zfun
