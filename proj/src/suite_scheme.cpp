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

#include <algorithm>
#include <map>
#include <set>

#include "check_util.hpp"
#include "zfun/scheme.hpp"

namespace zfun {

using detail::assignment_of;
using detail::stream;

namespace {

struct SchemeRecords {
  CheckRecord l1{"Λ preserves identities and composition on the fixture", "(Λ1)"};
  CheckRecord l2{"|Λ(K)| = |Ω| and im δ_K is a distinguished subset", "(Λ2)"};
  CheckRecord l3{"Λ(f) ∘ δ_K = δ_L ∘ f", "(Λ3)"};
  CheckRecord l4{"Λ(d) ∘ (δ_K × δ_K) = d", "(Λ4)"};
  CheckRecord l5{"Λ is isometric on map spaces", "(Λ5)"};
  CheckRecord pairs{"H_K is a bijection with H_K(im δ_K) = K", "plumbing"};
  CheckRecord a{"extension preserves identities, composition and bijections", "(a)"};
  CheckRecord psi{"Ψ: h ↦ ĥ is a homomorphism Bij(K) -> Bij(Ω)", "(a)"};
  CheckRecord corollary{"h ↦ (h ∘ Ψ(h|K)⁻¹, Ψ(h|K)) inverts composition", "(a)"};
  CheckRecord b{"φ̂ restricted to K is φ", "(b)"};
  CheckRecord c{"φ injective iff φ̂ injective", "(c)"};
  CheckRecord d{"im φ̂ ∩ L = im φ", "(d)"};
  CheckRecord e{"φ surjective onto L iff φ̂ surjective", "(e)"};
  CheckRecord h{"φ_j -> φ pointwise gives φ̂_j -> φ̂ with d̂_sup = d_sup", "(h)"};
  CheckRecord i_metric{"d̂ is a metric extending d with diam max(1, diam L)", "(i)"};
  CheckRecord i_iso{"ξ ↦ ξ̂ is isometric for d_sup and d̂_sup", "(i)"};

  void move_into(std::vector<CheckRecord>& out) {
    for (CheckRecord* r : {&l1, &l2, &l3, &l4, &l5, &pairs, &a, &psi, &corollary, &b, &c, &d, &e, &h, &i_metric,
                           &i_iso}) {
      out.push_back(std::move(*r));
    }
  }
};

Json fixture_json(const ContinuationContext& ctx, const std::string& label) {
  return Json{{"fixture", label}, {"n", ctx.ambient->size()}, {"k", ctx.family.front().size()}};
}

Json with(Json base, const std::string& key, Json value) {
  base[key] = std::move(value);
  return base;
}

void context_invariants(const ContinuationContext& ctx, bool exhaustive, std::uint64_t seed, std::size_t samples,
                        const Json& where, SchemeRecords& r) {
  std::map<CheckRecord*, std::vector<std::string>> found;
  for (const auto& v : verify_context(ctx, exhaustive, seed, samples)) {
    CheckRecord* rec = v.tag == "(Λ1)"   ? &r.l1
                       : v.tag == "(Λ2)" ? &r.l2
                       : v.tag == "(Λ3)" ? &r.l3
                       : v.tag == "(Λ4)" ? &r.l4
                                         : &r.pairs;
    found[rec].push_back(v.message);
  }
  // One instance per fixture and invariant.
  for (CheckRecord* rec : {&r.l1, &r.l2, &r.l3, &r.l4, &r.pairs}) {
    rec->count();
    auto it = found.find(rec);
    if (it != found.end()) {
      rec->fail(it->second.front(), with(where, "violations", it->second.size()));
    }
  }
}

// Λ(K) carrying Λ(d_K), where d_K is the metric K inherits from Ω.
SpaceRef lambda_with_metric(const ContinuationContext& ctx, const SpaceRef& k) {
  auto m = ctx.lambda->on_metric(k);
  if (!m) throw Error(ErrorCode::kInvalidMetric, "Λ has no action on metrics");
  return with_metric(ctx.lambda->on_space(k), std::move(*m));
}

std::vector<std::size_t> ambient_image(const ContinuationContext& ctx, std::size_t l, const MetricMap& phi) {
  std::vector<std::size_t> out;
  for (auto y : phi.image()) out.push_back(ctx.family[l][y]);
  return out;
}

// Properties of a single φ : K -> L.
void single_map(const ContinuationContext& ctx, std::size_t km, std::size_t lm, const MetricMap& phi,
                const Json& where, SchemeRecords& r) {
  const MetricMap hat = extend_map(ctx, phi).hat;
  const auto witness = [&] { return with(with(where, "phi", assignment_of(phi)), "hat", assignment_of(hat)); };

  r.b.count();
  bool restricts = true;
  for (std::size_t x = 0; x < phi.domain()->size(); ++x) {
    restricts = restricts && hat(ctx.family[km][x]) == ctx.family[lm][phi(x)];
  }
  if (!restricts) r.b.fail("φ̂ does not extend φ", witness());

  r.c.count();
  if (phi.injective() != hat.injective()) r.c.fail("injectivity differs", witness());
  r.e.count();
  if (phi.surjective() != hat.surjective()) r.e.fail("surjectivity differs", witness());

  r.d.count();
  std::vector<std::size_t> met;
  const auto& l = ctx.family[lm];
  for (auto p : hat.image()) {
    if (std::binary_search(l.begin(), l.end(), p)) met.push_back(p);
  }
  if (met != ambient_image(ctx, lm, phi)) r.d.fail("im φ̂ ∩ L differs from im φ", witness());

  r.a.count();
  if (phi.injective() && !hat.injective()) r.a.fail("bijection not carried to a bijection", witness());
}

void composition(const ContinuationContext& ctx, const MetricMap& phi, const MetricMap& psi, const Json& where,
                 SchemeRecords& r) {
  r.a.count();
  const MetricMap lhs = extend_map(ctx, compose(psi, phi)).hat;
  const MetricMap rhs = compose(extend_map(ctx, psi).hat, extend_map(ctx, phi).hat);
  if (!(lhs == rhs)) {
    r.a.fail("(ψ∘φ)^ != ψ̂ ∘ φ̂", with(with(where, "phi", assignment_of(phi)), "psi", assignment_of(psi)));
  }
}

void identities(const ContinuationContext& ctx, const Json& where, SchemeRecords& r) {
  for (const auto& k : ctx.members) {
    r.a.count();
    if (!(extend_map(ctx, identity_map(k)).hat == identity_map(ctx.ambient))) {
      r.a.fail("id_K does not extend to id_Ω", with(where, "K", detail::labels_of(*k)));
    }
  }
}

void lambda_isometry(const ContinuationContext& ctx, const MetricMap& f, const MetricMap& g, const Json& where,
                     SchemeRecords& r) {
  r.l5.count();
  try {
    SpaceRef lk = lambda_with_metric(ctx, f.domain());
    SpaceRef ll = lambda_with_metric(ctx, f.codomain());
    const Rational lifted =
        sup_distance(rebase(ctx.lambda->on_map(f), lk, ll), rebase(ctx.lambda->on_map(g), lk, ll));
    if (lifted != sup_distance(f, g)) {
      r.l5.fail("d_sup(Λf, Λg) != d_sup(f, g)", with(with(where, "f", assignment_of(f)), "g", assignment_of(g)));
    }
  } catch (const Error& err) {
    r.l5.fail(std::string("Λ(d) unusable: ") + err.what(), where);
  }
}

void metric_extension(const ContinuationContext& ctx, const Json& where, SchemeRecords& r) {
  for (const auto& l : ctx.members) {
    for (const Rational& factor : {ratio(1, 4), Rational(1), Rational(3)}) {
      SpaceRef scaled = detail::scaled(l, factor);
      r.i_metric.count();
      try {
        SpaceRef hat = extend_metric(ctx, scaled);
        bool ok = diameter(*hat) == std::max(Rational(1), diameter(*scaled));
        const auto& idx = ctx.family[ctx.member_index(*l)];
        for (std::size_t x = 0; ok && x < idx.size(); ++x) {
          for (std::size_t y = 0; ok && y < idx.size(); ++y) ok = hat->distance(idx[x], idx[y]) == scaled->distance(x, y);
        }
        if (!ok) r.i_metric.fail("d̂ does not extend d or has the wrong diameter", with(where, "L", to_json(*scaled)));
      } catch (const Error& err) {
        r.i_metric.fail(std::string("extension failed: ") + err.what(), with(where, "L", to_json(*scaled)));
      }
    }
  }
}

void isometry_pairs(const ContinuationContext& ctx, const std::vector<std::pair<MetricMap, MetricMap>>& pairs,
                    const Json& where, SchemeRecords& r) {
  std::map<std::size_t, std::vector<std::pair<MetricMap, MetricMap>>> by_target;
  for (const auto& p : pairs) by_target[ctx.member_index(*p.first.codomain())].push_back(p);
  for (const auto& [lm, group] : by_target) {
    r.i_iso.count(group.size());
    try {
      const auto result = extension_isometry_check(ctx, ctx.members[lm], group);
      for (std::size_t j = 0; j < group.size(); ++j) {
        if (result[j].map_distance != result[j].extended_distance) {
          r.i_iso.fail("d̂_sup(ξ̂, η̂) != d_sup(ξ, η)",
                       with(with(where, "xi", assignment_of(group[j].first)), "eta", assignment_of(group[j].second)));
        }
      }
    } catch (const Error& err) {
      r.i_iso.fail(std::string("extension failed: ") + err.what(), where);
    }
  }
}

// φ_j agrees with φ on the first j points and with `start` elsewhere.
void convergence(const ContinuationContext& ctx, const MetricMap& start, const MetricMap& phi, const Json& where,
                 SchemeRecords& r) {
  const std::size_t lm = ctx.member_index(*phi.codomain());
  std::vector<std::pair<MetricMap, MetricMap>> seq;
  for (std::size_t j = 0; j <= phi.domain()->size(); ++j) {
    std::vector<std::size_t> a = start.assignment();
    for (std::size_t x = 0; x < j; ++x) a[x] = phi(x);
    seq.emplace_back(MetricMap(phi.domain(), phi.codomain(), a), phi);
  }
  r.h.count();
  try {
    const auto result = extension_isometry_check(ctx, ctx.members[lm], seq);
    bool ok = result.back().extended_distance == 0;
    for (const auto& p : result) ok = ok && p.extended_distance == p.map_distance;
    if (!ok) r.h.fail("φ̂_j does not track φ_j", with(with(where, "phi", assignment_of(phi)), "start", assignment_of(start)));
  } catch (const Error& err) {
    r.h.fail(std::string("extension failed: ") + err.what(), where);
  }
}

void psi_homomorphism(const ContinuationContext& ctx, const Json& where, SchemeRecords& r) {
  for (const auto& k : ctx.members) {
    const auto perms = all_permutations(k);
    for (const auto& h1 : perms) {
      for (const auto& h2 : perms) {
        r.psi.count();
        if (!(extend_map(ctx, compose(h1, h2)).hat == compose(extend_map(ctx, h1).hat, extend_map(ctx, h2).hat))) {
          r.psi.fail("Ψ(h₁∘h₂) != Ψ(h₁)∘Ψ(h₂)", with(with(where, "h1", assignment_of(h1)), "h2", assignment_of(h2)));
        }
      }
    }
  }
}

void decomposition(const ContinuationContext& ctx, const Json& where, SchemeRecords& r) {
  for (std::size_t m = 0; m < ctx.members.size(); ++m) {
    const auto& kset = ctx.family[m];
    const auto setwise = setwise_automorphisms(ctx, m);
    std::set<std::vector<std::size_t>> fixing, psis;
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
    for (const auto& perm : all_permutations(ctx.ambient)) {
      bool fixes = true;
      for (auto p : kset) fixes = fixes && perm(p) == p;
      if (fixes) fixing.insert(perm.assignment());
    }
    for (const auto& g : all_permutations(ctx.members[m])) psis.insert(extend_map(ctx, g).hat.assignment());
    for (const auto& h : setwise) {
      r.corollary.count();
      const auto [u, v] = decompose_automorphism(ctx, m, h);
      const bool ok = compose(u, v) == h && fixing.count(u.assignment()) && psis.count(v.assignment());
      if (!ok) r.corollary.fail("decomposition fails", with(where, "h", assignment_of(h)));
      seen.emplace(u.assignment(), v.assignment());
    }
    // Φ is a bijection onto {fix K pointwise} × Ψ(Bij K).
    r.corollary.count();
    if (seen.size() != setwise.size() || setwise.size() != fixing.size() * psis.size()) {
      r.corollary.fail("decomposition is not a bijection",
                       with(with(where, "K", Json(kset)), "orders",
                            Json{{"setwise", setwise.size()}, {"fixing", fixing.size()}, {"psi", psis.size()}}));
    }
  }
}

void exhaustive_fixture(const ContinuationContext& ctx, const Json& where, bool with_compositions, SchemeRecords& r) {
  context_invariants(ctx, true, 0, 0, where, r);
  identities(ctx, where, r);
  metric_extension(ctx, where, r);
  std::vector<std::pair<MetricMap, MetricMap>> pairs;
  std::vector<std::vector<std::vector<MetricMap>>> maps(ctx.members.size());
  for (std::size_t km = 0; km < ctx.members.size(); ++km) {
    for (std::size_t lm = 0; lm < ctx.members.size(); ++lm) {
      maps[km].push_back(all_maps(ctx.members[km], ctx.members[lm]));
      for (const auto& phi : maps[km][lm]) single_map(ctx, km, lm, phi, where, r);
    }
  }
  // Map-space isometries over every pair of maps K -> L, K and L the first two members.
  const std::size_t last = ctx.members.size() > 1 ? 1 : 0;
  const auto& kl = maps[0][last];
  for (const auto& f : kl) {
    for (const auto& g : kl) {
      lambda_isometry(ctx, f, g, where, r);
      pairs.emplace_back(f, g);
    }
    convergence(ctx, kl.front(), f, where, r);
  }
  isometry_pairs(ctx, pairs, where, r);
  if (with_compositions) {
    for (std::size_t km = 0; km < ctx.members.size(); ++km) {
      for (std::size_t lm = 0; lm < ctx.members.size(); ++lm) {
        for (std::size_t mm = 0; mm < ctx.members.size(); ++mm) {
          for (const auto& phi : maps[km][lm]) {
            for (const auto& psi : maps[lm][mm]) composition(ctx, phi, psi, where, r);
          }
        }
      }
    }
  }
  if (ctx.family.front().size() <= 3) psi_homomorphism(ctx, where, r);
}

void sampled_fixture(const ContinuationContext& ctx, Rng& rng, std::size_t trials, const Json& where,
                     SchemeRecords& r) {
  context_invariants(ctx, false, rng(), 64, where, r);
  identities(ctx, where, r);
  metric_extension(ctx, where, r);
  const std::size_t count = ctx.members.size();
  std::vector<std::pair<MetricMap, MetricMap>> pairs;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t km = uniform_index(rng, count), lm = uniform_index(rng, count), mm = uniform_index(rng, count);
    const MetricMap phi = random_map(rng, ctx.members[km], ctx.members[lm]);
    const MetricMap psi = random_map(rng, ctx.members[lm], ctx.members[mm]);
    // A bijection alongside, so the bijection clause is exercised.
    const auto perms = all_permutations(ctx.members[km]);
    const MetricMap chi(ctx.members[km], ctx.members[lm], perms[uniform_index(rng, perms.size())].assignment());
    single_map(ctx, km, lm, phi, where, r);
    single_map(ctx, km, lm, chi, where, r);
    composition(ctx, phi, psi, where, r);
    const MetricMap other = random_map(rng, ctx.members[km], ctx.members[lm]);
    lambda_isometry(ctx, phi, other, where, r);
    if (pairs.size() < 50) pairs.emplace_back(phi, other);
    if (t < 20) convergence(ctx, other, phi, where, r);
  }
  isometry_pairs(ctx, pairs, where, r);
}

}  // namespace

void run_scheme_suite(const RunConfig& config, std::vector<CheckRecord>& out) {
  SchemeRecords r;
  Rng rng = stream(config, 41);
  FixtureOptions options;
  options.mutate_lambda_metric = config.inject_mutation;
  const std::uint64_t base = config.seed;

  std::set<std::pair<std::size_t, std::size_t>> done;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 1}, {4, 2}}) {
    const auto ctx = build_finite_fixture(n, k, base, options);
    exhaustive_fixture(ctx, fixture_json(ctx, "exhaustive"), true, r);
    done.emplace(n, k);
  }
  {
    const auto ctx = build_finite_fixture(4, 2, base, options);
    decomposition(ctx, fixture_json(ctx, "corollary"), r);
  }
  if (!done.count({config.n, config.k})) {
    const auto ctx = build_finite_fixture(config.n, config.k, base, options);
    if (config.n <= 4) {
      exhaustive_fixture(ctx, fixture_json(ctx, "configured"), true, r);
    } else {
      sampled_fixture(ctx, rng, config.trials, fixture_json(ctx, "configured"), r);
    }
  }
  FixtureOptions randomized = options;
  randomized.randomize_h = true;
  {
    const auto ctx = build_finite_fixture(6, 3, base, randomized);
    sampled_fixture(ctx, rng, config.trials, fixture_json(ctx, "randomized"), r);
  }
  {
    const auto ctx = build_finite_fixture(8, 4, base, randomized);
    sampled_fixture(ctx, rng, std::max<std::size_t>(1, config.trials / 4), fixture_json(ctx, "randomized"), r);
  }
  const auto reference = build_finite_fixture(4, 2, base, options);
  for (std::uint64_t j = 1; j <= 10; ++j) {
    const auto ctx = rerandomize_h(reference, base * 131 + j);
    exhaustive_fixture(ctx, with(fixture_json(ctx, "rerandomized H"), "draw", j), false, r);
    decomposition(ctx, with(fixture_json(ctx, "rerandomized H"), "draw", j), r);
  }
  r.move_into(out);
}

}  // namespace zfun
