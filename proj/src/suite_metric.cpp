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

#include "check_util.hpp"

namespace zfun {

using detail::stream;

namespace {

void validator_accepts(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("validator accepts generated metrics", "plumbing");
  Rng rng = stream(config, 1);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef s = random_space(rng, uniform_between(rng, 1, 8));
    rec.count();
    auto violations = find_axiom_violations(s->labels(), s->matrix());
    if (!violations.empty()) rec.fail("generated metric rejected", to_json(*s));
  }
  out.push_back(std::move(rec));
}

void perturbations_rejected(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("single-axiom perturbations are rejected with their tag", "plumbing");
  Rng rng = stream(config, 2);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef s = random_space(rng, uniform_between(rng, 3, 6));
    DistanceMatrix d = s->matrix();
    const std::size_t n = s->size();
    const auto axiom = static_cast<Axiom>(t % 4);
    std::size_t i = uniform_index(rng, n);
    std::size_t j = (i + 1 + uniform_index(rng, n - 1)) % n;
    switch (axiom) {
      case Axiom::kIdentity: d[i][i] = ratio(1, 2); break;
      case Axiom::kSymmetry: d[i][j] += ratio(1, 1000); break;
      case Axiom::kPositivity: d[i][j] = d[j][i] = 0; break;
      case Axiom::kTriangle: {
        std::size_t k = 0;
        while (k == i || k == j) ++k;
        d[i][k] = d[k][i] = d[i][j] + d[j][k] + 1;
        break;
      }
    }
    rec.count();
    auto violations = find_axiom_violations(s->labels(), d);
    const bool tagged = std::any_of(violations.begin(), violations.end(),
                                    [&](const AxiomViolation& v) { return v.axiom == axiom; });
    const bool only_triangle = std::all_of(violations.begin(), violations.end(),
                                           [](const AxiomViolation& v) { return v.axiom == Axiom::kTriangle; });
    bool thrown = false;
    try {
      validate_space(s->labels(), d);
    } catch (const AxiomViolationError&) {
      thrown = true;
    }
    if (!tagged || !thrown || (axiom == Axiom::kTriangle && !only_triangle)) {
      rec.fail(std::string("perturbation of ") + axiom_name(axiom) + " not reported as such",
               Json{{"points", s->labels()}, {"axiom", axiom_name(axiom)}});
    }
  }
  out.push_back(std::move(rec));
}

void glue_properties(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord diam("glued diameter equals max(1, diam K)", "(i)");
  CheckRecord restrict("glued metric is d on K, d0 on the anchor, max(diam K, 1) across", "(Λ4)");
  Rng rng = stream(config, 3);
  const Rational factors[] = {ratio(1, 4), Rational(1), Rational(3)};
  for (const auto& anchor : detail::test_anchors()) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      SpaceRef k = detail::scaled(random_space(rng, uniform_between(rng, 1, 6), "k"), factors[t % 3]);
      GluedSpace g = glue_space(k, anchor);
      Rational expected = diameter(*k) < 1 ? Rational(1) : diameter(*k);
      diam.count();
      if (diameter(*g.space) != expected) {
        diam.fail("diameter " + to_string(diameter(*g.space)) + ", expected " + to_string(expected),
                  Json{{"K", to_json(*k)}, {"anchor", to_json(*anchor)}});
      }
      restrict.count();
      bool ok = true;
      const std::size_t off = g.anchor_offset();
      for (std::size_t i = 0; i < g.space->size(); ++i) {
        for (std::size_t j = 0; j < g.space->size(); ++j) {
          const bool in_k_i = i < off, in_k_j = j < off;
          Rational want = in_k_i && in_k_j     ? k->distance(i, j)
                          : !in_k_i && !in_k_j ? anchor->distance(i - off, j - off)
                                               : expected;
          if (g.space->distance(i, j) != want) ok = false;
        }
      }
      if (!ok) restrict.fail("glued metric has the wrong block structure", Json{{"K", to_json(*k)}});
    }
  }
  out.push_back(std::move(diam));
  out.push_back(std::move(restrict));
}

void sup_metric_axioms(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("sup distance is a metric on maps (exhaustive, |dom| <= 4, |cod| <= 3)", "plumbing");
  Rng rng = stream(config, 4);
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      SpaceRef dom = random_space(rng, a, "x");
      SpaceRef cod = random_space(rng, b, "y");
      auto maps = all_maps(dom, cod);
      const std::size_t m = maps.size();
      std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) d[i][j] = sup_distance(maps[i], maps[j]);
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          rec.count();
          if ((d[i][j] == 0) != (i == j) || d[i][j] != d[j][i]) {
            rec.fail("identity or symmetry fails",
                     Json{{"f", detail::assignment_of(maps[i])}, {"g", detail::assignment_of(maps[j])}});
          }
          for (std::size_t k = 0; k < m; ++k) {
            if (d[i][k] > d[i][j] + d[j][k]) {
              rec.fail("triangle fails", Json{{"f", detail::assignment_of(maps[i])},
                                              {"g", detail::assignment_of(maps[j])},
                                              {"h", detail::assignment_of(maps[k])}});
            }
          }
        }
      }
    }
  }
  out.push_back(std::move(rec));
}

void glue_functor_laws(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("glue_map preserves identities and composition; anchor fixed", "(Λ1)");
  Rng rng = stream(config, 5);
  auto check = [&](const MetricMap& f, const MetricMap& g, const SpaceRef& anchor) {
    rec.count();
    MetricMap gf = glue_map(f, anchor);
    bool ok = glue_map(identity_map(f.domain()), anchor) == identity_map(gf.domain()) &&
              glue_map(compose(g, f), anchor) == compose(glue_map(g, anchor), gf);
    const std::size_t off = f.domain()->size();
    for (std::size_t a = 0; a < anchor->size(); ++a) {
      if (gf.domain()->label(off + a) != gf.codomain()->label(gf(off + a))) ok = false;
    }
    if (!ok) rec.fail("functor law fails", Json{{"f", detail::assignment_of(f)}, {"g", detail::assignment_of(g)}});
  };
  for (const auto& anchor : detail::test_anchors()) {
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 3; ++b) {
        for (std::size_t c = 1; c <= 3; ++c) {
          SpaceRef x = random_space(rng, a, "x"), y = random_space(rng, b, "y"), z = random_space(rng, c, "z");
          auto fs = all_maps(x, y);
          auto gs = all_maps(y, z);
          for (const auto& f : fs) {
            for (const auto& g : gs) check(f, g, anchor);
          }
        }
      }
    }
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 8), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 8), "y");
    SpaceRef z = random_space(rng, uniform_between(rng, 1, 8), "z");
    check(random_map(rng, x, y), random_map(rng, y, z), detail::test_anchors()[t % 3]);
  }
  out.push_back(std::move(rec));
}

void glue_isometry(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("gluing is isometric on map spaces", "(Λ5)");
  Rng rng = stream(config, 6);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 6), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 6), "y");
    MetricMap f = random_map(rng, x, y), g = random_map(rng, x, y);
    const SpaceRef anchor = detail::test_anchors()[t % 3];
    rec.count();
    Rational lhs = sup_distance(glue_map(f, anchor), glue_map(g, anchor));
    Rational rhs = sup_distance(f, g);
    if (lhs != rhs) {
      rec.fail("glued sup distance " + to_string(lhs) + " != " + to_string(rhs),
               Json{{"f", detail::assignment_of(f)}, {"g", detail::assignment_of(g)}});
    }
  }
  out.push_back(std::move(rec));
}

}  // namespace

void run_metric_suite(const RunConfig& config, std::vector<CheckRecord>& out) {
  validator_accepts(config, out);
  perturbations_rejected(config, out);
  glue_properties(config, out);
  sup_metric_axioms(config, out);
  glue_functor_laws(config, out);
  glue_isometry(config, out);
}

}  // namespace zfun
