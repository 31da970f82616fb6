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
#include "zfun/step_function.hpp"

namespace zfun {

using detail::assignment_of;
using detail::stream;

namespace {

// Same partition as u, values folded into `allowed`.
StepFunction restrict_values(const StepFunction& u, const std::vector<std::size_t>& allowed) {
  std::vector<std::size_t> values;
  for (auto v : u.values()) values.push_back(allowed[v % allowed.size()]);
  return StepFunction(u.target(), u.breakpoints(), std::move(values));
}

void metric_axioms(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("integral metric is a metric on canonical step functions", "plumbing");
  CheckRecord diam("step-space diameter is diam X, attained by constants", "(i)");
  Rng rng = stream(config, 51);
  for (std::size_t t = 0; t < 10 * config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    StepFunction f = random_step(rng, x), g = random_step(rng, x), h = random_step(rng, x);
    if (uniform_index(rng, 8) == 0) g = f;
    const Rational fg = integral_metric(f, g), gf = integral_metric(g, f);
    const Rational fh = integral_metric(f, h), hg = integral_metric(h, g);
    rec.count();
    const bool ok = fg == gf && fg >= 0 && (fg == 0) == (f == g) && fg <= fh + hg && integral_metric(f, f) == 0;
    if (!ok) rec.fail("axiom fails", Json{{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}});
    diam.count();
    if (fg > diameter(*x)) diam.fail("pair exceeds the diameter", Json{{"f", to_json(f)}, {"g", to_json(g)}});
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    Rational best = 0;
    for (std::size_t a = 0; a < x->size(); ++a) {
      for (std::size_t b = 0; b < x->size(); ++b) best = std::max<Rational>(best, integral_metric(dirac_const(x, a), dirac_const(x, b)));
    }
    diam.count();
    if (best != diameter(*x)) diam.fail("constants do not attain the diameter", Json{{"space", to_json(*x)}});
  }
  out.push_back(std::move(rec));
  out.push_back(std::move(diam));
}

void functor(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord embed("constants embed X isometrically", "(Λ4)");
  CheckRecord laws("composition preserves identities and composition", "(Λ1)");
  CheckRecord natural("f ∘ const_x = const_f(x)", "(Λ3)");
  CheckRecord iso("∫d(φ∘u, ψ∘u) <= d_sup(φ, ψ), equality at a constant", "(Λ5)");
  Rng rng = stream(config, 52);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 5), "y");
    SpaceRef z = random_space(rng, uniform_between(rng, 1, 5), "z");
    MetricMap f = random_map(rng, x, y), f2 = random_map(rng, x, y), g = random_map(rng, y, z);
    StepFunction u = random_step(rng, x);
    for (std::size_t a = 0; a < x->size(); ++a) {
      for (std::size_t b = 0; b < x->size(); ++b) {
        embed.count();
        if (integral_metric(dirac_const(x, a), dirac_const(x, b)) != x->distance(a, b)) {
          embed.fail("constant distance differs", Json{{"space", to_json(*x)}, {"a", x->label(a)}, {"b", x->label(b)}});
        }
      }
      natural.count();
      if (!(compose_pushforward(f, dirac_const(x, a)) == dirac_const(y, f(a)))) {
        natural.fail("naturality fails", Json{{"f", assignment_of(f)}, {"x", x->label(a)}});
      }
    }
    laws.count();
    if (!(compose_pushforward(identity_map(x), u) == u) ||
        !(compose_pushforward(compose(g, f), u) == compose_pushforward(g, compose_pushforward(f, u)))) {
      laws.fail("functor law fails", Json{{"f", assignment_of(f)}, {"g", assignment_of(g)}, {"u", to_json(u)}});
    }
    iso.count();
    const Rational sup = sup_distance(f, f2);
    Rational at_constants = 0;
    for (std::size_t a = 0; a < x->size(); ++a) {
      at_constants = std::max<Rational>(at_constants, integral_metric(compose_pushforward(f, dirac_const(x, a)),
                                                       compose_pushforward(f2, dirac_const(x, a))));
    }
    const Rational sampled = integral_metric(compose_pushforward(f, u), compose_pushforward(f2, u));
    if (sampled > sup || at_constants != sup) {
      iso.fail("isometry bound fails", Json{{"phi", assignment_of(f)}, {"psi", assignment_of(f2)}, {"u", to_json(u)},
                                            {"sup_distance", to_string(sup)}, {"value", to_string(sampled)}});
    }
  }
  out.push_back(std::move(embed));
  out.push_back(std::move(laws));
  out.push_back(std::move(natural));
  out.push_back(std::move(iso));
}

void phi_n(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord bound("∫d(Φ_n u, u) <= diam X / n for n <= 64", "(g)");
  CheckRecord avoid("Φ_n with a ∉ A never lands in the step space over A", "(g)");
  Rng rng = stream(config, 53);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    StepFunction u = random_step(rng, x);
    const std::size_t a = uniform_index(rng, x->size());
    const Rational diam = diameter(*x);
    for (long n = 1; n <= 64; ++n) {
      bound.count();
      const StepFunction w = phi_n_witness(a, n, u);
      const Rational dist = integral_metric(w, u);
      if (dist > diam / n) {
        bound.fail("bound fails", Json{{"u", to_json(u)}, {"a", x->label(a)}, {"n", n}, {"distance", to_string(dist)}});
      }
    }
    if (x->size() < 2) continue;
    std::vector<std::size_t> allowed;
    for (std::size_t i = 0; i < x->size(); ++i) {
      if (i != a && (allowed.empty() || uniform_index(rng, 2) == 0)) allowed.push_back(i);
    }
    const StepFunction in_a = restrict_values(u, allowed);
    for (long n : {1L, 2L, 7L, 64L}) {
      avoid.count();
      if (lies_in_subspace(phi_n_witness(a, n, in_a), allowed)) {
        avoid.fail("witness lies in M(A)", Json{{"u", to_json(in_a)}, {"a", x->label(a)}, {"n", n}});
      }
    }
  }
  out.push_back(std::move(bound));
  out.push_back(std::move(avoid));
}

void selection(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("select_preimage round trip with minimum-index selector", "(d)");
  CheckRecord outside("values outside im f are rejected with their segment", "(d)");
  Rng rng = stream(config, 54);
  for (std::size_t t = 0; t < 5 * config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 5), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 5), "y");
    MetricMap f = random_map(rng, x, y);
    const StepFunction v = compose_pushforward(f, random_step(rng, x));
    rec.count();
    const StepFunction u = select_preimage(f, v);
    bool ok = compose_pushforward(f, u) == v;
    for (std::size_t s = 0; ok && s < u.segments(); ++s) {
      for (std::size_t p = 0; p < u.values()[s]; ++p) ok = ok && f(p) != f(u.values()[s]);
    }
    if (!ok) rec.fail("round trip fails", Json{{"f", assignment_of(f)}, {"v", to_json(v)}, {"u", to_json(u)}});

    const auto image = f.image();
    if (image.size() == y->size()) continue;
    std::size_t missing = 0;
    while (std::find(image.begin(), image.end(), missing) != image.end()) ++missing;
    const StepFunction bad = phi_n_witness(missing, static_cast<long>(uniform_between(rng, 1, 4)), v);
    outside.count();
    try {
      (void)select_preimage(f, bad);
      outside.fail("accepted a value outside the image", Json{{"f", assignment_of(f)}, {"v", to_json(bad)}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kValueOutsideImage || e.witness() != std::vector<std::size_t>{0}) {
        outside.fail("wrong error", Json{{"code", error_code_name(e.code())}, {"witness", Json(e.witness())}});
      }
    }
  }
  out.push_back(std::move(rec));
  out.push_back(std::move(outside));
}

}  // namespace

void run_step_suite(const RunConfig& config, std::vector<CheckRecord>& out) {
  metric_axioms(config, out);
  functor(config, out);
  phi_n(config, out);
  selection(config, out);
}

}  // namespace zfun
