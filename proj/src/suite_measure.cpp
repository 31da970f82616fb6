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

#include "check_util.hpp"

namespace zfun {

using detail::assignment_of;
using detail::stream;

namespace {

// Diracs plus a few random measures on the space.
std::vector<ProbMeasure> probe_measures(Rng& rng, const SpaceRef& space, std::size_t random_count) {
  std::vector<ProbMeasure> out;
  for (std::size_t i = 0; i < space->size(); ++i) out.push_back(dirac(space, i));
  for (std::size_t r = 0; r < random_count; ++r) out.push_back(random_measure(rng, space));
  return out;
}

bool mass_ok(const ProbMeasure& mu) {
  Rational total = 0;
  for (const auto& w : mu.weights()) {
    if (w < 0) return false;
    total += w;
  }
  return total == 1;
}

void functor_laws(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord mass("pushforward conserves mass", "plumbing");
  CheckRecord laws("pushforward preserves identities and composition", "(Λ1)");
  CheckRecord natural("pushforward of a Dirac is the Dirac of the image", "(Λ3)");
  Rng rng = stream(config, 11);

  auto check = [&](const MetricMap& f, const MetricMap& g, const std::vector<ProbMeasure>& probes) {
    for (std::size_t x = 0; x < f.domain()->size(); ++x) {
      natural.count();
      if (!(pushforward(f, dirac(f.domain(), x)) == dirac(f.codomain(), f(x)))) {
        natural.fail("M(f)δ_x != δ_f(x)", Json{{"f", assignment_of(f)}, {"x", f.domain()->label(x)}});
      }
    }
    for (const auto& mu : probes) {
      ProbMeasure pushed = pushforward(f, mu);
      mass.count();
      if (!mass_ok(pushed)) mass.fail("mass not conserved", Json{{"f", assignment_of(f)}, {"mu", to_json(mu)}});
      laws.count();
      if (!(pushforward(identity_map(f.domain()), mu) == mu) ||
          !(pushforward(compose(g, f), mu) == pushforward(g, pushed))) {
        laws.fail("functor law fails",
                  Json{{"f", assignment_of(f)}, {"g", assignment_of(g)}, {"mu", to_json(mu)}});
      }
    }
  };

  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      for (std::size_t c = 1; c <= 3; ++c) {
        SpaceRef x = random_space(rng, a, "x"), y = random_space(rng, b, "y"), z = random_space(rng, c, "z");
        auto probes = probe_measures(rng, x, 2);
        auto fs = all_maps(x, y);
        auto gs = all_maps(y, z);
        for (const auto& f : fs) {
          for (const auto& g : gs) check(f, g, probes);
        }
      }
    }
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 8), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 8), "y");
    SpaceRef z = random_space(rng, uniform_between(rng, 1, 8), "z");
    check(random_map(rng, x, y), random_map(rng, y, z), {random_measure(rng, x), random_measure(rng, x)});
  }
  out.push_back(std::move(mass));
  out.push_back(std::move(laws));
  out.push_back(std::move(natural));
}

void affinity_and_change_of_variables(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord affine("pushforward is affine", "plumbing");
  CheckRecord cov("change of variables: ∫g d(M(φ)μ) = ∫g∘φ dμ", "plumbing");
  Rng rng = stream(config, 12);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 6), "x");
    SpaceRef y = random_space(rng, uniform_between(rng, 1, 6), "y");
    MetricMap phi = random_map(rng, x, y);
    ProbMeasure mu = random_measure(rng, x), nu = random_measure(rng, x);
    Rational s = random_unit_rational(rng);
    affine.count();
    if (!(pushforward(phi, convex_combination(s, mu, nu)) ==
          convex_combination(s, pushforward(phi, mu), pushforward(phi, nu)))) {
      affine.fail("M(φ) is not affine here",
                  Json{{"phi", assignment_of(phi)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"t", to_string(s)}});
    }
    std::vector<Rational> g;
    for (std::size_t i = 0; i < y->size(); ++i) {
      g.push_back(ratio(static_cast<long>(uniform_index(rng, 21)) - 10, static_cast<long>(uniform_between(rng, 1, 4))));
    }
    cov.count();
    auto [lhs, rhs] = change_of_variables_check(phi, mu, g);
    if (lhs != rhs) cov.fail("integrals differ", Json{{"phi", assignment_of(phi)}, {"mu", to_json(mu)}});
  }
  out.push_back(std::move(affine));
  out.push_back(std::move(cov));
}

void image_law(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord rec("μ ∈ im M(φ) iff μ(im φ) = 1 (exhaustive over maps, |spaces| <= 4)", "(d)");
  Rng rng = stream(config, 13);
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      SpaceRef x = random_space(rng, a, "x"), y = random_space(rng, b, "y");
      auto probes = probe_measures(rng, y, 3);
      for (const auto& phi : all_maps(x, y)) {
        for (const auto& mu : probes) {
          rec.count();
          const bool inside = in_image(phi, mu);
          auto witness = preimage_witness(phi, mu);
          const bool constructive = witness && pushforward(phi, *witness) == mu;
          if (inside != constructive) {
            rec.fail("in_image disagrees with the preimage system",
                     Json{{"phi", assignment_of(phi)}, {"mu", to_json(mu)}, {"in_image", inside}});
          }
        }
      }
    }
  }
  out.push_back(std::move(rec));
}

void transfer_properties(const RunConfig& config, std::vector<CheckRecord>& out) {
  CheckRecord inj("φ injective iff M(φ) injective (exhaustive, |spaces| <= 3)", "(c)");
  CheckRecord sur("φ surjective iff M(φ) surjective (exhaustive, |spaces| <= 3)", "(e)");
  CheckRecord embed("Dirac embedding is injective", "(Λ2)");
  Rng rng = stream(config, 14);
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      SpaceRef x = random_space(rng, a, "x"), y = random_space(rng, b, "y");
      for (const auto& phi : all_maps(x, y)) {
        inj.count();
        std::pair<std::size_t, std::size_t> collision{0, 0};
        const bool measure_level = measure_map_injective(phi, &collision);
        bool ok = injectivity_transfer_check(phi);
        if (!measure_level) {
          ok = ok && collision.first != collision.second &&
               pushforward(phi, dirac(x, collision.first)) == pushforward(phi, dirac(x, collision.second));
        }
        if (!ok) inj.fail("injectivity not transferred", Json{{"phi", assignment_of(phi)}});
        sur.count();
        if (phi.surjective() != measure_map_surjective(phi)) {
          sur.fail("surjectivity not transferred", Json{{"phi", assignment_of(phi)}});
        }
      }
    }
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    SpaceRef x = random_space(rng, uniform_between(rng, 1, 8), "x");
    for (std::size_t i = 0; i < x->size(); ++i) {
      for (std::size_t j = i + 1; j < x->size(); ++j) {
        embed.count();
        if (dirac(x, i) == dirac(x, j)) embed.fail("two Diracs coincide", Json{{"a", x->label(i)}, {"b", x->label(j)}});
      }
    }
  }
  out.push_back(std::move(inj));
  out.push_back(std::move(sur));
  out.push_back(std::move(embed));
}

}  // namespace

void run_measure_suite(const RunConfig& config, std::vector<CheckRecord>& out) {
  functor_laws(config, out);
  affinity_and_change_of_variables(config, out);
  image_law(config, out);
  transfer_properties(config, out);
}

}  // namespace zfun
