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

#include "zfun/commands.hpp"

#include <chrono>
#include <set>

#include "zfun/kantorovich.hpp"
#include "zfun/random.hpp"
#include "zfun/scheme.hpp"

namespace zfun {
namespace fs = std::filesystem;

namespace {

const Json& arg(const Json& args, const char* name) {
  if (!args.is_object() || !args.contains(name)) {
    throw Error(ErrorCode::kParse, std::string("missing argument \"") + name + "\"");
  }
  return args.at(name);
}

std::string path_arg(const Json& args, const char* name) {
  const Json& v = arg(args, name);
  if (!v.is_string()) throw Error(ErrorCode::kParse, std::string("argument \"") + name + "\" must be a path");
  return v.get<std::string>();
}

bool flag(const Json& args, const char* name) {
  if (!args.is_object() || !args.contains(name)) return false;
  if (!args.at(name).is_boolean()) throw Error(ErrorCode::kParse, std::string("\"") + name + "\" must be a boolean");
  return args.at(name).get<bool>();
}

ValidationOptions validation(const RunConfig& config) {
  ValidationOptions options;
  if (config.mode == Mode::kFloat) options.tolerance = config.tolerance;
  return options;
}

Json config_echo(const RunConfig& config) {
  Json out{{"mode", mode_name(config.mode)}};
  if (config.mode == Mode::kFloat) out["tolerance"] = format_double(config.tolerance);
  return out;
}

Json labels_at(const std::vector<std::string>& labels, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(labels.at(i));
  return out;
}

Json assignment_json(const MetricMap& map) {
  Json a = Json::object();
  for (std::size_t x = 0; x < map.assignment().size(); ++x) a[map.domain()->label(x)] = map.codomain()->label(map(x));
  return a;
}

// --- validate ---------------------------------------------------------------

Report cmd_validate(const Json& args, const RunConfig& config) {
  const std::string path = path_arg(args, "space");
  std::vector<std::string> points;
  DistanceMatrix dist;
  raw_space_from_json(read_json_file(path), points, dist);
  const auto violations = find_axiom_violations(points, dist, validation(config));

  Report report;
  report.command = "validate";
  report.config = config_echo(config);
  CheckRecord rec("space satisfies the metric axioms", "plumbing");
  rec.count();
  Json listed = Json::array();
  for (const auto& v : violations) {
    Json item{{"axiom", axiom_name(v.axiom)}, {"points", labels_at(points, v.witness)}};
    rec.fail(std::string(axiom_name(v.axiom)) + " axiom violated", item);
    listed.push_back(std::move(item));
  }
  report.payload["points"] = points.size();
  if (violations.empty()) {
    report.payload["diameter"] = to_json(diameter(*make_space(points, dist, validation(config))));
  }
  report.payload["violations"] = std::move(listed);
  report.records.push_back(std::move(rec));
  return report;
}

// --- dist -------------------------------------------------------------------

Report cmd_dist(const Json& args, const RunConfig& config) {
  const auto options = validation(config);
  const ProbMeasure mu = load_measure(path_arg(args, "mu"), options);
  const ProbMeasure nu = load_measure(path_arg(args, "nu"), options);
  std::string certificate = "both";
  if (args.contains("certificate")) {
    if (!args["certificate"].is_string()) throw Error(ErrorCode::kParse, "certificate must be a string");
    certificate = args["certificate"].get<std::string>();
  }
  if (certificate != "plan" && certificate != "potential" && certificate != "both" && certificate != "none") {
    throw Error(ErrorCode::kParse, "certificate must be plan, potential, both or none");
  }
  const bool want_plan = certificate == "plan" || certificate == "both";
  const bool want_potential = certificate == "potential" || certificate == "both";
  if (!same_space(mu.space(), nu.space())) throw Error(ErrorCode::kSpaceMismatch, "measures live on different spaces");

  Report report;
  report.command = "dist";
  report.config = config_echo(config);
  Json cert = Json::object();
  const auto& space = *mu.space();

  if (config.mode == Mode::kExact) {
    const PrimalSolution primal = kantorovich_primal(mu, nu);
    const DualSolution dual = kantorovich_dual(mu, nu);
    CheckRecord duality("primal value equals dual value", "plumbing");
    CheckRecord plan("plan is a coupling of μ and ν with the stated cost", "plumbing");
    CheckRecord potential("potential is nonexpansive and attains the value", "plumbing");
    duality.count();
    if (primal.value != dual.value) {
      duality.fail("duality gap", Json{{"primal", to_json(primal.value)}, {"dual", to_json(dual.value)}});
    }
    plan.count();
    if (!primal.plan.has_exact_marginals() || primal.plan.cost() != primal.value) plan.fail("plan rejected");
    potential.count();
    const Rational lifted = integrate(dual.potential.values, mu) - integrate(dual.potential.values, nu);
    if (!is_nonexpansive(dual.potential) || abs(lifted) != dual.value) potential.fail("potential rejected");
    report.payload["value"] = to_json(primal.value);
    if (want_plan) cert["plan"] = to_json(primal.plan);
    if (want_potential) cert["potential"] = to_json(dual.potential);
    report.payload["certificate"] = std::move(cert);
    report.payload["gap"] = to_json(primal.value - dual.value);
    report.records.push_back(std::move(duality));
    report.records.push_back(std::move(plan));
    report.records.push_back(std::move(potential));
    return report;
  }

  const FloatKantorovich f = kantorovich_float(mu, nu);
  CheckRecord gap("|primal − dual| <= tolerance", "plumbing");
  gap.count();
  if (!(std::abs(f.gap) <= config.tolerance)) gap.fail("gap exceeds tolerance", Json{{"gap", format_double(f.gap)}});
  report.payload["value"] = format_double(f.primal);
  if (want_plan) {
    Json moves = Json::array();
    for (std::size_t i = 0; i < f.plan.size(); ++i) {
      for (std::size_t j = 0; j < f.plan[i].size(); ++j) {
        if (f.plan[i][j] == 0) continue;
        moves.push_back(Json{{"from", space.label(i)}, {"to", space.label(j)}, {"mass", format_double(f.plan[i][j])}});
      }
    }
    cert["plan"] = std::move(moves);
  }
  if (want_potential) {
    Json values = Json::object();
    for (std::size_t i = 0; i < f.potential.size(); ++i) values[space.label(i)] = format_double(f.potential[i]);
    cert["potential"] = std::move(values);
  }
  report.payload["certificate"] = std::move(cert);
  report.payload["gap"] = format_double(f.gap);
  report.payload["mass_drift"] = format_double(f.mass_drift);
  report.records.push_back(std::move(gap));
  return report;
}

// --- glue -------------------------------------------------------------------

Report cmd_glue(const Json& args, const RunConfig& config) {
  const auto options = validation(config);
  const SpaceRef anchor = args.contains("anchor") ? load_space(path_arg(args, "anchor"), options) : default_anchor();
  if (!args.contains("space") && !args.contains("map")) {
    throw Error(ErrorCode::kParse, "glue needs a space, a map, or both");
  }
  Report report;
  report.command = "glue";
  report.config = config_echo(config);
  report.payload["anchor"] = to_json(*anchor);

  if (args.contains("space")) {
    const SpaceRef core = load_space(path_arg(args, "space"), options);
    const GluedSpace glued = glue_space(core, anchor);
    CheckRecord diam("glued diameter equals max(1, diam K)", "(i)");
    diam.count();
    const Rational expected = std::max(Rational(1), diameter(*core));
    if (diameter(*glued.space) != expected) {
      diam.fail("wrong diameter", Json{{"diameter", to_json(diameter(*glued.space))}, {"expected", to_json(expected)}});
    }
    report.payload["glued"] = to_json(*glued.space);
    report.payload["diameter"] = to_json(diameter(*glued.space));
    report.records.push_back(std::move(diam));
  }
  if (args.contains("map")) {
    const MetricMap f = load_map(path_arg(args, "map"), options);
    const GluedSpace dom = glue_space(f.domain(), anchor);
    const GluedSpace cod = glue_space(f.codomain(), anchor);
    const MetricMap g = glue_map(f, dom, cod);
    CheckRecord natural("I(f) agrees with f on K and fixes the anchor", "(Λ3)");
    natural.count();
    bool ok = true;
    for (std::size_t x = 0; x < f.domain()->size(); ++x) ok = ok && g(x) == f(x);
    for (std::size_t a = 0; a < anchor->size(); ++a) ok = ok && g(dom.anchor_offset() + a) == cod.anchor_offset() + a;
    if (!ok) natural.fail("glued map differs", Json{{"map", assignment_json(g)}});
    report.payload["map"] = to_json(g);
    report.records.push_back(std::move(natural));
  }
  return report;
}

// --- push -------------------------------------------------------------------

Report cmd_push(const Json& args, const RunConfig& config) {
  const auto options = validation(config);
  const MetricMap f = load_map(path_arg(args, "map"), options);
  Report report;
  report.command = "push";
  report.config = config_echo(config);
  if (args.contains("measure") == args.contains("step")) {
    throw Error(ErrorCode::kParse, "push needs exactly one of a measure or a step function");
  }
  if (args.contains("measure")) {
    const ProbMeasure mu = load_measure(path_arg(args, "measure"), options);
    const ProbMeasure pushed = pushforward(f, mu);
    CheckRecord mass("pushforward conserves mass", "plumbing");
    mass.count();
    Rational total = 0;
    for (const auto& w : pushed.weights()) total += w;
    if (total != 1) mass.fail("total mass " + to_string(total));
    report.payload["result"] = to_json(pushed);
    report.records.push_back(std::move(mass));
  } else {
    const StepFunction u = load_step(path_arg(args, "step"), options);
    const StepFunction pushed = compose_pushforward(f, u);
    CheckRecord pointwise("f ∘ u takes f(u(t)) on every segment", "plumbing");
    pointwise.count();
    // Evaluate both sides at every breakpoint of u.
    for (std::size_t s = 0; s < u.segments(); ++s) {
      const Rational& t = u.breakpoints()[s];
      std::size_t seg = 0;
      while (seg + 1 < pushed.segments() && pushed.breakpoints()[seg + 1] <= t) ++seg;
      if (pushed.values()[seg] != f(u.values()[s])) pointwise.fail("value differs", Json{{"t", to_json(t)}});
    }
    report.payload["result"] = to_json(pushed);
    report.records.push_back(std::move(pointwise));
  }
  return report;
}

// --- extend -----------------------------------------------------------------

std::pair<Json, fs::path> resolve(const Json& slot, const fs::path& base) {
  if (slot.is_string()) {
    fs::path p(slot.get<std::string>());
    if (p.is_relative()) p = base / p;
    return {read_json_file(p), p.parent_path()};
  }
  if (!slot.is_object()) throw Error(ErrorCode::kParse, "expected an inline object or a file path");
  return {slot, base};
}

std::size_t size_field(const Json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_number_unsigned()) {
    throw Error(ErrorCode::kParse, std::string("fixture needs a nonnegative integer \"") + name + "\"");
  }
  return j.at(name).get<std::size_t>();
}

// Family member (or the whole ambient, as members.size()) with these labels.
std::size_t member_by_labels(const ContinuationContext& ctx, std::vector<std::string> labels, bool allow_ambient) {
  std::sort(labels.begin(), labels.end());
  auto sorted_labels = [](const FiniteMetricSpace& s) {
    auto l = s.labels();
    std::sort(l.begin(), l.end());
    return l;
  };
  for (std::size_t m = 0; m < ctx.members.size(); ++m) {
    if (sorted_labels(*ctx.members[m]) == labels) return m;
  }
  if (allow_ambient && sorted_labels(*ctx.ambient) == labels) return ctx.members.size();
  throw Error(ErrorCode::kNotInFamily, "point set is not a member of the fixture family");
}

std::size_t side_of(const ContinuationContext& ctx, const Json& slot, const fs::path& base, bool allow_ambient) {
  std::vector<std::string> labels;
  if (slot.is_array()) {
    for (const auto& l : slot) {
      if (!l.is_string()) throw Error(ErrorCode::kParse, "point labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    labels = space_from_json(slot, base)->labels();
  }
  return member_by_labels(ctx, std::move(labels), allow_ambient);
}

Report cmd_extend(const Json& args, const RunConfig& config) {
  auto [fixture, fixture_dir] = resolve(arg(args, "fixture"), fs::current_path());
  const std::size_t n = size_field(fixture, "n");
  const std::size_t k = size_field(fixture, "k");
  std::uint64_t seed = config.seed;
  if (fixture.contains("seed")) {
    if (!fixture["seed"].is_number_unsigned()) throw Error(ErrorCode::kParse, "fixture seed must be an unsigned integer");
    seed = fixture["seed"].get<std::uint64_t>();
  }
  FixtureOptions fixture_options;
  fixture_options.mutate_lambda_metric = config.inject_mutation;
  const ContinuationContext ctx = build_finite_fixture(n, k, seed, fixture_options);
  const std::size_t ambient_slot = ctx.members.size();

  auto [map_json, map_dir] = resolve(arg(args, "map"), fs::current_path());
  if (!map_json.contains("domain") || !map_json.contains("codomain") || !map_json.contains("assignment") ||
      !map_json["assignment"].is_object()) {
    throw Error(ErrorCode::kParse, "map needs domain, codomain and an assignment object");
  }
  const bool decompose = flag(args, "decompose");
  const std::size_t km = side_of(ctx, map_json["domain"], map_dir, decompose);
  const std::size_t lm = side_of(ctx, map_json["codomain"], map_dir, decompose);
  auto space_at = [&](std::size_t m) { return m == ambient_slot ? ctx.ambient : ctx.members[m]; };
  std::map<std::string, std::string> assignment;
  for (const auto& [key, value] : map_json["assignment"].items()) {
    if (!value.is_string()) throw Error(ErrorCode::kParse, "assigned values must be labels");
    assignment[key] = value.get<std::string>();
  }
  const MetricMap phi = MetricMap::from_labels(space_at(km), space_at(lm), assignment);

  Report report;
  report.command = "extend";
  report.config = config_echo(config);
  report.payload["fixture"] = Json{{"n", n}, {"k", k}, {"seed", seed}};

  if ((km == ambient_slot) != (lm == ambient_slot)) {
    throw Error(ErrorCode::kNotInFamily, "map must go between family members, or act on the whole ambient space");
  }
  if (km != ambient_slot) {
    const ExtensionResult ext = extend_map(ctx, phi);
    report.payload["bar"] = assignment_json(ext.bar);
    report.payload["hat"] = assignment_json(ext.hat);
    const auto& kset = ctx.family[km];
    const auto& lset = ctx.family[lm];

    CheckRecord b("φ̂ restricted to K is φ", "(b)");
    b.count();
    for (std::size_t x = 0; x < kset.size(); ++x) {
      if (ext.hat(kset[x]) != lset[phi(x)]) b.fail("φ̂ differs from φ", Json{{"point", phi.domain()->label(x)}});
    }
    CheckRecord a("φ bijective implies φ̂ bijective", "(a)");
    a.count();
    if (phi.injective() && !ext.hat.injective()) a.fail("φ̂ is not a bijection");
    CheckRecord c("φ injective iff φ̂ injective", "(c)");
    c.count();
    if (phi.injective() != ext.hat.injective()) c.fail("injectivity differs");
    CheckRecord d("im φ̂ ∩ L = im φ", "(d)");
    d.count();
    std::vector<std::size_t> met, expected;
    for (auto p : ext.hat.image()) {
      if (std::binary_search(lset.begin(), lset.end(), p)) met.push_back(p);
    }
    for (auto y : phi.image()) expected.push_back(lset[y]);
    if (met != expected) {
      d.fail("images differ", Json{{"hat_on_L", labels_at(ctx.ambient->labels(), met)},
                                   {"image", labels_at(ctx.ambient->labels(), expected)}});
    }
    CheckRecord e("φ surjective onto L iff φ̂ surjective", "(e)");
    e.count();
    if (phi.surjective() != ext.hat.surjective()) e.fail("surjectivity differs");
    report.payload["injective"] = ext.hat.injective();
    report.payload["surjective"] = ext.hat.surjective();
    for (auto* r : {&a, &b, &c, &d, &e}) report.records.push_back(std::move(*r));

    if (fixture.contains("metric")) {
      const SpaceRef l_metric = space_from_json(fixture["metric"], fixture_dir, validation(config));
      if (l_metric->labels() != ctx.members[member_by_labels(ctx, l_metric->labels(), false)]->labels()) {
        throw Error(ErrorCode::kNotInFamily, "metric points must list a family member in ambient order");
      }
      CheckRecord i("d̂ extends d with diameter max(1, diam L)", "(i)");
      i.count();
      const SpaceRef hat = extend_metric(ctx, l_metric);
      const auto& idx = ctx.family[ctx.member_index(*l_metric)];
      bool ok = diameter(*hat) == std::max(Rational(1), diameter(*l_metric));
      for (std::size_t x = 0; x < idx.size(); ++x) {
        for (std::size_t y = 0; y < idx.size(); ++y) ok = ok && hat->distance(idx[x], idx[y]) == l_metric->distance(x, y);
      }
      if (!ok) i.fail("d̂ does not extend d or has the wrong diameter");
      report.payload["extended_metric"] = to_json(*hat);
      report.records.push_back(std::move(i));
    }
  }

  if (flag(args, "check_laws")) {
    CheckRecord l1("Λ preserves identities and composition on the fixture", "(Λ1)");
    CheckRecord l2("|Λ(K)| = |Ω| and im δ_K is a distinguished subset", "(Λ2)");
    CheckRecord l3("Λ(f) ∘ δ_K = δ_L ∘ f", "(Λ3)");
    CheckRecord l4("Λ(d) ∘ (δ_K × δ_K) = d", "(Λ4)");
    CheckRecord h("H_K is a bijection with H_K(im δ_K) = K", "plumbing");
    std::map<std::string, CheckRecord*> by_tag{{"(Λ1)", &l1}, {"(Λ2)", &l2}, {"(Λ3)", &l3}, {"(Λ4)", &l4}, {"H", &h}};
    for (auto& [tag, rec] : by_tag) rec->count();
    for (const auto& v : verify_context(ctx, n <= 4, seed, config.trials)) by_tag.at(v.tag)->fail(v.message);
    CheckRecord laws("(id)^ = id and (ψ∘φ)^ = ψ̂ ∘ φ̂", "(a)");
    for (const auto& member : ctx.members) {
      laws.count();
      if (!(extend_map(ctx, identity_map(member)).hat == identity_map(ctx.ambient))) {
        laws.fail("identity not preserved", Json{{"K", member->labels()}});
      }
    }
    if (km != ambient_slot) {
      // Every ψ : L -> M for small fixtures, a seeded sample otherwise.
      Rng rng(seed ^ 0x5DEECE66DULL);
      const MetricMap hat_phi = extend_map(ctx, phi).hat;
      for (std::size_t mm = 0; mm < ctx.members.size(); ++mm) {
        std::vector<MetricMap> psis;
        if (n <= 4) {
          psis = all_maps(ctx.members[lm], ctx.members[mm]);
        } else {
          for (std::size_t t = 0; t < std::max<std::size_t>(1, config.trials / ctx.members.size()); ++t) {
            psis.push_back(random_map(rng, ctx.members[lm], ctx.members[mm]));
          }
        }
        for (const auto& psi : psis) {
          laws.count();
          if (!(extend_map(ctx, compose(psi, phi)).hat == compose(extend_map(ctx, psi).hat, hat_phi))) {
            laws.fail("composition not preserved", Json{{"psi", assignment_json(psi)}});
          }
        }
      }
    }
    for (auto* r : {&l1, &l2, &l3, &l4, &h, &laws}) report.records.push_back(std::move(*r));
  }

  if (decompose) {
    std::vector<std::pair<std::size_t, MetricMap>> targets;
    if (km == ambient_slot) {
      if (!phi.injective()) throw Error(ErrorCode::kBadParameters, "h must be a bijection of the ambient space");
      for (std::size_t m = 0; m < ctx.members.size(); ++m) {
        bool keeps = true;
        for (auto p : ctx.family[m]) keeps = keeps && std::binary_search(ctx.family[m].begin(), ctx.family[m].end(), phi(p));
        if (keeps) targets.emplace_back(m, phi);
      }
    } else {
      if (km != lm || !phi.injective()) {
        throw Error(ErrorCode::kNotSetwiseInvariant, "decomposition needs a bijection of a family member onto itself");
      }
      targets.emplace_back(km, extend_map(ctx, phi).hat);
    }
    CheckRecord rec("h = u ∘ v with u fixing K pointwise and v = Ψ(h|K)", "(a)");
    Json parts = Json::array();
    for (const auto& [m, h] : targets) {
      rec.count();
      const Decomposition dec = decompose_automorphism(ctx, m, h);
      bool ok = compose(dec.u, dec.v) == h;
      for (auto p : ctx.family[m]) ok = ok && dec.u(p) == p;
      ok = ok && dec.v == extend_map(ctx, restrict_to_member(ctx, m, h)).hat;
      if (!ok) rec.fail("decomposition fails", Json{{"K", ctx.members[m]->labels()}});
      parts.push_back(Json{{"K", ctx.members[m]->labels()}, {"u", assignment_json(dec.u)}, {"v", assignment_json(dec.v)}});
    }
    report.payload["decomposition"] = std::move(parts);
    report.records.push_back(std::move(rec));
  }
  return report;
}

// --- check ------------------------------------------------------------------

Report cmd_check(const Json& args, const RunConfig& config) {
  const Json& suite = arg(args, "suite");
  if (!suite.is_string()) throw Error(ErrorCode::kParse, "suite must be a string");
  return run_check(suite.get<std::string>(), config);
}

// --- report -----------------------------------------------------------------

CommandOutcome cmd_report(const Json& args) {
  const std::string path = path_arg(args, "report");
  const Json source = read_json_file(path);
  if (!source.is_object() || !source.contains("records") || !source["records"].is_array() || !source.contains("pass") ||
      !source["pass"].is_boolean()) {
    throw Error(ErrorCode::kParse, path + ": not a report (needs \"records\" and \"pass\")");
  }
  Json by_tag = Json::object();
  for (const auto& tag : property_tags()) by_tag[tag] = Json{{"records", 0}, {"instances", 0}, {"failures", 0}};
  Json failing = Json::array();
  bool all_passed = true;
  for (const auto& rec : source["records"]) {
    if (!rec.is_object() || !rec.contains("tag") || !rec["tag"].is_string() || !is_property_tag(rec["tag"])) {
      throw Error(ErrorCode::kParse, path + ": record without a known property tag");
    }
    const auto count = rec.value("failure_count", std::size_t{0});
    const bool empty = !rec.contains("failures") || rec["failures"].empty();
    if ((count == 0) != empty) throw Error(ErrorCode::kParse, path + ": failure count and failure list disagree");
    Json& slot = by_tag[rec["tag"].get<std::string>()];
    slot["records"] = slot["records"].get<std::size_t>() + 1;
    slot["instances"] = slot["instances"].get<std::size_t>() + rec.value("instances", std::size_t{0});
    slot["failures"] = slot["failures"].get<std::size_t>() + count;
    if (count > 0) {
      all_passed = false;
      failing.push_back(Json{{"name", rec.value("name", "")}, {"tag", rec["tag"]}, {"failure_count", count}});
    }
  }
  if (all_passed != source["pass"].get<bool>()) throw Error(ErrorCode::kParse, path + ": pass flag contradicts records");
  for (auto it = by_tag.begin(); it != by_tag.end();) {
    it = (*it)["records"] == 0 ? by_tag.erase(it) : std::next(it);
  }
  Json out{{"command", "report"}, {"source", source.value("command", "")}, {"pass", all_passed},
           {"by_tag", std::move(by_tag)}, {"failing", std::move(failing)}};
  return CommandOutcome{std::move(out), all_passed ? kExitPass : kExitCheckFailed};
}

Json error_json(const std::string& name, ErrorCode code, const std::string& message,
                const std::vector<std::size_t>& witness) {
  return Json{{"command", name},
              {"error", Json{{"code", error_code_name(code)}, {"message", message}, {"witness", witness}}}};
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  RunConfig config;
  if (j.is_null()) return config;
  if (!j.is_object()) throw Error(ErrorCode::kParse, "config must be an object");
  try {
    if (j.contains("mode")) config.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("tolerance")) config.tolerance = j["tolerance"].get<double>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) config.trials = j["trials"].get<std::size_t>();
    if (j.contains("n")) config.n = j["n"].get<std::size_t>();
    if (j.contains("k")) config.k = j["k"].get<std::size_t>();
    if (j.contains("inject_mutation")) config.inject_mutation = j["inject_mutation"].get<bool>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad config value: ") + e.what());
  }
  config.validate();
  return config;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "dist", "glue", "push", "extend", "check", "report"};
  return names;
}

CommandOutcome run_command(const std::string& name, const Json& request) {
  try {
    if (!request.is_object()) throw Error(ErrorCode::kParse, "request must be an object");
    const Json args = request.value("args", Json::object());
    const RunConfig config = config_from_json(request.value("config", Json::object()));
    const bool timing = request.value("timing", false);
    if (name == "report") return cmd_report(args);

    const auto start = std::chrono::steady_clock::now();
    Report report;
    if (name == "validate") report = cmd_validate(args, config);
    else if (name == "dist") report = cmd_dist(args, config);
    else if (name == "glue") report = cmd_glue(args, config);
    else if (name == "push") report = cmd_push(args, config);
    else if (name == "extend") report = cmd_extend(args, config);
    else if (name == "check") report = cmd_check(args, config);
    else throw Error(ErrorCode::kParse, "unknown command \"" + name + "\"");
    if (timing) {
      report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return CommandOutcome{report.to_json(), report.pass() ? kExitPass : kExitCheckFailed};
  } catch (const Error& e) {
    return CommandOutcome{error_json(name, e.code(), e.what(), e.witness()), kExitUsage};
  } catch (const Json::exception& e) {
    return CommandOutcome{error_json(name, ErrorCode::kParse, e.what(), {}), kExitUsage};
  } catch (const std::exception& e) {
    return CommandOutcome{error_json(name, ErrorCode::kInternal, e.what(), {}), kExitUsage};
  }
}

}  // namespace zfun
