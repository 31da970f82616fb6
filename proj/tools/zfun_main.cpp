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

// zfun: command-line front end. Parses flags, forwards the request to the
// library through its C interface and writes the JSON report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zfun/zfun.h"

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::string mode = "exact";
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::size_t trials = 100;
  std::string output;
  bool timing = false;
  bool inject_mutation = false;
};

int emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text << '\n';
    return std::cout ? 0 : 2;
  }
  std::ofstream out(output, std::ios::binary);
  out << text << '\n';
  if (!out) {
    std::cerr << "zfun: cannot write " << output << '\n';
    return 2;
  }
  return 0;
}

// Extend arguments are either files or inline JSON.
Json path_or_inline(const std::string& text) {
  if (!text.empty() && text.front() == '{') return Json::parse(text, nullptr, false);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-scale functor and metric extension checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--mode", g.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--seed", g.seed, "generator seed (default 42)")->envname("ZFUN_SEED");
  app.add_option("--tolerance", g.tolerance, "float-mode tolerance")->check(CLI::PositiveNumber);
  app.add_option("--trials", g.trials, "randomized instances per property")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", g.output, "write the report here instead of standard output");
  app.add_flag("--timing", g.timing, "add wall-clock duration_ms to the report");
  app.add_flag("--inject-mutation", g.inject_mutation)->group("");

  Json args = Json::object();
  std::string a1, a2, anchor, map, measure, step, certificate = "both", suite;
  bool check_laws = false, decompose = false;
  std::size_t n = 4, k = 2;

  auto* validate = app.add_subcommand("validate", "check a space file against the metric axioms");
  validate->add_option("space", a1, "space file")->required();

  auto* dist = app.add_subcommand("dist", "Kantorovich distance between two measures");
  dist->add_option("mu", a1, "measure file")->required();
  dist->add_option("nu", a2, "measure file")->required();
  dist->add_option("--certificate", certificate, "plan, potential, both or none")
      ->check(CLI::IsMember({"plan", "potential", "both", "none"}));

  auto* glue = app.add_subcommand("glue", "glue a space (and/or a map) to an anchor");
  glue->add_option("space", a1, "space file");
  glue->add_option("--anchor", anchor, "anchor space file (default: two points at distance 1)");
  glue->add_option("--map", map, "map file to glue");

  auto* push = app.add_subcommand("push", "push a measure or step function forward along a map");
  push->add_option("map", a1, "map file")->required();
  auto* push_measure = push->add_option("--measure", measure, "measure file");
  auto* push_step = push->add_option("--step", step, "step-function file");
  push_measure->excludes(push_step);

  auto* extend = app.add_subcommand("extend", "extend a map K -> L to the ambient space of a fixture");
  extend->add_option("fixture", a1, "fixture file or inline JSON {n, k, seed?, metric?}")->required();
  extend->add_option("map", a2, "map file or inline JSON")->required();
  extend->add_flag("--check-laws", check_laws, "also verify the fixture and extension laws");
  extend->add_flag("--decompose", decompose, "decompose a K-preserving bijection");

  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", suite, "metric, measure, kantorovich, scheme, step or all")->required();
  check->add_option("--n", n, "ambient size of the configurable scheme fixture");
  check->add_option("--k", k, "member size of the configurable scheme fixture");

  auto* report = app.add_subcommand("report", "summarize a saved report by property tag");
  report->add_option("file", a1, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  if (name == "validate") {
    args["space"] = a1;
  } else if (name == "dist") {
    args = Json{{"mu", a1}, {"nu", a2}, {"certificate", certificate}};
  } else if (name == "glue") {
    if (!a1.empty()) args["space"] = a1;
    if (!anchor.empty()) args["anchor"] = anchor;
    if (!map.empty()) args["map"] = map;
  } else if (name == "push") {
    args["map"] = a1;
    if (!measure.empty()) args["measure"] = measure;
    if (!step.empty()) args["step"] = step;
  } else if (name == "extend") {
    Json fixture = path_or_inline(a1);
    Json map_arg = path_or_inline(a2);
    if (fixture.is_discarded() || map_arg.is_discarded()) {
      std::cerr << "zfun: extend arguments must be files or valid inline JSON\n";
      return 2;
    }
    args = Json{{"fixture", fixture}, {"map", map_arg}, {"check_laws", check_laws}, {"decompose", decompose}};
  } else if (name == "check") {
    args["suite"] = suite;
  } else if (name == "report") {
    args["report"] = a1;
  }

  Json config{{"mode", g.mode}, {"seed", g.seed}, {"tolerance", g.tolerance}, {"trials", g.trials},
              {"n", n},         {"k", k}};
  if (g.inject_mutation) config["inject_mutation"] = true;
  const Json request{{"args", args}, {"config", config}, {"timing", g.timing}};

  char* out = nullptr;
  int exit_code = 2;
  if (zfun_run_command(name.c_str(), request.dump().c_str(), &out, &exit_code) != ZFUN_OK) {
    std::cerr << "zfun: " << zfun_last_error() << '\n';
    return 2;
  }
  const std::string text(out);
  zfun_string_free(out);

  if (exit_code == 2) {
    const Json parsed = Json::parse(text, nullptr, false);
    if (!parsed.is_discarded() && parsed.contains("error")) {
      std::cerr << "zfun " << name << ": " << parsed["error"].value("code", "") << ": "
                << parsed["error"].value("message", "") << '\n';
    }
  }
  const int written = emit(text, g.output);
  return written != 0 ? written : exit_code;
}
