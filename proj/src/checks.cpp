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

#include "zfun/checks.hpp"

#include <algorithm>
#include <sstream>

#include "check_util.hpp"

namespace zfun {

const char* mode_name(Mode mode) { return mode == Mode::kExact ? "exact" : "float"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::kExact;
  if (text == "float") return Mode::kFloat;
  throw Error(ErrorCode::kParse, "mode must be exact or float, got \"" + text + "\"");
}

void RunConfig::validate() const {
  if (!(tolerance > 0)) throw Error(ErrorCode::kBadParameters, "tolerance must be positive");
  if (trials < 1) throw Error(ErrorCode::kBadParameters, "trials must be at least 1");
}

const std::vector<std::string>& property_tags() {
  static const std::vector<std::string> tags = {"(a)",  "(b)",  "(c)",  "(d)",  "(e)",  "(f)",  "(g)",
                                                "(h)",  "(i)",  "(Λ1)", "(Λ2)", "(Λ3)", "(Λ4)", "(Λ5)",
                                                "plumbing"};
  return tags;
}

bool is_property_tag(const std::string& tag) {
  const auto& tags = property_tags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

CheckRecord::CheckRecord(std::string name, std::string tag) : name_(std::move(name)), tag_(std::move(tag)) {
  if (!is_property_tag(tag_)) throw Error(ErrorCode::kInternal, "unknown property tag " + tag_);
}

void CheckRecord::fail(std::string message, Json witness) {
  ++failure_count_;
  if (failures_.size() < kMaxWitnesses) failures_.push_back(Failure{std::move(message), std::move(witness)});
}

Json CheckRecord::to_json() const {
  Json failures = Json::array();
  for (const auto& f : failures_) failures.push_back(Json{{"message", f.message}, {"witness", f.witness}});
  return Json{{"name", name_},         {"tag", tag_},           {"instances", instances_},
              {"passed", passed()},    {"failure_count", failure_count_}, {"failures", std::move(failures)},
              {"values", values_}};
}

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed(); });
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["config"] = config;
  for (const auto& [key, value] : payload.items()) out[key] = value;
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(r.to_json());
  out["records"] = std::move(recs);
  out["pass"] = pass();
  if (duration_ms) out["duration_ms"] = *duration_ms;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"metric", "measure", "kantorovich", "scheme", "step"};
  return names;
}

Report run_check(const std::string& suite, const RunConfig& config) {
  config.validate();
  Report report;
  report.command = "check " + suite;
  std::ostringstream tol;
  tol << config.tolerance;
  report.config = Json{{"mode", mode_name(config.mode)}, {"seed", config.seed},   {"trials", config.trials},
                       {"tolerance", tol.str()},         {"n", config.n},         {"k", config.k}};
  if (config.inject_mutation) report.config["inject_mutation"] = true;

  auto run = [&](const std::string& name) {
    if (name == "metric") run_metric_suite(config, report.records);
    else if (name == "measure") run_measure_suite(config, report.records);
    else if (name == "kantorovich") run_kantorovich_suite(config, report.records);
    else if (name == "scheme") run_scheme_suite(config, report.records);
    else if (name == "step") run_step_suite(config, report.records);
    else throw Error(ErrorCode::kUnknownSuite, "unknown suite \"" + name + "\"");
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) run(name);
  } else {
    run(suite);
  }
  return report;
}

namespace detail {

std::vector<SpaceRef> test_anchors() {
  const Rational z(0), one(1), half(1, 2);
  return {
      default_anchor(),
      make_space({"a", "b", "c"}, {{z, one, one}, {one, z, one}, {one, one, z}}),
      make_space({"a", "b", "c"}, {{z, half, one}, {half, z, half}, {one, half, z}}),
  };
}

}  // namespace detail
}  // namespace zfun
