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

#ifndef ZFUN_CHECKS_HPP_
#define ZFUN_CHECKS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zfun/io.hpp"

namespace zfun {

enum class Mode { kExact, kFloat };

const char* mode_name(Mode mode);
// Throws Error(kParse) for anything but "exact" / "float".
Mode parse_mode(const std::string& text);

struct RunConfig {
  Mode mode = Mode::kExact;
  double tolerance = 1e-9;  // float mode only
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  // Scheme fixture used for the configurable part of the scheme suite.
  std::size_t n = 4;
  std::size_t k = 2;
  // Test-only: corrupt the fixture's Λ(d) to exercise a failing report.
  bool inject_mutation = false;

  // Throws Error(kBadParameters) unless tolerance > 0 and trials >= 1.
  void validate() const;
};

// Closed set of property tags a record may carry.
const std::vector<std::string>& property_tags();
bool is_property_tag(const std::string& tag);

struct Failure {
  std::string message;
  Json witness;
};

class CheckRecord {
 public:
  // Throws Error(kInternal) for a tag outside property_tags().
  CheckRecord(std::string name, std::string tag);

  void count(std::size_t instances = 1) { instances_ += instances; }
  void fail(std::string message, Json witness = Json::object());
  void set_value(const std::string& key, Json value) { values_[key] = std::move(value); }

  const std::string& name() const { return name_; }
  const std::string& tag() const { return tag_; }
  std::size_t instances() const { return instances_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<Failure>& failures() const { return failures_; }
  bool passed() const { return failure_count_ == 0; }

  Json to_json() const;

  // Only the first few failures keep their witnesses.
  static constexpr std::size_t kMaxWitnesses = 3;

 private:
  std::string name_;
  std::string tag_;
  std::size_t instances_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<Failure> failures_;
  Json values_ = Json::object();
};

struct Report {
  std::string command;
  Json config = Json::object();
  Json payload = Json::object();  // command-specific results, emitted at top level
  std::vector<CheckRecord> records;
  std::optional<double> duration_ms;  // emitted only when set

  bool pass() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();  // metric, measure, kantorovich, scheme, step

// Runs one suite or "all". Throws Error(kUnknownSuite).
Report run_check(const std::string& suite, const RunConfig& config);

// The individual suites append their records to `out`.
void run_metric_suite(const RunConfig& config, std::vector<CheckRecord>& out);
void run_measure_suite(const RunConfig& config, std::vector<CheckRecord>& out);
void run_kantorovich_suite(const RunConfig& config, std::vector<CheckRecord>& out);
void run_scheme_suite(const RunConfig& config, std::vector<CheckRecord>& out);
void run_step_suite(const RunConfig& config, std::vector<CheckRecord>& out);

// Greedy point-removal shrinking: repeatedly replaces `instance` with the
// first one-point-smaller candidate that still fails, until none does.
// `drop(instance, i)` returns the instance without point i, or nullopt when
// that removal is not meaningful.
template <class Instance>
Instance shrink_by_point_removal(Instance instance, const std::function<std::size_t(const Instance&)>& points,
                                 const std::function<std::optional<Instance>(const Instance&, std::size_t)>& drop,
                                 const std::function<bool(const Instance&)>& fails) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    const std::size_t size = points(instance);
    if (size <= 1) break;
    for (std::size_t i = 0; i < size; ++i) {
      auto smaller = drop(instance, i);
      if (smaller && fails(*smaller)) {
        instance = std::move(*smaller);
        progressed = true;
        break;
      }
    }
  }
  return instance;
}

}  // namespace zfun

#endif  // ZFUN_CHECKS_HPP_
