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

#include "zfun/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace zfun {
namespace fs = std::filesystem;

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, std::string(what) + " must be a string");
  return j.get<std::string>();
}

// Follows a string reference to a file; returns the object and the directory
// further references inside it resolve against.
std::pair<Json, fs::path> resolve(const Json& slot, const fs::path& base) {
  if (slot.is_string()) {
    fs::path p = fs::path(slot.get<std::string>());
    if (p.is_relative()) p = base / p;
    return {read_json_file(p), p.parent_path()};
  }
  if (!slot.is_object()) throw Error(ErrorCode::kParse, "expected an inline object or a file path");
  return {slot, base};
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": malformed JSON: " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
  throw Error(ErrorCode::kParse, "numbers must be strings such as \"3/2\" (got " + j.dump() + ")");
}

void raw_space_from_json(const Json& j, std::vector<std::string>& points, DistanceMatrix& dist) {
  const Json& p = field(j, "points");
  const Json& d = field(j, "dist");
  if (!p.is_array() || !d.is_array()) throw Error(ErrorCode::kParse, "points and dist must be arrays");
  points.clear();
  dist.clear();
  for (const auto& label : p) points.push_back(string_of(label, "point label"));
  for (const auto& row : d) {
    if (!row.is_array()) throw Error(ErrorCode::kParse, "dist rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    dist.push_back(std::move(r));
  }
}

SpaceRef space_from_json(const Json& j, const fs::path& base, const ValidationOptions& options) {
  auto [obj, dir] = resolve(j, base);
  std::vector<std::string> points;
  DistanceMatrix dist;
  raw_space_from_json(obj, points, dist);
  return make_space(std::move(points), std::move(dist), options);
}

MetricMap map_from_json(const Json& j, const fs::path& base, const ValidationOptions& options) {
  auto [obj, dir] = resolve(j, base);
  SpaceRef domain = space_from_json(field(obj, "domain"), dir, options);
  SpaceRef codomain = space_from_json(field(obj, "codomain"), dir, options);
  const Json& a = field(obj, "assignment");
  if (!a.is_object()) throw Error(ErrorCode::kParse, "assignment must be an object");
  std::map<std::string, std::string> assignment;
  for (const auto& [k, v] : a.items()) assignment[k] = string_of(v, "assigned value");
  return MetricMap::from_labels(std::move(domain), std::move(codomain), assignment);
}

ProbMeasure measure_from_json(const Json& j, const fs::path& base, const ValidationOptions& options) {
  auto [obj, dir] = resolve(j, base);
  SpaceRef space = space_from_json(field(obj, "space"), dir, options);
  const Json& w = field(obj, "weights");
  if (!w.is_object()) throw Error(ErrorCode::kParse, "weights must be an object");
  std::map<std::string, Rational> weights;
  for (const auto& [k, v] : w.items()) weights[k] = rational_from_json(v);
  return ProbMeasure::from_labels(std::move(space), weights);
}

StepFunction step_from_json(const Json& j, const fs::path& base, const ValidationOptions& options) {
  auto [obj, dir] = resolve(j, base);
  SpaceRef target = space_from_json(field(obj, "target"), dir, options);
  const Json& b = field(obj, "breakpoints");
  const Json& v = field(obj, "values");
  if (!b.is_array() || !v.is_array()) throw Error(ErrorCode::kParse, "breakpoints and values must be arrays");
  std::vector<Rational> breakpoints;
  for (const auto& t : b) breakpoints.push_back(rational_from_json(t));
  std::vector<std::string> values;
  for (const auto& x : v) values.push_back(string_of(x, "segment value"));
  return StepFunction::from_labels(std::move(target), std::move(breakpoints), values);
}

SpaceRef load_space(const fs::path& path, const ValidationOptions& options) {
  return space_from_json(read_json_file(path), path.parent_path(), options);
}
MetricMap load_map(const fs::path& path, const ValidationOptions& options) {
  return map_from_json(read_json_file(path), path.parent_path(), options);
}
ProbMeasure load_measure(const fs::path& path, const ValidationOptions& options) {
  return measure_from_json(read_json_file(path), path.parent_path(), options);
}
StepFunction load_step(const fs::path& path, const ValidationOptions& options) {
  return step_from_json(read_json_file(path), path.parent_path(), options);
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (const auto& row : space.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    dist.push_back(std::move(r));
  }
  return Json{{"points", space.labels()}, {"dist", std::move(dist)}};
}

Json to_json(const MetricMap& map) {
  Json assignment = Json::object();
  for (std::size_t x = 0; x < map.assignment().size(); ++x) {
    assignment[map.domain()->label(x)] = map.codomain()->label(map(x));
  }
  return Json{{"domain", to_json(*map.domain())}, {"codomain", to_json(*map.codomain())}, {"assignment", assignment}};
}

Json to_json(const ProbMeasure& measure) {
  Json weights = Json::object();
  for (auto i : measure.support()) weights[measure.space()->label(i)] = to_string(measure.weight(i));
  return Json{{"space", to_json(*measure.space())}, {"weights", std::move(weights)}};
}

Json to_json(const StepFunction& step) {
  Json breaks = Json::array();
  for (const auto& t : step.breakpoints()) breaks.push_back(to_string(t));
  Json values = Json::array();
  for (auto v : step.values()) values.push_back(step.target()->label(v));
  return Json{{"target", to_json(*step.target())}, {"breakpoints", std::move(breaks)}, {"values", std::move(values)}};
}

Json to_json(const LipschitzPotential& potential) {
  Json values = Json::object();
  for (std::size_t i = 0; i < potential.values.size(); ++i) {
    values[potential.space->label(i)] = to_string(potential.values[i]);
  }
  return values;
}

Json to_json(const TransportPlan& plan) {
  // Sparse list of moved masses, in row-major order.
  Json moves = Json::array();
  const auto& space = *plan.source.space();
  for (std::size_t i = 0; i < plan.matrix.size(); ++i) {
    for (std::size_t j = 0; j < plan.matrix[i].size(); ++j) {
      if (plan.matrix[i][j] == 0) continue;
      moves.push_back(Json{{"from", space.label(i)}, {"to", space.label(j)}, {"mass", to_string(plan.matrix[i][j])}});
    }
  }
  return moves;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace zfun
