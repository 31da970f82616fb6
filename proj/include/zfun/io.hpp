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

#ifndef ZFUN_IO_HPP_
#define ZFUN_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "zfun/kantorovich.hpp"
#include "zfun/measure.hpp"
#include "zfun/metric_space.hpp"
#include "zfun/step_function.hpp"

namespace zfun {

using Json = nlohmann::ordered_json;

// Reading. Every `<path|inline>` slot accepts either an inline object or a
// string naming a file, resolved relative to `base`. Numbers are strings
// ("3/2", "0.25"); plain JSON integers are accepted too. Errors surface as
// Error(kParse) / Error(kIo) or the owning module's error.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

SpaceRef space_from_json(const Json& j, const std::filesystem::path& base, const ValidationOptions& options = {});
MetricMap map_from_json(const Json& j, const std::filesystem::path& base, const ValidationOptions& options = {});
ProbMeasure measure_from_json(const Json& j, const std::filesystem::path& base,
                              const ValidationOptions& options = {});
StepFunction step_from_json(const Json& j, const std::filesystem::path& base,
                            const ValidationOptions& options = {});

SpaceRef load_space(const std::filesystem::path& path, const ValidationOptions& options = {});
MetricMap load_map(const std::filesystem::path& path, const ValidationOptions& options = {});
ProbMeasure load_measure(const std::filesystem::path& path, const ValidationOptions& options = {});
StepFunction load_step(const std::filesystem::path& path, const ValidationOptions& options = {});

// The raw point list and matrix of a space object, unvalidated.
void raw_space_from_json(const Json& j, std::vector<std::string>& points, DistanceMatrix& dist);

Rational rational_from_json(const Json& j);

// Writing. Output is always inline and always uses canonical rational strings.
Json to_json(const Rational& value);
Json to_json(const FiniteMetricSpace& space);
Json to_json(const MetricMap& map);
Json to_json(const ProbMeasure& measure);
Json to_json(const StepFunction& step);
Json to_json(const LipschitzPotential& potential);
Json to_json(const TransportPlan& plan);

// Shortest text that reads back as the same double (float-mode output).
std::string format_double(double value);

}  // namespace zfun

#endif  // ZFUN_IO_HPP_
