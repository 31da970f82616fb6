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

#include "zfun/zfun.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "zfun/commands.hpp"
#include "zfun/io.hpp"

struct zfun_space {
  zfun::SpaceRef value;
};
struct zfun_measure {
  zfun::ProbMeasure value;
};
struct zfun_map {
  zfun::MetricMap value;
};
struct zfun_step {
  zfun::StepFunction value;
};

namespace {

thread_local std::string last_error;

zfun_status status_of(zfun::ErrorCode code) {
  using zfun::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return ZFUN_ERR_PARSE;
    case ErrorCode::kIo: return ZFUN_ERR_IO;
    case ErrorCode::kAxiomViolation: return ZFUN_ERR_AXIOM_VIOLATION;
    case ErrorCode::kAnchorDiameterNotOne:
    case ErrorCode::kAnchorMismatch: return ZFUN_ERR_ANCHOR;
    case ErrorCode::kDomainMismatch:
    case ErrorCode::kSpaceMismatch:
    case ErrorCode::kTargetMismatch: return ZFUN_ERR_MISMATCH;
    case ErrorCode::kUnknownPoint: return ZFUN_ERR_UNKNOWN_POINT;
    case ErrorCode::kInvalidMeasure: return ZFUN_ERR_INVALID_MEASURE;
    case ErrorCode::kInfeasibleMass: return ZFUN_ERR_INFEASIBLE_MASS;
    case ErrorCode::kNotInFamily: return ZFUN_ERR_NOT_IN_FAMILY;
    case ErrorCode::kInvalidMetric: return ZFUN_ERR_INVALID_METRIC;
    case ErrorCode::kBadParameters:
    case ErrorCode::kBadN: return ZFUN_ERR_BAD_PARAMETERS;
    case ErrorCode::kNotSetwiseInvariant: return ZFUN_ERR_NOT_SETWISE_INVARIANT;
    case ErrorCode::kValueOutsideImage: return ZFUN_ERR_VALUE_OUTSIDE_IMAGE;
    case ErrorCode::kUnknownSuite: return ZFUN_ERR_UNKNOWN_SUITE;
    case ErrorCode::kInternal: return ZFUN_ERR_INTERNAL;
  }
  return ZFUN_ERR_INTERNAL;
}

zfun_status fail(zfun_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, turning exceptions into status codes.
template <class Body>
zfun_status guarded(Body&& body) {
  try {
    body();
    return ZFUN_OK;
  } catch (const zfun::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZFUN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZFUN_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

zfun::Json parse(const char* json) { return zfun::parse_json_text(json); }

const std::filesystem::path kHere = ".";

}  // namespace

#define ZFUN_REQUIRE(...)                                                            \
  do {                                                                               \
    const void* ptrs[] = {__VA_ARGS__};                                              \
    for (const void* p : ptrs) {                                                     \
      if (!p) return fail(ZFUN_ERR_NULL_ARGUMENT, "null argument");                  \
    }                                                                                \
  } while (0)

extern "C" {

const char* zfun_version(void) { return "0.1.0"; }

const char* zfun_last_error(void) { return last_error.c_str(); }

const char* zfun_status_name(zfun_status status) {
  switch (status) {
    case ZFUN_OK: return "OK";
    case ZFUN_ERR_NULL_ARGUMENT: return "NullArgument";
    case ZFUN_ERR_PARSE: return "Parse";
    case ZFUN_ERR_IO: return "Io";
    case ZFUN_ERR_AXIOM_VIOLATION: return "AxiomViolation";
    case ZFUN_ERR_ANCHOR: return "Anchor";
    case ZFUN_ERR_MISMATCH: return "Mismatch";
    case ZFUN_ERR_UNKNOWN_POINT: return "UnknownPoint";
    case ZFUN_ERR_INVALID_MEASURE: return "InvalidMeasure";
    case ZFUN_ERR_INFEASIBLE_MASS: return "InfeasibleMass";
    case ZFUN_ERR_NOT_IN_FAMILY: return "NotInFamily";
    case ZFUN_ERR_INVALID_METRIC: return "InvalidMetric";
    case ZFUN_ERR_BAD_PARAMETERS: return "BadParameters";
    case ZFUN_ERR_NOT_SETWISE_INVARIANT: return "NotSetwiseInvariant";
    case ZFUN_ERR_VALUE_OUTSIDE_IMAGE: return "ValueOutsideImage";
    case ZFUN_ERR_UNKNOWN_SUITE: return "UnknownSuite";
    case ZFUN_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void zfun_string_free(char* text) { std::free(text); }

// --- spaces ---

zfun_status zfun_space_from_json(const char* json, zfun_space** out) {
  ZFUN_REQUIRE(json, out);
  return guarded([&] { *out = new zfun_space{zfun::space_from_json(parse(json), kHere)}; });
}

zfun_status zfun_space_load(const char* path, zfun_space** out) {
  ZFUN_REQUIRE(path, out);
  return guarded([&] { *out = new zfun_space{zfun::load_space(path)}; });
}

void zfun_space_free(zfun_space* space) { delete space; }

zfun_status zfun_space_size(const zfun_space* space, size_t* out) {
  ZFUN_REQUIRE(space, out);
  *out = space->value->size();
  return ZFUN_OK;
}

zfun_status zfun_space_diameter(const zfun_space* space, char** out) {
  ZFUN_REQUIRE(space, out);
  return guarded([&] { *out = copy_string(zfun::to_string(zfun::diameter(*space->value))); });
}

zfun_status zfun_space_to_json(const zfun_space* space, char** out) {
  ZFUN_REQUIRE(space, out);
  return guarded([&] { *out = copy_string(zfun::to_json(*space->value).dump()); });
}

zfun_status zfun_space_glue(const zfun_space* core, const zfun_space* anchor, zfun_space** out) {
  ZFUN_REQUIRE(core, out);
  return guarded([&] {
    *out = new zfun_space{zfun::glue_space(core->value, anchor ? anchor->value : zfun::default_anchor()).space};
  });
}

// --- measures ---

zfun_status zfun_measure_from_json(const char* json, zfun_measure** out) {
  ZFUN_REQUIRE(json, out);
  return guarded([&] { *out = new zfun_measure{zfun::measure_from_json(parse(json), kHere)}; });
}

void zfun_measure_free(zfun_measure* measure) { delete measure; }

zfun_status zfun_measure_to_json(const zfun_measure* measure, char** out) {
  ZFUN_REQUIRE(measure, out);
  return guarded([&] { *out = copy_string(zfun::to_json(measure->value).dump()); });
}

zfun_status zfun_measure_dirac(const zfun_space* space, const char* label, zfun_measure** out) {
  ZFUN_REQUIRE(space, label, out);
  return guarded([&] { *out = new zfun_measure{zfun::dirac(space->value, std::string(label))}; });
}

zfun_status zfun_kantorovich(const zfun_measure* mu, const zfun_measure* nu, char** out) {
  ZFUN_REQUIRE(mu, nu, out);
  return guarded([&] { *out = copy_string(zfun::to_string(zfun::kantorovich_primal(mu->value, nu->value).value)); });
}

// --- maps ---

zfun_status zfun_map_from_json(const char* json, zfun_map** out) {
  ZFUN_REQUIRE(json, out);
  return guarded([&] { *out = new zfun_map{zfun::map_from_json(parse(json), kHere)}; });
}

void zfun_map_free(zfun_map* map) { delete map; }

zfun_status zfun_map_to_json(const zfun_map* map, char** out) {
  ZFUN_REQUIRE(map, out);
  return guarded([&] { *out = copy_string(zfun::to_json(map->value).dump()); });
}

zfun_status zfun_map_sup_distance(const zfun_map* f, const zfun_map* g, char** out) {
  ZFUN_REQUIRE(f, g, out);
  return guarded([&] {
    if (!zfun::same_space(f->value.domain(), g->value.domain()) ||
        !zfun::same_space(f->value.codomain(), g->value.codomain())) {
      throw zfun::Error(zfun::ErrorCode::kDomainMismatch, "maps must share domain and codomain");
    }
    *out = copy_string(zfun::to_string(zfun::sup_distance(f->value, g->value)));
  });
}

zfun_status zfun_map_pushforward(const zfun_map* map, const zfun_measure* mu, zfun_measure** out) {
  ZFUN_REQUIRE(map, mu, out);
  return guarded([&] { *out = new zfun_measure{zfun::pushforward(map->value, mu->value)}; });
}

// --- step functions ---

zfun_status zfun_step_from_json(const char* json, zfun_step** out) {
  ZFUN_REQUIRE(json, out);
  return guarded([&] { *out = new zfun_step{zfun::step_from_json(parse(json), kHere)}; });
}

void zfun_step_free(zfun_step* step) { delete step; }

zfun_status zfun_step_to_json(const zfun_step* step, char** out) {
  ZFUN_REQUIRE(step, out);
  return guarded([&] { *out = copy_string(zfun::to_json(step->value).dump()); });
}

zfun_status zfun_step_distance(const zfun_step* f, const zfun_step* g, char** out) {
  ZFUN_REQUIRE(f, g, out);
  return guarded([&] { *out = copy_string(zfun::to_string(zfun::integral_metric(f->value, g->value))); });
}

zfun_status zfun_step_push(const zfun_map* map, const zfun_step* step, zfun_step** out) {
  ZFUN_REQUIRE(map, step, out);
  return guarded([&] { *out = new zfun_step{zfun::compose_pushforward(map->value, step->value)}; });
}

// --- commands ---

zfun_status zfun_run_command(const char* name, const char* request_json, char** out_json, int* exit_code) {
  ZFUN_REQUIRE(name, request_json, out_json, exit_code);
  return guarded([&] {
    zfun::CommandOutcome outcome;
    try {
      outcome = zfun::run_command(name, parse(request_json));
    } catch (const zfun::Error& e) {
      outcome.output = zfun::Json{{"command", name},
                                  {"error", {{"code", zfun::error_code_name(e.code())}, {"message", e.what()}}}};
      outcome.exit_code = zfun::kExitUsage;
    }
    *out_json = copy_string(outcome.output.dump(2));
    *exit_code = outcome.exit_code;
  });
}

}  // extern "C"
