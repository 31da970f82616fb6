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

/* C interface to the zfun library. Every object is an opaque handle released
 * with its _free function; every string handed out is released with
 * zfun_string_free. Functions return a zfun_status; on failure the message of
 * the most recent error on the calling thread is available from
 * zfun_last_error(). Numbers cross the boundary as exact rational strings
 * such as "3/2". */

#ifndef ZFUN_ZFUN_H_
#define ZFUN_ZFUN_H_

#include <stddef.h>

#if defined(_WIN32)
#define ZFUN_API __declspec(dllexport)
#else
#define ZFUN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zfun_status {
  ZFUN_OK = 0,
  ZFUN_ERR_NULL_ARGUMENT = 1,
  ZFUN_ERR_PARSE = 2,
  ZFUN_ERR_IO = 3,
  ZFUN_ERR_AXIOM_VIOLATION = 4,
  ZFUN_ERR_ANCHOR = 5,        /* anchor diameter not 1, or anchors differ */
  ZFUN_ERR_MISMATCH = 6,      /* domain, space or target mismatch */
  ZFUN_ERR_UNKNOWN_POINT = 7,
  ZFUN_ERR_INVALID_MEASURE = 8,
  ZFUN_ERR_INFEASIBLE_MASS = 9,
  ZFUN_ERR_NOT_IN_FAMILY = 10,
  ZFUN_ERR_INVALID_METRIC = 11,
  ZFUN_ERR_BAD_PARAMETERS = 12,
  ZFUN_ERR_NOT_SETWISE_INVARIANT = 13,
  ZFUN_ERR_VALUE_OUTSIDE_IMAGE = 14,
  ZFUN_ERR_UNKNOWN_SUITE = 15,
  ZFUN_ERR_INTERNAL = 16
} zfun_status;

typedef struct zfun_space zfun_space;
typedef struct zfun_measure zfun_measure;
typedef struct zfun_map zfun_map;
typedef struct zfun_step zfun_step;

ZFUN_API const char* zfun_version(void);
/* Message of the last failure on this thread; "" when none. Valid until the
 * next failing call on the same thread. */
ZFUN_API const char* zfun_last_error(void);
ZFUN_API const char* zfun_status_name(zfun_status status);
ZFUN_API void zfun_string_free(char* text);

/* Spaces: {"points": [...], "dist": [[...]]}. */
ZFUN_API zfun_status zfun_space_from_json(const char* json, zfun_space** out);
ZFUN_API zfun_status zfun_space_load(const char* path, zfun_space** out);
ZFUN_API void zfun_space_free(zfun_space* space);
ZFUN_API zfun_status zfun_space_size(const zfun_space* space, size_t* out);
ZFUN_API zfun_status zfun_space_diameter(const zfun_space* space, char** out);
ZFUN_API zfun_status zfun_space_to_json(const zfun_space* space, char** out);
/* K glued to the default anchor, or to `anchor` when not NULL. */
ZFUN_API zfun_status zfun_space_glue(const zfun_space* core, const zfun_space* anchor, zfun_space** out);

/* Measures: {"space": ..., "weights": {...}}. */
ZFUN_API zfun_status zfun_measure_from_json(const char* json, zfun_measure** out);
ZFUN_API void zfun_measure_free(zfun_measure* measure);
ZFUN_API zfun_status zfun_measure_to_json(const zfun_measure* measure, char** out);
ZFUN_API zfun_status zfun_measure_dirac(const zfun_space* space, const char* label, zfun_measure** out);
/* Exact Kantorovich distance. */
ZFUN_API zfun_status zfun_kantorovich(const zfun_measure* mu, const zfun_measure* nu, char** out);

/* Maps: {"domain": ..., "codomain": ..., "assignment": {...}}. */
ZFUN_API zfun_status zfun_map_from_json(const char* json, zfun_map** out);
ZFUN_API void zfun_map_free(zfun_map* map);
ZFUN_API zfun_status zfun_map_to_json(const zfun_map* map, char** out);
ZFUN_API zfun_status zfun_map_sup_distance(const zfun_map* f, const zfun_map* g, char** out);
ZFUN_API zfun_status zfun_map_pushforward(const zfun_map* map, const zfun_measure* mu, zfun_measure** out);

/* Step functions: {"target": ..., "breakpoints": [...], "values": [...]}. */
ZFUN_API zfun_status zfun_step_from_json(const char* json, zfun_step** out);
ZFUN_API void zfun_step_free(zfun_step* step);
ZFUN_API zfun_status zfun_step_to_json(const zfun_step* step, char** out);
ZFUN_API zfun_status zfun_step_distance(const zfun_step* f, const zfun_step* g, char** out);
ZFUN_API zfun_status zfun_step_push(const zfun_map* map, const zfun_step* step, zfun_step** out);

/* Runs a CLI command. `request_json` is {"args": {...}, "config": {...},
 * "timing": bool}; the report (or error object) is written to *out_json and
 * the command's exit code (0 pass, 1 check failure, 2 usage/IO/parse) to
 * *exit_code. Returns ZFUN_OK whenever a report was produced, including
 * failing ones. */
ZFUN_API zfun_status zfun_run_command(const char* name, const char* request_json, char** out_json, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* ZFUN_ZFUN_H_ */
