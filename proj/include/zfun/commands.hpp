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

#ifndef ZFUN_COMMANDS_HPP_
#define ZFUN_COMMANDS_HPP_

#include <string>

#include "zfun/checks.hpp"

namespace zfun {

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutcome {
  Json output;
  int exit_code = kExitPass;
};

// Reads the run configuration from {"mode", "seed", "tolerance", "trials",
// "n", "k", "inject_mutation"}; absent keys keep their defaults. Throws
// Error(kParse) on wrongly typed values and Error(kBadParameters) when the
// result fails RunConfig::validate().
RunConfig config_from_json(const Json& j);

// Runs one command. `request` is {"args": {...}, "config": {...}, "timing":
// bool}; args per command:
//   validate  {"space": path}
//   dist      {"mu": path, "nu": path, "certificate": "plan"|"potential"|"both"|"none"}
//   glue      {"space": path?, "anchor": path?, "map": path?}   (space or map required)
//   push      {"map": path, "measure": path} or {"map": path, "step": path}
//   extend    {"fixture": path|{n, k, seed?, metric?}, "map": path, "check_laws": bool, "decompose": bool}
//   check     {"suite": metric|measure|kantorovich|scheme|step|all}
//   report    {"report": path}
// Never throws: errors become {"command", "error": {code, message, witness}}
// with exit code 2.
CommandOutcome run_command(const std::string& name, const Json& request);

const std::vector<std::string>& command_names();

}  // namespace zfun

#endif  // ZFUN_COMMANDS_HPP_
