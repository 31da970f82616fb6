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

#include "zfun/error.hpp"

namespace zfun {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kAnchorDiameterNotOne: return "AnchorDiameterNotOne";
    case ErrorCode::kAnchorMismatch: return "AnchorMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kTargetMismatch: return "TargetMismatch";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kInvalidMeasure: return "InvalidMeasure";
    case ErrorCode::kInfeasibleMass: return "InfeasibleMass";
    case ErrorCode::kNotInFamily: return "NotInFamily";
    case ErrorCode::kInvalidMetric: return "InvalidMetric";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kNotSetwiseInvariant: return "NotSetwiseInvariant";
    case ErrorCode::kValueOutsideImage: return "ValueOutsideImage";
    case ErrorCode::kBadN: return "BadN";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "InternalError";
}

}  // namespace zfun
