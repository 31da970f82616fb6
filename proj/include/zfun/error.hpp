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

#ifndef ZFUN_ERROR_HPP_
#define ZFUN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace zfun {

enum class ErrorCode {
  kParse,
  kIo,
  kAxiomViolation,
  kAnchorDiameterNotOne,
  kAnchorMismatch,
  kDomainMismatch,
  kSpaceMismatch,
  kTargetMismatch,
  kUnknownPoint,
  kInvalidMeasure,
  kInfeasibleMass,
  kNotInFamily,
  kInvalidMetric,
  kBadParameters,
  kNotSetwiseInvariant,
  kValueOutsideImage,
  kBadN,
  kUnknownSuite,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  // Indices that locate the failure (points, segments, ...); may be empty.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace zfun

#endif  // ZFUN_ERROR_HPP_
