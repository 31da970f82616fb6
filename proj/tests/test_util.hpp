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

#ifndef ZFUN_TESTS_TEST_UTIL_HPP_
#define ZFUN_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "doctest.h"
#include "zfun/error.hpp"
#include "zfun/metric_space.hpp"

namespace zfun::testing {

inline Rational q(const char* text) { return parse_rational(text); }

// Space from labels and a matrix of rational strings.
inline SpaceRef space(std::vector<std::string> labels, std::initializer_list<std::initializer_list<const char*>> rows) {
  DistanceMatrix d;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const char* x : row) r.push_back(q(x));
    d.push_back(std::move(r));
  }
  return make_space(std::move(labels), std::move(d));
}

inline SpaceRef two_point(const char* dist = "1") { return space({"a", "b"}, {{"0", dist}, {dist, "0"}}); }

// Error code thrown by `body`, failing the test when nothing is thrown.
template <class Body>
ErrorCode code_of(Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternal;
}

}  // namespace zfun::testing

#endif  // ZFUN_TESTS_TEST_UTIL_HPP_
