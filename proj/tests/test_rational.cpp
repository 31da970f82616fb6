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

#include "test_util.hpp"
#include "zfun/rational.hpp"

using namespace zfun;
using testing::code_of;

TEST_SUITE("rational") {
  TEST_CASE("parses fractions, decimals and exponents exactly") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
  }

  TEST_CASE("rejects malformed numbers") {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "0x10"}) {
      CAPTURE(bad);
      CHECK(code_of([&] { (void)parse_rational(bad); }) == ErrorCode::kParse);
    }
  }

  TEST_CASE("ratio reduces and from_double is exact") {
    const Rational r = ratio(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    // 0.1 is not 1/10 in binary; the conversion keeps the dyadic value.
    CHECK(from_double(0.1) != Rational(1, 10));
    CHECK(to_double(from_double(0.1)) == 0.1);
    CHECK(from_double(0.375) == Rational(3, 8));
  }
}
