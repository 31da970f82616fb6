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

#ifndef ZFUN_RATIONAL_HPP_
#define ZFUN_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zfun {

// Exact arithmetic for every distance, weight and breakpoint in the library.
using Rational = mpq_class;

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// unreduced values break equality and arithmetic.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "3", "-3/2", "0.125" or "1e-3" into an exact rational. Throws
// zfun::Error(kParse) on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double value);

}  // namespace zfun

#endif  // ZFUN_RATIONAL_HPP_
