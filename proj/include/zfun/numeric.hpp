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

#ifndef ZFUN_NUMERIC_HPP_
#define ZFUN_NUMERIC_HPP_

#include <cmath>

#include "zfun/rational.hpp"

namespace zfun {

// Sign tests shared by the exact and floating-point solver instantiations.
template <class T>
struct Numeric;

template <>
struct Numeric<Rational> {
  static bool positive(const Rational& x) { return sgn(x) > 0; }
  static bool negative(const Rational& x) { return sgn(x) < 0; }
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct Numeric<double> {
  static constexpr double kEps = 1e-12;
  static bool positive(double x) { return x > kEps; }
  static bool negative(double x) { return x < -kEps; }
  static bool zero(double x) { return std::abs(x) <= kEps; }
  static bool less(double a, double b) { return a < b - kEps; }
};

}  // namespace zfun

#endif  // ZFUN_NUMERIC_HPP_
