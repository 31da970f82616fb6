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

#ifndef ZFUN_SIMPLEX_HPP_
#define ZFUN_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "zfun/error.hpp"
#include "zfun/numeric.hpp"

namespace zfun {

enum class LpStatus { kOptimal, kUnbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  T value{};
  std::vector<T> x;
  std::size_t pivots = 0;
};

// Dense primal simplex for
//
//   maximize c·x  subject to  A x <= b,  x >= 0,
//
// with b >= 0 so that the slack basis is feasible. Bland's rule (lowest
// eligible index for both the entering and the leaving variable) makes the
// pivot sequence deterministic and rules out cycling.
template <class T>
LpResult<T> maximize_slack_feasible(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                                    const std::vector<T>& c) {
  using N = Numeric<T>;
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  const std::size_t width = n + m;
  if (b.size() != m) throw Error(ErrorCode::kInternal, "simplex: rhs size mismatch");
  for (const auto& bi : b) {
    if (N::negative(bi)) throw Error(ErrorCode::kInternal, "simplex: origin is infeasible");
  }

  std::vector<std::vector<T>> tab(m, std::vector<T>(width, T(0)));
  std::vector<T> rhs(b);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::kInternal, "simplex: ragged constraint matrix");
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = T(1);
    basis[i] = n + i;
  }
  std::vector<T> reduced(width, T(0));
  for (std::size_t j = 0; j < n; ++j) reduced[j] = c[j];

  LpResult<T> result;
  result.value = T(0);
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (N::positive(reduced[j])) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    T best_ratio{};
    for (std::size_t i = 0; i < m; ++i) {
      if (!N::positive(tab[i][enter])) continue;
      T ratio = rhs[i] / tab[i][enter];
      if (leave == m || N::less(ratio, best_ratio) ||
          (!N::less(best_ratio, ratio) && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      result.status = LpStatus::kUnbounded;
      return result;
    }

    T pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      T factor = tab[i][enter];
      if (N::zero(factor)) continue;
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    T factor = reduced[enter];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= factor * tab[leave][j];
    result.value += factor * rhs[leave];
    basis[leave] = enter;
    ++result.pivots;
  }

  result.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = rhs[i];
  }
  return result;
}

}  // namespace zfun

#endif  // ZFUN_SIMPLEX_HPP_
