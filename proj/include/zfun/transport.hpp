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

#ifndef ZFUN_TRANSPORT_HPP_
#define ZFUN_TRANSPORT_HPP_

#include <cstddef>
#include <vector>

#include "zfun/error.hpp"
#include "zfun/numeric.hpp"

namespace zfun {

template <class T>
struct TransportSolution {
  T cost{};
  std::vector<std::vector<T>> plan;  // plan[i][j]: mass moved from source i to sink j
  std::size_t augmentations = 0;
};

// Min-cost transportation by successive shortest augmenting paths on the
// residual bipartite network s -> sources -> sinks -> t. Shortest paths use
// Bellman-Ford since residual back arcs carry negative cost. With rational
// data every augmentation is a scaled-integer Ford-Fulkerson step, so the
// loop terminates.
template <class T>
TransportSolution<T> solve_transport(const std::vector<T>& supply, const std::vector<T>& demand,
                                     const std::vector<std::vector<T>>& cost) {
  using N = Numeric<T>;
  const std::size_t n = supply.size();
  const std::size_t m = demand.size();
  if (cost.size() != n) throw Error(ErrorCode::kInternal, "transport: cost rows mismatch");
  for (const auto& row : cost) {
    if (row.size() != m) throw Error(ErrorCode::kInternal, "transport: cost columns mismatch");
  }
  T total_supply(0), total_demand(0);
  for (const auto& s : supply) total_supply += s;
  for (const auto& d : demand) total_demand += d;
  if (!N::zero(T(total_supply - total_demand))) {
    throw Error(ErrorCode::kInfeasibleMass, "source and target masses differ");
  }

  // Node numbering: 0 = s, 1..n sources, n+1..n+m sinks, n+m+1 = t.
  const std::size_t s = 0;
  const std::size_t t = n + m + 1;
  const std::size_t nodes = n + m + 2;
  auto source = [](std::size_t i) { return 1 + i; };
  auto sink = [n](std::size_t j) { return 1 + n + j; };

  std::vector<T> supply_left(supply);
  std::vector<T> demand_left(demand);
  TransportSolution<T> out;
  out.plan.assign(n, std::vector<T>(m, T(0)));

  struct Arc {
    std::size_t from, to;
    std::size_t i, j;
    enum Kind { kFromSource, kForward, kBackward, kToSink } kind;
  };

  while (true) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
      if (N::positive(supply_left[i])) arcs.push_back({s, source(i), i, 0, Arc::kFromSource});
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        arcs.push_back({source(i), sink(j), i, j, Arc::kForward});
        if (N::positive(out.plan[i][j])) arcs.push_back({sink(j), source(i), i, j, Arc::kBackward});
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (N::positive(demand_left[j])) arcs.push_back({sink(j), t, 0, j, Arc::kToSink});
    }

    auto arc_cost = [&](const Arc& a) -> T {
      switch (a.kind) {
        case Arc::kForward: return cost[a.i][a.j];
        case Arc::kBackward: return T(-cost[a.i][a.j]);
        default: return T(0);
      }
    };

    std::vector<bool> reached(nodes, false);
    std::vector<T> dist(nodes, T(0));
    std::vector<std::size_t> pred(nodes, arcs.size());
    reached[s] = true;
    for (std::size_t round = 0; round + 1 < nodes; ++round) {
      bool changed = false;
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        const Arc& a = arcs[k];
        if (!reached[a.from]) continue;
        T candidate = dist[a.from] + arc_cost(a);
        if (!reached[a.to] || N::less(candidate, dist[a.to])) {
          reached[a.to] = true;
          dist[a.to] = candidate;
          pred[a.to] = k;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (!reached[t]) break;

    std::vector<std::size_t> path;
    for (std::size_t v = t; v != s; v = arcs[pred[v]].from) {
      path.push_back(pred[v]);
      if (path.size() > nodes) throw Error(ErrorCode::kInternal, "transport: residual cycle on path");
    }
    bool first = true;
    T bottleneck(0);
    auto tighten = [&](const T& cap) {
      if (first || N::less(cap, bottleneck)) bottleneck = cap;
      first = false;
    };
    for (auto k : path) {
      const Arc& a = arcs[k];
      if (a.kind == Arc::kFromSource) tighten(supply_left[a.i]);
      if (a.kind == Arc::kToSink) tighten(demand_left[a.j]);
      if (a.kind == Arc::kBackward) tighten(out.plan[a.i][a.j]);
    }
    for (auto k : path) {
      const Arc& a = arcs[k];
      switch (a.kind) {
        case Arc::kFromSource: supply_left[a.i] -= bottleneck; break;
        case Arc::kToSink: demand_left[a.j] -= bottleneck; break;
        case Arc::kForward: out.plan[a.i][a.j] += bottleneck; break;
        case Arc::kBackward: out.plan[a.i][a.j] -= bottleneck; break;
      }
    }
    ++out.augmentations;
  }

  for (const auto& left : supply_left) {
    if (N::positive(left)) throw Error(ErrorCode::kInternal, "transport: supply left unrouted");
  }
  out.cost = T(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.cost += out.plan[i][j] * cost[i][j];
  }
  return out;
}

}  // namespace zfun

#endif  // ZFUN_TRANSPORT_HPP_
