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

#ifndef ZFUN_KANTOROVICH_HPP_
#define ZFUN_KANTOROVICH_HPP_

#include <random>
#include <vector>

#include "zfun/measure.hpp"

namespace zfun {

// A real function on a space with |f(x) − f(y)| <= d(x, y).
struct LipschitzPotential {
  SpaceRef space;
  std::vector<Rational> values;
};

bool is_nonexpansive(const LipschitzPotential& f);

// A coupling of source and target: rows sum to the source weights, columns to
// the target weights.
struct TransportPlan {
  ProbMeasure source;
  ProbMeasure target;
  std::vector<std::vector<Rational>> matrix;

  Rational cost() const;
  bool has_exact_marginals() const;
};

struct DualSolution {
  Rational value;
  LipschitzPotential potential;  // optimal, pinned to 0 at the first point
};

struct PrimalSolution {
  Rational value;
  TransportPlan plan;
};

// sup over nonexpansive f of |∫f dμ − ∫f dν|, solved exactly as a linear
// program over the Lipschitz polytope. Throws Error(kSpaceMismatch).
DualSolution kantorovich_dual(const ProbMeasure& mu, const ProbMeasure& nu);

// Minimum transport cost Σ π[i][j]·d(i,j) over couplings π, solved as a
// min-cost flow. Throws Error(kSpaceMismatch).
PrimalSolution kantorovich_primal(const ProbMeasure& mu, const ProbMeasure& nu);

// primal − dual (0 by duality).
Rational duality_gap(const ProbMeasure& mu, const ProbMeasure& nu);

// Floating-point route: both solvers run in double.
struct FloatKantorovich {
  double primal = 0;
  double dual = 0;
  double gap = 0;
  double mass_drift = 0;  // largest |Σw − 1| seen before renormalising
  std::vector<double> potential;
  std::vector<std::vector<double>> plan;
};

// Distances and weights in double. Weights are renormalised to total 1;
// drift beyond 1e-12 is rejected with Error(kInfeasibleMass).
FloatKantorovich kantorovich_float(const std::vector<std::vector<double>>& dist, std::vector<double> mu,
                                   std::vector<double> nu);
FloatKantorovich kantorovich_float(const ProbMeasure& mu, const ProbMeasure& nu);

struct DiameterCheck {
  Rational dirac_max;      // max over Dirac pairs
  Rational space_diameter;
  Rational sampled_max;    // max over the sampled measure pairs
  std::size_t samples = 0;

  bool holds() const { return dirac_max == space_diameter && sampled_max <= space_diameter; }
};

DiameterCheck measure_diameter_check(const SpaceRef& space, std::size_t samples, std::mt19937_64& rng);

struct MapIsometryCheck {
  Rational dirac_sup;    // max_x K(M(φ)δ_x, M(ψ)δ_x)
  Rational sup_dist;     // d_sup(φ, ψ)
  Rational sampled_max;  // max over sampled interior measures
  std::size_t samples = 0;

  bool holds() const { return dirac_sup == sup_dist && sampled_max <= sup_dist; }
};

// Throws Error(kDomainMismatch) unless φ, ψ share domain and codomain.
MapIsometryCheck map_isometry_check(const MetricMap& phi, const MetricMap& psi, std::size_t samples,
                                    std::mt19937_64& rng);

}  // namespace zfun

#endif  // ZFUN_KANTOROVICH_HPP_
