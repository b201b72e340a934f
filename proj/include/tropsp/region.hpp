// Copyright 2026 The tropsp Authors
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
//
// Polyhedral parameter regions attached to shortest-path trees: a
// conjunction of +-1-coefficient inequalities intersected with the bound
// box, classified as full-dimensional, lower-dimensional or empty by a small
// interior-margin linear program.

#ifndef TROPSP_REGION_HPP_
#define TROPSP_REGION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tropsp/tropical.hpp"

namespace tropsp {

// coeffs . x <= rhs with coefficients in {-1, +1} over distinct variables
// (differences of multilinear monomials after cancelling shared variables).
struct LinearInequality {
  std::vector<std::pair<int, int>> coeffs;  // (variable, +-1), sorted by variable
  double rhs = 0.0;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

// a <= b as a linear inequality over the parameters: vars(a) - vars(b) on
// the left, constants difference on the right.  Both monomials must be
// finite.
LinearInequality inequality_between(const Monomial& a, const Monomial& b);

enum class RegionStatus { Unknown, FullDim, LowerDim, Empty };

struct Region {
  std::vector<LinearInequality> inequalities;
  BoundsBox box;
  RegionStatus status = RegionStatus::Unknown;
  std::optional<std::vector<double>> witness;
};

// Decides feasibility and dimension by maximizing an interior margin eps:
//   coeffs.x + eps <= rhs        for every inequality,
//   lower_i + eps <= x_i,  x_i + eps <= upper_i (finite uppers only),
//   0 <= eps <= 1.
// Infeasible => Empty; eps* > tol (scaled by max |rhs|) => FullDim with the
// maximizer as interior witness; otherwise LowerDim.  Pure function of the
// region; duplicated or reordered inequalities do not change the outcome.
Region classify(const Region& region, double tol = 1e-9);

}  // namespace tropsp

#endif  // TROPSP_REGION_HPP_
