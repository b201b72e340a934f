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
// Small dense two-phase primal simplex with Bland's rule.  The region
// feasibility problems have at most a few dozen variables and a few hundred
// rows, so there is no need for anything cleverer.

#ifndef TROPSP_SIMPLEX_HPP_
#define TROPSP_SIMPLEX_HPP_

#include <vector>

#include "tropsp/errors.hpp"

namespace tropsp {

struct NumericalFailureError : Error {
  using Error::Error;
};

// max c.x  subject to  A x <= b, x >= 0.  b may have negative entries.
struct LinearProgram {
  std::vector<std::vector<double>> a;  // rows
  std::vector<double> b;
  std::vector<double> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Throws NumericalFailureError if the pivot count exceeds a safety cap.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace tropsp

#endif  // TROPSP_SIMPLEX_HPP_
