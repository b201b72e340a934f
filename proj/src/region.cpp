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

#include "tropsp/region.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "tropsp/simplex.hpp"

namespace tropsp {

LinearInequality inequality_between(const Monomial& a, const Monomial& b) {
  if (a.is_infinite() || b.is_infinite()) {
    throw Error("inequality between infinite monomials");
  }
  LinearInequality out;
  for (VarSet s = a.vars & ~b.vars; s != 0; s &= s - 1) {
    out.coeffs.emplace_back(std::countr_zero(s), +1);
  }
  for (VarSet s = b.vars & ~a.vars; s != 0; s &= s - 1) {
    out.coeffs.emplace_back(std::countr_zero(s), -1);
  }
  std::sort(out.coeffs.begin(), out.coeffs.end());
  out.rhs = b.constant - a.constant;
  return out;
}

Region classify(const Region& region, double tol) {
  const int k = region.box.k();
  // Variables: y_i = x_i - lower_i (i < k), then eps.
  LinearProgram lp;
  lp.c.assign(static_cast<std::size_t>(k) + 1, 0.0);
  lp.c.back() = 1.0;

  auto add_row = [&](std::vector<double> row, double rhs) {
    lp.a.push_back(std::move(row));
    lp.b.push_back(rhs);
  };

  for (const LinearInequality& ineq : region.inequalities) {
    std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
    double rhs = ineq.rhs;
    for (const auto& [var, coef] : ineq.coeffs) {
      row[static_cast<std::size_t>(var)] = coef;
      rhs -= coef * region.box.lower[static_cast<std::size_t>(var)];
    }
    row.back() = 1.0;  // + eps
    add_row(std::move(row), rhs);
  }
  for (int i = 0; i < k; ++i) {
    // eps - y_i <= 0 keeps x_i strictly above its lower bound.
    std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
    row[static_cast<std::size_t>(i)] = -1.0;
    row.back() = 1.0;
    add_row(std::move(row), 0.0);
    const double width = region.box.upper[static_cast<std::size_t>(i)] -
                         region.box.lower[static_cast<std::size_t>(i)];
    if (std::isfinite(width)) {
      std::vector<double> up(static_cast<std::size_t>(k) + 1, 0.0);
      up[static_cast<std::size_t>(i)] = 1.0;
      up.back() = 1.0;
      add_row(std::move(up), width);
    }
  }
  {
    // eps <= 1 keeps the program bounded on unbounded regions.
    std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
    row.back() = 1.0;
    add_row(std::move(row), 1.0);
  }

  double scale = 1.0;
  for (double rhs : lp.b) scale = std::max(scale, std::fabs(rhs));

  Region out = region;
  const LpResult res = solve_lp(lp);
  switch (res.status) {
    case LpStatus::Infeasible:
      out.status = RegionStatus::Empty;
      out.witness.reset();
      break;
    case LpStatus::Unbounded:
      throw NumericalFailureError("margin program came back unbounded");
    case LpStatus::Optimal:
      if (res.objective > tol * scale) {
        out.status = RegionStatus::FullDim;
        std::vector<double> witness(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          witness[static_cast<std::size_t>(i)] =
              region.box.lower[static_cast<std::size_t>(i)] + res.x[static_cast<std::size_t>(i)];
        }
        out.witness = std::move(witness);
      } else {
        out.status = RegionStatus::LowerDim;
        out.witness.reset();
      }
      break;
  }
  return out;
}

}  // namespace tropsp
