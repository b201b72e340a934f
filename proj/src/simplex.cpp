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

#include "tropsp/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace tropsp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 20000;

// Standard dense tableau over the equality form A x + I s (+ artificials) = b.
// Column layout: [structural | slacks | artificials | rhs].
class Tableau {
 public:
  Tableau(const LinearProgram& lp) {
    rows_ = lp.a.size();
    n_struct_ = lp.c.size();
    n_art_ = 0;
    for (double bi : lp.b) {
      if (bi < 0) ++n_art_;
    }
    cols_ = n_struct_ + rows_ + n_art_ + 1;
    t_.assign(rows_ + 1, std::vector<double>(cols_, 0.0));
    basis_.resize(rows_);

    std::size_t art = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double sign = lp.b[i] < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_struct_; ++j) t_[i][j] = sign * lp.a[i][j];
      t_[i][n_struct_ + i] = sign;  // slack
      t_[i][cols_ - 1] = sign * lp.b[i];
      if (lp.b[i] < 0) {
        const std::size_t col = n_struct_ + rows_ + art;
        t_[i][col] = 1.0;
        basis_[i] = col;
        ++art;
      } else {
        basis_[i] = n_struct_ + i;
      }
    }
  }

  bool has_artificials() const { return n_art_ > 0; }

  // Phase 1: minimize the sum of artificials (as max of the negated sum).
  // Returns the residual infeasibility.  The objective row stores +c, so its
  // rhs cell carries the negated objective value.
  double run_phase1() {
    auto& obj = t_[rows_];
    std::fill(obj.begin(), obj.end(), 0.0);
    for (std::size_t j = n_struct_ + rows_; j + 1 < cols_; ++j) obj[j] = -1.0;
    price_out();
    iterate(n_struct_ + rows_ + n_art_);
    return obj[cols_ - 1];
  }

  // Drops artificial columns from consideration and pivots any that still
  // sit in the basis out of it (or detects a redundant row).
  void retire_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_struct_ + rows_) continue;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < n_struct_ + rows_; ++j) {
        if (std::fabs(t_[i][j]) > kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) {
        // Redundant row; make it harmless.
        for (double& v : t_[i]) v = 0.0;
        continue;
      }
      pivot(i, enter);
    }
    n_usable_ = n_struct_ + rows_;
  }

  void run_phase2(const LinearProgram& lp) {
    auto& obj = t_[rows_];
    std::fill(obj.begin(), obj.end(), 0.0);
    for (std::size_t j = 0; j < n_struct_; ++j) obj[j] = lp.c[j];
    price_out();
    unbounded_ = false;
    iterate(n_usable_);
  }

  bool unbounded() const { return unbounded_; }

  double objective() const { return -t_[rows_][cols_ - 1]; }

  std::vector<double> solution() const {
    std::vector<double> x(n_struct_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_struct_) x[basis_[i]] = t_[i][cols_ - 1];
    }
    return x;
  }

 private:
  // Rewrites the objective row in terms of nonbasic columns.
  void price_out() {
    auto& obj = t_[rows_];
    for (std::size_t i = 0; i < rows_; ++i) {
      const double coef = obj[basis_[i]];
      if (coef == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) obj[j] -= coef * t_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = t_[row];
    const double p = pr[col];
    for (double& v : pr) v /= p;
    pr[col] = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double f = t_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= f * pr[j];
      t_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  // Bland's rule: entering column is the lowest-index one with positive
  // reduced cost; leaving row breaks ratio ties by lowest basis index.
  void iterate(std::size_t usable_cols) {
    const auto& obj = t_[rows_];
    for (int step = 0; step < kMaxPivots; ++step) {
      std::size_t enter = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j) {
        if (obj[j] > kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == usable_cols) return;  // optimal

      std::size_t leave = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= kPivotEps) continue;
        const double ratio = t_[i][cols_ - 1] / t_[i][enter];
        if (ratio < best_ratio - kPivotEps ||
            (ratio < best_ratio + kPivotEps &&
             (leave == rows_ || basis_[i] < basis_[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == rows_) {
        unbounded_ = true;
        return;
      }
      pivot(leave, enter);
    }
    throw NumericalFailureError("simplex exceeded pivot cap");
  }

  std::size_t rows_, cols_, n_struct_, n_art_;
  std::size_t n_usable_ = 0;
  bool unbounded_ = false;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  Tableau tab(lp);
  if (tab.has_artificials()) {
    const double infeas = tab.run_phase1();
    if (infeas > 1e-8) {
      return LpResult{LpStatus::Infeasible, 0.0, {}};
    }
  }
  tab.retire_artificials();
  tab.run_phase2(lp);
  if (tab.unbounded()) {
    return LpResult{LpStatus::Unbounded, 0.0, {}};
  }
  return LpResult{LpStatus::Optimal, tab.objective(), tab.solution()};
}

}  // namespace tropsp
