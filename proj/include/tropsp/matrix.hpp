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
// Square matrices over tropical polynomials and the parameterized all-pairs
// shortest path closures: the Floyd-Warshall recursion and the naive
// (n-1)st power of I min D, which doubles as an independent oracle.

#ifndef TROPSP_MATRIX_HPP_
#define TROPSP_MATRIX_HPP_

#include <optional>
#include <vector>

#include "tropsp/tropical.hpp"

namespace tropsp {

// Dense n x n matrix of tropical polynomials (weighted adjacency matrix:
// entry (u,v) is the weight of the arc u -> v, +inf when absent).
class ParamMatrix {
 public:
  ParamMatrix() : n_(0) {}
  explicit ParamMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

  static ParamMatrix identity(int n);

  int n() const { return n_; }
  TropPoly& at(int u, int v) { return cells_[static_cast<std::size_t>(u) * n_ + v]; }
  const TropPoly& at(int u, int v) const {
    return cells_[static_cast<std::size_t>(u) * n_ + v];
  }

  friend bool operator==(const ParamMatrix&, const ParamMatrix&) = default;

 private:
  int n_;
  std::vector<TropPoly> cells_;
};

// Entrywise min and min-plus product.
ParamMatrix mat_add(const ParamMatrix& a, const ParamMatrix& b, const BoundsBox& box);
ParamMatrix mat_mul(const ParamMatrix& a, const ParamMatrix& b, const BoundsBox& box);

// A diagonal cycle whose weight dips below zero somewhere in the box (the
// minimum of a monomial over the box sits at the lower corner).
struct NegativeCycleWitness {
  int node = 0;
  Monomial monomial;
  double value_at_lower = 0.0;
};

struct KleeneResult {
  ParamMatrix star;
  std::optional<NegativeCycleWitness> negative_cycle;
};

struct NegativeCycleError : Error {
  NegativeCycleError(std::string msg, NegativeCycleWitness w)
      : Error(std::move(msg)), witness(w) {}
  NegativeCycleWitness witness;
};

// Dynamic-programming closure: start from I min D and, for each pivot r,
// relax every entry through r.  Updates one matrix in place; within one pivot
// iteration only row r and column r are read, and on the nonnegative regime
// those are fixed points of the iteration.  Equals the Kleene star whenever
// no cycle is negative anywhere in the box; the negative-cycle verdict is
// read off the diagonal either way.
KleeneResult kleene_star(const ParamMatrix& d, const BoundsBox& box);

// Oracle route: (I min D)^(n-1) by repeated matrix products.  Exactly the
// min over all walks of at most n-1 arcs, so this is the object to compare
// printed closures against.  The verdict comes from the diagonal of the n-th
// power.
KleeneResult kleene_star_power(const ParamMatrix& d, const BoundsBox& box);

// Scans the diagonal for a monomial that is negative at the box's lower
// corner.
std::optional<NegativeCycleWitness> diagonal_negative_cycle(const ParamMatrix& m,
                                                            const BoundsBox& box);

// Column t of a closure: parameterized distances from every node to t.
std::vector<TropPoly> column(const ParamMatrix& star, int t);

}  // namespace tropsp

#endif  // TROPSP_MATRIX_HPP_
