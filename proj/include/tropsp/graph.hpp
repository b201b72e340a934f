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

#ifndef TROPSP_GRAPH_HPP_
#define TROPSP_GRAPH_HPP_

#include <span>
#include <vector>

#include "tropsp/matrix.hpp"
#include "tropsp/tropical.hpp"

namespace tropsp {

// Either a fixed nonnegative weight or a reference to one of the k interval
// variables of the instance's bound box.
struct ArcWeight {
  static ArcWeight constant(double c) { return ArcWeight{false, c, -1}; }
  static ArcWeight variable(int index) { return ArcWeight{true, 0.0, index}; }

  bool is_variable = false;
  double value = 0.0;  // meaningful when !is_variable
  int var = -1;        // meaningful when is_variable

  friend bool operator==(const ArcWeight&, const ArcWeight&) = default;
};

struct Arc {
  int tail = 0;
  int head = 0;
  ArcWeight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed graph with interval arc weights and separated variables: every
// variable index appears on exactly one arc, with multiplicity one.  Arc ids
// are input positions; that order is the total order used for tie-breaking
// everywhere downstream, so it is part of the instance.
//
// Construction enforces: no self-loops, no parallel arcs, separated
// variables covering exactly box.k() indices, constant weights >= 0 and
// variable intervals with lower < upper.  Nonnegative lower bounds are a
// precondition of the tree-enumeration entry points, not of the type; the
// Kleene closures accept boxes with negative lower bounds.
class ParamGraph {
 public:
  ParamGraph(int n, std::vector<Arc> arcs, BoundsBox box);

  int node_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int var_count() const { return box_.k(); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }
  const BoundsBox& box() const { return box_; }
  int arc_of_var(int var) const { return var_arc_[static_cast<std::size_t>(var)]; }

  std::span<const int> out_arcs(int v) const;
  std::span<const int> in_arcs(int v) const;

  Monomial weight_monomial(int arc_id) const;
  double weight_at(int arc_id, std::span<const double> z) const;

  // Constant weights are nonnegative by construction; this additionally
  // checks the box's lower bounds.
  bool nonnegative() const { return box_.nonneg_lower(); }

  ParamMatrix adjacency_matrix() const;

 private:
  int n_;
  std::vector<Arc> arcs_;
  BoundsBox box_;
  std::vector<int> var_arc_;
  // CSR-style adjacency over arc ids.
  std::vector<int> out_start_, out_ids_;
  std::vector<int> in_start_, in_ids_;
};

}  // namespace tropsp

#endif  // TROPSP_GRAPH_HPP_
