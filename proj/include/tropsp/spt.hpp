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
// Parameterized shortest-path trees toward a fixed target node, and the
// breadth-first traversal of the tree-adjacency graph that enumerates every
// tree together with the inequality system of its parameter region.
//
// A spanning tree directed toward t with per-node distance monomials p_v is
// a shortest-path tree when no arc (v,w) offers an alternative d_vw + p_w
// that is strictly below p_v in the box partial order.  Two trees are
// adjacent when they differ in exactly one node's outgoing arc and the two
// path weights at that node are incomparable.  Non-generic weights are
// handled by symbolic perturbation: exact ties are broken by the number of
// variable arcs on the path and then by lexicographic comparison of the
// sorted arc-id sets, with the fixed arc input order as the ground order.

#ifndef TROPSP_SPT_HPP_
#define TROPSP_SPT_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tropsp/graph.hpp"
#include "tropsp/region.hpp"
#include "tropsp/tropical.hpp"

namespace tropsp {

// Spanning tree toward `target`: parent_arc[v] is the arc id of v's outgoing
// tree arc (-1 for the target and for nodes that cannot reach it, whose
// distance is the infinite monomial).
struct Spt {
  int target = 0;
  std::vector<int> parent_arc;
  std::vector<Monomial> dist;

  friend bool operator==(const Spt&, const Spt&) = default;
};

// One enumerated tree with its region (inequalities from the incomparable
// arcs; status filled in by classify()).
struct SptSolution {
  Spt tree;
  Region region;
};

// Scalar shortest-path tree at a fixed parameter point.
struct ScalarTree {
  int target = 0;
  std::vector<int> parent_arc;
  std::vector<double> dist;
};

// Dijkstra (binary heap) toward `target` with all weights fixed at z,
// deterministically tie-broken as described above.
ScalarTree scalar_tree(const ParamGraph& g, int target, std::span<const double> z);

// Recomputes the distance monomials of a parent-arc vector (constants
// accumulate parent-first, so identical trees always carry bit-identical
// monomials).
std::vector<Monomial> fill_distances(const ParamGraph& g, int target,
                                     const std::vector<int>& parent_arc);

// Scalar tree at the lower-bound corner, re-labelled with parameterized
// distance monomials.
Spt initial_tree(const ParamGraph& g, int target);

// Checks the tree condition on every arc in O(k * m).
bool is_spt(const ParamGraph& g, const Spt& tree);

// All adjacent trees: for each arc (v,w) with p_v incomparable to d_vw + p_w
// and w outside v's subtree, the tree with v's outgoing arc replaced,
// distances recomputed for v's subtree, kept when it passes is_spt.  Returns
// (pivot arc id, tree) pairs in arc order.
std::vector<std::pair<int, Spt>> neighbors(const ParamGraph& g, const Spt& tree);

// The inequality system p_v <= d_vw + p_w over the arcs where the two sides
// are incomparable, with the instance box attached; status left Unknown.
Region region_of(const ParamGraph& g, const Spt& tree);

struct Limits {
  std::uint64_t max_solutions = 100'000'000;
  double max_seconds = kInf;
};

struct LimitExceededError : Error {
  LimitExceededError(std::string msg, std::uint64_t n) : Error(std::move(msg)), emitted(n) {}
  std::uint64_t emitted = 0;
};

struct EnumerateStats {
  std::uint64_t solutions = 0;
  double seconds = 0.0;
};

// Breadth-first traversal from initial_tree.  Every distinct tree reachable
// through pivots is handed to the sink exactly once, in deterministic order;
// deduplication is by parent-arc vector.  Requires a nonnegative instance
// (box lower bounds >= 0).  Throws LimitExceededError when the solution or
// wall-time budget is exhausted.
EnumerateStats enumerate_trees(const ParamGraph& g, int target, const Limits& limits,
                               const std::function<void(SptSolution&&)>& sink);

}  // namespace tropsp

#endif  // TROPSP_SPT_HPP_
