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
// Shared regression fixtures and constructed instance families.

#ifndef TROPSP_TESTS_SUPPORT_FIXTURES_HPP_
#define TROPSP_TESTS_SUPPORT_FIXTURES_HPP_

#include "tropsp/graph.hpp"
#include "tropsp/matrix.hpp"
#include "tropsp/rng.hpp"
#include "tropsp/tropical.hpp"

namespace tropsp::testing {

// Four nodes on two directed triangles with variable arcs x0 = (3,1) and
// x1 = (2,0); box [-4, inf]^2 so that the cycle terms 2+x0 and 2+x1 stay
// incomparable to 0.  The closure of this matrix is known entry by entry.
ParamMatrix two_var_cycle_matrix();
BoundsBox two_var_cycle_box();
ParamMatrix two_var_cycle_closure();  // the (n-1)st power under that box

// The same closure pruned for the nonnegative box [0, inf]^2 (diagonal
// collapses to 0, the degree-2 term is dominated).
BoundsBox nonneg_box2();
ParamMatrix two_var_cycle_closure_nonneg();

// Five-arc diamond toward target a = 0: b=1, c=2, d=3 with arcs
//   0: b->a weight x0 in [0, inf]
//   1: c->b weight 2
//   2: d->b weight 3
//   3: c->a weight 5
//   4: d->a weight 4
// Four shortest-path trees, three full-dimensional regions split at x = 1
// and x = 3, and one empty region {x >= 3, x <= 1}.
ParamGraph one_var_diamond();

// n-node family with k variable arcs straight into the target and every
// other node wired by constant arcs to all of the variable sources and the
// target; each non-source node has exactly k+1 pairwise incomparable routes,
// so the tree count is exactly (k+1)^(n-k-1).
ParamGraph funnel_family(int n, int k, SplitMix64& rng);

// Chain family: l variable arcs straight into the target; a chain of k
// hubs where hub i is fed by a variable arc and has constant bypass arcs to
// every earlier hub's source and the target.  Tree count is bounded by
// (k+l)! / l!.
ParamGraph chain_family(int k, int l, SplitMix64& rng);

}  // namespace tropsp::testing

#endif  // TROPSP_TESTS_SUPPORT_FIXTURES_HPP_
