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
// Exact counting bounds on shortest-path trees and feasible regions.  The
// values overflow any machine word for realistic road networks, hence GMP.

#ifndef TROPSP_BOUNDS_HPP_
#define TROPSP_BOUNDS_HPP_

#include <gmpxx.h>

namespace tropsp {

// phi(n, k) = sum over i of C(k,i) * (i+1)^(n-i-1), an upper bound on the
// number of shortest-path trees of an n-node instance with k variable arcs.
// Terms with i >= n contribute nothing (a tree toward the target has at most
// n-1 arcs, so at most n-1 variables can be active) and are skipped.
mpz_class phi(int n, int k);

// min(phi(n,k), n^(n-2), C(m, n-1)).
mpz_class tree_count_bound(int n, int m, int k);

// sum over i of C(k,i) * (n-1)! / (n-i-1)!, the bound on the number of
// full-dimensional regions of one target.
mpz_class feasible_count_bound(int n, int k);

// The cruder n^k bound that dominates feasible_count_bound.
mpz_class feasible_count_bound_coarse(int n, int k);

}  // namespace tropsp

#endif  // TROPSP_BOUNDS_HPP_
