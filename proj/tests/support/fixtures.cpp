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

#include "support/fixtures.hpp"

#include <cmath>
#include <initializer_list>

namespace tropsp::testing {

namespace {

Monomial mono(double c, std::initializer_list<int> vars) {
  Monomial m = Monomial::constant_term(c);
  for (int v : vars) m.vars |= var_bit(v);
  return m;
}

TropPoly poly(std::initializer_list<Monomial> ms, const BoundsBox& box) {
  return prune(std::vector<Monomial>(ms), box);
}

}  // namespace

ParamMatrix two_var_cycle_matrix() {
  ParamMatrix d(4);
  for (int i = 0; i < 4; ++i) d.at(i, i) = TropPoly::constant(0.0);
  d.at(0, 3) = TropPoly::constant(1.0);
  d.at(1, 0) = TropPoly::constant(1.0);
  d.at(2, 0) = TropPoly::single(Monomial::variable(1));  // x1
  d.at(2, 1) = TropPoly::constant(1.0);
  d.at(3, 1) = TropPoly::single(Monomial::variable(0));  // x0
  d.at(3, 2) = TropPoly::constant(1.0);
  return d;
}

BoundsBox two_var_cycle_box() {
  return BoundsBox({-4.0, -4.0}, {kInf, kInf});
}

BoundsBox nonneg_box2() { return BoundsBox::nonnegative(2); }

ParamMatrix two_var_cycle_closure() {
  const BoundsBox box = two_var_cycle_box();
  ParamMatrix m(4);
  m.at(0, 0) = poly({mono(2, {0}), mono(2, {1}), mono(0, {})}, box);
  m.at(0, 1) = poly({mono(1, {0}), mono(3, {})}, box);
  m.at(0, 2) = TropPoly::constant(2.0);
  m.at(0, 3) = TropPoly::constant(1.0);
  m.at(1, 0) = TropPoly::constant(1.0);
  m.at(1, 1) = poly({mono(2, {0}), mono(0, {})}, box);
  m.at(1, 2) = TropPoly::constant(3.0);
  m.at(1, 3) = TropPoly::constant(2.0);
  m.at(2, 0) = poly({mono(0, {1}), mono(2, {})}, box);
  m.at(2, 1) = poly({mono(1, {0, 1}), mono(1, {})}, box);
  m.at(2, 2) = poly({mono(2, {1}), mono(0, {})}, box);
  m.at(2, 3) = poly({mono(1, {1}), mono(3, {})}, box);
  m.at(3, 0) = poly({mono(1, {0}), mono(1, {1}), mono(3, {})}, box);
  m.at(3, 1) = poly({mono(0, {0}), mono(2, {})}, box);
  m.at(3, 2) = TropPoly::constant(1.0);
  m.at(3, 3) = poly({mono(2, {0}), mono(2, {1}), mono(0, {})}, box);
  return m;
}

ParamMatrix two_var_cycle_closure_nonneg() {
  const BoundsBox box = nonneg_box2();
  ParamMatrix m(4);
  m.at(0, 0) = TropPoly::constant(0.0);
  m.at(0, 1) = poly({mono(1, {0}), mono(3, {})}, box);
  m.at(0, 2) = TropPoly::constant(2.0);
  m.at(0, 3) = TropPoly::constant(1.0);
  m.at(1, 0) = TropPoly::constant(1.0);
  m.at(1, 1) = TropPoly::constant(0.0);
  m.at(1, 2) = TropPoly::constant(3.0);
  m.at(1, 3) = TropPoly::constant(2.0);
  m.at(2, 0) = poly({mono(0, {1}), mono(2, {})}, box);
  m.at(2, 1) = TropPoly::constant(1.0);
  m.at(2, 2) = TropPoly::constant(0.0);
  m.at(2, 3) = poly({mono(1, {1}), mono(3, {})}, box);
  m.at(3, 0) = poly({mono(1, {0}), mono(1, {1}), mono(3, {})}, box);
  m.at(3, 1) = poly({mono(0, {0}), mono(2, {})}, box);
  m.at(3, 2) = TropPoly::constant(1.0);
  m.at(3, 3) = TropPoly::constant(0.0);
  return m;
}

ParamGraph one_var_diamond() {
  std::vector<Arc> arcs = {
      Arc{1, 0, ArcWeight::variable(0)}, Arc{2, 1, ArcWeight::constant(2.0)},
      Arc{3, 1, ArcWeight::constant(3.0)}, Arc{2, 0, ArcWeight::constant(5.0)},
      Arc{3, 0, ArcWeight::constant(4.0)},
  };
  return ParamGraph(4, std::move(arcs), BoundsBox({0.0}, {kInf}));
}

ParamGraph funnel_family(int n, int k, SplitMix64& rng) {
  const int t = n - 1;
  std::vector<Arc> arcs;
  for (int u = 0; u < k; ++u) arcs.push_back(Arc{u, t, ArcWeight::variable(u)});
  for (int v = k; v < t; ++v) {
    double worst = 0.0;
    for (int u = 0; u < k; ++u) {
      const double c = 0.5 + 0.5 * static_cast<double>(rng.next_below(8));
      worst = std::max(worst, c);
      arcs.push_back(Arc{v, u, ArcWeight::constant(c)});
    }
    // Strictly above every two-hop route at the lower corner, so all k+1
    // choices stay incomparable.
    const double direct = worst + 0.5 + 0.5 * static_cast<double>(rng.next_below(4));
    arcs.push_back(Arc{v, t, ArcWeight::constant(direct)});
  }
  return ParamGraph(n, std::move(arcs),
                    BoundsBox(std::vector<double>(static_cast<std::size_t>(k), 0.0),
                              std::vector<double>(static_cast<std::size_t>(k), kInf)));
}

ParamGraph chain_family(int k, int l, SplitMix64& rng) {
  const int n = 2 * k + l + 1;
  const int t = n - 1;
  const auto hub = [&](int i) { return k + l + i; };
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back(Arc{i, hub(i), ArcWeight::variable(i)});
  for (int j = 0; j < l; ++j) arcs.push_back(Arc{k + j, t, ArcWeight::variable(k + j)});
  // Hub constants carry distinct powers of two on top of random halves, so
  // no two arc sets share a weight sum.
  int serial = 0;
  const auto generic = [&] {
    return 1.0 + 0.5 * static_cast<double>(rng.next_below(6)) +
           std::ldexp(1.0, -(++serial));
  };
  for (int i = 0; i < k; ++i) {
    for (int v = 0; v < k + l; ++v) {
      if (v == i) continue;  // no arc straight back into the hub's own source
      arcs.push_back(Arc{hub(i), v, ArcWeight::constant(generic())});
    }
    arcs.push_back(Arc{hub(i), t, ArcWeight::constant(generic())});
  }
  const int vars = k + l;
  return ParamGraph(n, std::move(arcs),
                    BoundsBox(std::vector<double>(static_cast<std::size_t>(vars), 0.0),
                              std::vector<double>(static_cast<std::size_t>(vars), kInf)));
}

}  // namespace tropsp::testing
