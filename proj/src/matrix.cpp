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

#include "tropsp/matrix.hpp"

namespace tropsp {

ParamMatrix ParamMatrix::identity(int n) {
  ParamMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = TropPoly::constant(0.0);
  return m;
}

ParamMatrix mat_add(const ParamMatrix& a, const ParamMatrix& b, const BoundsBox& box) {
  ParamMatrix out(a.n());
  for (int u = 0; u < a.n(); ++u) {
    for (int v = 0; v < a.n(); ++v) {
      out.at(u, v) = add(a.at(u, v), b.at(u, v), box);
    }
  }
  return out;
}

ParamMatrix mat_mul(const ParamMatrix& a, const ParamMatrix& b, const BoundsBox& box) {
  const int n = a.n();
  ParamMatrix out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      TropPoly acc;  // +inf
      for (int r = 0; r < n; ++r) {
        if (a.at(u, r).is_infinite() || b.at(r, v).is_infinite()) continue;
        acc = add(acc, mul(a.at(u, r), b.at(r, v), box), box);
      }
      out.at(u, v) = acc;
    }
  }
  return out;
}

std::optional<NegativeCycleWitness> diagonal_negative_cycle(const ParamMatrix& m,
                                                            const BoundsBox& box) {
  for (int u = 0; u < m.n(); ++u) {
    for (const Monomial& mono : m.at(u, u).terms()) {
      if (mono.is_infinite()) continue;
      const double at_lower = mono.constant + box.sum_lower(mono.vars);
      if (at_lower < 0.0) {
        return NegativeCycleWitness{u, mono, at_lower};
      }
    }
  }
  return std::nullopt;
}

KleeneResult kleene_star(const ParamMatrix& d, const BoundsBox& box) {
  const int n = d.n();
  ParamMatrix m = mat_add(d, ParamMatrix::identity(n), box);
  for (int r = 0; r < n; ++r) {
    for (int u = 0; u < n; ++u) {
      // An infinite entry cannot turn finite within its own pivot round
      // (inf absorbs), so the whole row update can be skipped.
      if (m.at(u, r).is_infinite()) continue;
      for (int v = 0; v < n; ++v) {
        if (m.at(r, v).is_infinite()) continue;
        m.at(u, v) = add(m.at(u, v), mul(m.at(u, r), m.at(r, v), box), box);
      }
    }
  }
  auto verdict = diagonal_negative_cycle(m, box);
  return KleeneResult{std::move(m), verdict};
}

KleeneResult kleene_star_power(const ParamMatrix& d, const BoundsBox& box) {
  const int n = d.n();
  const ParamMatrix base = mat_add(d, ParamMatrix::identity(n), box);
  ParamMatrix power = ParamMatrix::identity(n);
  for (int i = 0; i + 1 < n; ++i) power = mat_mul(power, base, box);
  // One more product only for the cycle verdict.
  const ParamMatrix nth = mat_mul(power, base, box);
  return KleeneResult{std::move(power), diagonal_negative_cycle(nth, box)};
}

std::vector<TropPoly> column(const ParamMatrix& star, int t) {
  std::vector<TropPoly> col(static_cast<std::size_t>(star.n()));
  for (int u = 0; u < star.n(); ++u) col[static_cast<std::size_t>(u)] = star.at(u, t);
  return col;
}

}  // namespace tropsp
