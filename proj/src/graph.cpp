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

#include "tropsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace tropsp {

namespace {

void build_csr(int n, const std::vector<int>& endpoint, std::vector<int>& start,
               std::vector<int>& ids) {
  start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v : endpoint) ++start[static_cast<std::size_t>(v) + 1];
  for (int v = 0; v < n; ++v) start[static_cast<std::size_t>(v) + 1] += start[static_cast<std::size_t>(v)];
  ids.resize(endpoint.size());
  std::vector<int> cursor(start.begin(), start.end() - 1);
  // Arc ids stay in input order within each bucket.
  for (std::size_t a = 0; a < endpoint.size(); ++a) {
    ids[static_cast<std::size_t>(cursor[static_cast<std::size_t>(endpoint[a])]++)] =
        static_cast<int>(a);
  }
}

}  // namespace

ParamGraph::ParamGraph(int n, std::vector<Arc> arcs, BoundsBox box)
    : n_(n), arcs_(std::move(arcs)), box_(std::move(box)) {
  if (n_ < 1) throw Error("graph needs at least one node");
  var_arc_.assign(static_cast<std::size_t>(box_.k()), -1);

  std::set<std::pair<int, int>> seen;
  std::vector<int> tails, heads;
  tails.reserve(arcs_.size());
  heads.reserve(arcs_.size());
  for (std::size_t id = 0; id < arcs_.size(); ++id) {
    const Arc& a = arcs_[id];
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
      throw Error("arc " + std::to_string(id) + ": node out of range");
    }
    if (a.tail == a.head) {
      throw Error("arc " + std::to_string(id) + ": self-loops are not allowed");
    }
    if (!seen.insert({a.tail, a.head}).second) {
      throw Error("parallel arcs " + std::to_string(a.tail) + "->" +
                  std::to_string(a.head));
    }
    if (a.weight.is_variable) {
      const int x = a.weight.var;
      if (x < 0 || x >= box_.k()) {
        throw Error("arc " + std::to_string(id) + ": variable index out of range");
      }
      if (var_arc_[static_cast<std::size_t>(x)] != -1) {
        throw Error("variable x" + std::to_string(x) + " appears on two arcs");
      }
      if (!(box_.lower[static_cast<std::size_t>(x)] < box_.upper[static_cast<std::size_t>(x)])) {
        throw Error("variable x" + std::to_string(x) +
                    " needs a nondegenerate interval (lower < upper)");
      }
      var_arc_[static_cast<std::size_t>(x)] = static_cast<int>(id);
    } else {
      if (!(a.weight.value >= 0.0) || !std::isfinite(a.weight.value)) {
        throw Error("arc " + std::to_string(id) +
                    ": constant weight must be finite and nonnegative");
      }
    }
    tails.push_back(a.tail);
    heads.push_back(a.head);
  }
  for (int x = 0; x < box_.k(); ++x) {
    if (var_arc_[static_cast<std::size_t>(x)] == -1) {
      throw Error("variable x" + std::to_string(x) + " appears on no arc");
    }
  }
  build_csr(n_, tails, out_start_, out_ids_);
  build_csr(n_, heads, in_start_, in_ids_);
}

std::span<const int> ParamGraph::out_arcs(int v) const {
  const auto lo = static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v)]);
  const auto hi = static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v) + 1]);
  return {out_ids_.data() + lo, hi - lo};
}

std::span<const int> ParamGraph::in_arcs(int v) const {
  const auto lo = static_cast<std::size_t>(in_start_[static_cast<std::size_t>(v)]);
  const auto hi = static_cast<std::size_t>(in_start_[static_cast<std::size_t>(v) + 1]);
  return {in_ids_.data() + lo, hi - lo};
}

Monomial ParamGraph::weight_monomial(int arc_id) const {
  const ArcWeight& w = arc(arc_id).weight;
  return w.is_variable ? Monomial::variable(w.var) : Monomial::constant_term(w.value);
}

double ParamGraph::weight_at(int arc_id, std::span<const double> z) const {
  const ArcWeight& w = arc(arc_id).weight;
  return w.is_variable ? z[static_cast<std::size_t>(w.var)] : w.value;
}

ParamMatrix ParamGraph::adjacency_matrix() const {
  ParamMatrix m(n_);
  for (int id = 0; id < arc_count(); ++id) {
    const Arc& a = arc(id);
    m.at(a.tail, a.head) = TropPoly::single(weight_monomial(id));
  }
  return m;
}

}  // namespace tropsp
