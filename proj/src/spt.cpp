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

#include "tropsp/spt.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <unordered_set>

namespace tropsp {

namespace {

// Sorted arc ids of v's tree path toward the target; the symbolic
// perturbation tag.
std::vector<int> path_arcs(const ParamGraph& g, const Spt& tree, int v) {
  std::vector<int> arcs;
  int u = v;
  while (tree.parent_arc[static_cast<std::size_t>(u)] != -1) {
    const int a = tree.parent_arc[static_cast<std::size_t>(u)];
    arcs.push_back(a);
    u = g.arc(a).head;
    if (arcs.size() > static_cast<std::size_t>(g.node_count())) {
      throw Error("parent vector has a cycle");
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

bool tag_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// True when the alternative d_a + p_w sits strictly below p_v in the
// perturbed order: either strictly below as functions, or function-equal
// with a lexicographically smaller arc set.
bool beats(const ParamGraph& g, const Spt& tree, int arc_id, const Monomial& alt,
           const Monomial& pv) {
  switch (compare(alt, pv, g.box())) {
    case Order::LessEqual:
      return true;
    case Order::Equal: {
      std::vector<int> alt_tag = path_arcs(g, tree, g.arc(arc_id).head);
      alt_tag.insert(std::upper_bound(alt_tag.begin(), alt_tag.end(), arc_id), arc_id);
      return tag_less(alt_tag, path_arcs(g, tree, g.arc(arc_id).tail));
    }
    default:
      return false;
  }
}

// The tree condition on a single arc.
bool arc_ok(const ParamGraph& g, const Spt& tree, int arc_id) {
  const Monomial& pw = tree.dist[static_cast<std::size_t>(g.arc(arc_id).head)];
  if (pw.is_infinite()) return true;
  const auto alt = try_mul(g.weight_monomial(arc_id), pw);
  if (!alt) return true;  // walk through a variable arc twice; never minimal here
  return !beats(g, tree, arc_id, *alt, tree.dist[static_cast<std::size_t>(g.arc(arc_id).tail)]);
}

struct TreeIndex {
  // Children lists in one flat array (CSR); rebuilt once per tree.
  std::vector<int> child_start, child_ids;
  std::vector<int> tin, tout;

  TreeIndex(const ParamGraph& g, const Spt& tree) {
    const int n = g.node_count();
    child_start.assign(static_cast<std::size_t>(n) + 1, 0);
    child_ids.resize(static_cast<std::size_t>(n));
    tin.assign(static_cast<std::size_t>(n), -1);
    tout.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      const int a = tree.parent_arc[static_cast<std::size_t>(v)];
      if (a != -1) ++child_start[static_cast<std::size_t>(g.arc(a).head) + 1];
    }
    for (int v = 0; v < n; ++v) {
      child_start[static_cast<std::size_t>(v) + 1] += child_start[static_cast<std::size_t>(v)];
    }
    std::vector<int> cursor(child_start.begin(), child_start.end() - 1);
    int placed = 0;
    for (int v = 0; v < n; ++v) {
      const int a = tree.parent_arc[static_cast<std::size_t>(v)];
      if (a != -1) {
        child_ids[static_cast<std::size_t>(
            cursor[static_cast<std::size_t>(g.arc(a).head)]++)] = v;
        ++placed;
      }
    }
    child_ids.resize(static_cast<std::size_t>(placed));

    int timer = 0;
    std::vector<std::pair<int, std::size_t>> stack{{tree.target, 0}};
    tin[static_cast<std::size_t>(tree.target)] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto kids = children(v);
      if (next < kids.size()) {
        const int c = kids[next++];
        tin[static_cast<std::size_t>(c)] = timer++;
        stack.emplace_back(c, 0);
      } else {
        tout[static_cast<std::size_t>(v)] = timer;
        stack.pop_back();
      }
    }
  }

  std::span<const int> children(int v) const {
    const auto lo = static_cast<std::size_t>(child_start[static_cast<std::size_t>(v)]);
    const auto hi = static_cast<std::size_t>(child_start[static_cast<std::size_t>(v) + 1]);
    return {child_ids.data() + lo, hi - lo};
  }

  // Is w inside the subtree hanging off v (v included)?
  bool in_subtree(int w, int v) const {
    const int tw = tin[static_cast<std::size_t>(w)];
    return tw != -1 && tin[static_cast<std::size_t>(v)] <= tw &&
           tw < tout[static_cast<std::size_t>(v)];
  }
};

// Tree with v's outgoing arc replaced by `arc_id` and the distances of v's
// subtree relabelled top-down.
Spt pivot_tree(const ParamGraph& g, const Spt& tree, const TreeIndex& index, int arc_id) {
  const int v = g.arc(arc_id).tail;
  const int w = g.arc(arc_id).head;
  Spt out = tree;
  out.parent_arc[static_cast<std::size_t>(v)] = arc_id;
  out.dist[static_cast<std::size_t>(v)] =
      mul(g.weight_monomial(arc_id), tree.dist[static_cast<std::size_t>(w)]);
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int c : index.children(s)) {
      out.dist[static_cast<std::size_t>(c)] =
          mul(g.weight_monomial(out.parent_arc[static_cast<std::size_t>(c)]),
              out.dist[static_cast<std::size_t>(s)]);
      stack.push_back(c);
    }
  }
  return out;
}

struct ArcScan {
  std::vector<LinearInequality> inequalities;
  std::vector<int> pivot_arcs;
};

// One pass over all arcs of a valid tree: collects the inequality system
// (every incomparable arc) and the pivot candidates (incomparable arcs whose
// head lies outside the tail's subtree).
ArcScan scan_arcs(const ParamGraph& g, const Spt& tree, const TreeIndex& index) {
  ArcScan scan;
  for (int a = 0; a < g.arc_count(); ++a) {
    const int v = g.arc(a).tail;
    const int w = g.arc(a).head;
    const Monomial& pw = tree.dist[static_cast<std::size_t>(w)];
    if (pw.is_infinite()) continue;
    const auto alt = try_mul(g.weight_monomial(a), pw);
    if (!alt) continue;  // walk through a variable arc twice; never minimal here
    const Monomial& pv = tree.dist[static_cast<std::size_t>(v)];
    if (compare(*alt, pv, g.box()) != Order::Incomparable) continue;
    scan.inequalities.push_back(inequality_between(pv, *alt));
    if (!index.in_subtree(w, v)) scan.pivot_arcs.push_back(a);
  }
  return scan;
}

struct ParentVectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (int x : v) {
      auto u = static_cast<std::uint32_t>(x);
      for (int i = 0; i < 4; ++i) {
        h ^= (u >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

ScalarTree scalar_tree(const ParamGraph& g, int target, std::span<const double> z) {
  const int n = g.node_count();
  if (target < 0 || target >= n) throw Error("target node out of range");
  ScalarTree out;
  out.target = target;
  out.parent_arc.assign(static_cast<std::size_t>(n), -1);
  out.dist.assign(static_cast<std::size_t>(n), kInf);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> tag(static_cast<std::size_t>(n));
  out.dist[static_cast<std::size_t>(target)] = 0.0;

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(0.0, target);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != out.dist[static_cast<std::size_t>(u)]) continue;
    for (int a : g.in_arcs(u)) {
      const int v = g.arc(a).tail;
      const double nd = g.weight_at(a, z) + d;
      if (nd == kInf || nd > out.dist[static_cast<std::size_t>(v)]) continue;
      bool better = nd < out.dist[static_cast<std::size_t>(v)];
      const int ndeg = degree[static_cast<std::size_t>(u)] + (g.arc(a).weight.is_variable ? 1 : 0);
      std::vector<int> ntag;
      if (!better) {
        // Exact distance tie: fewer variable arcs wins, then the
        // lexicographically smaller arc set.
        if (ndeg > degree[static_cast<std::size_t>(v)]) continue;
        ntag = tag[static_cast<std::size_t>(u)];
        ntag.insert(std::upper_bound(ntag.begin(), ntag.end(), a), a);
        better = ndeg < degree[static_cast<std::size_t>(v)] ||
                 tag_less(ntag, tag[static_cast<std::size_t>(v)]);
        if (!better) continue;
      } else {
        ntag = tag[static_cast<std::size_t>(u)];
        ntag.insert(std::upper_bound(ntag.begin(), ntag.end(), a), a);
      }
      out.dist[static_cast<std::size_t>(v)] = nd;
      degree[static_cast<std::size_t>(v)] = ndeg;
      tag[static_cast<std::size_t>(v)] = std::move(ntag);
      out.parent_arc[static_cast<std::size_t>(v)] = a;
      heap.emplace(nd, v);
    }
  }
  return out;
}

std::vector<Monomial> fill_distances(const ParamGraph& g, int target,
                                     const std::vector<int>& parent_arc) {
  const int n = g.node_count();
  std::vector<Monomial> dist(static_cast<std::size_t>(n), Monomial::infinite());
  std::vector<char> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 done, 2 on chain
  dist[static_cast<std::size_t>(target)] = Monomial::constant_term(0.0);
  state[static_cast<std::size_t>(target)] = 1;

  std::vector<int> chain;
  for (int v = 0; v < n; ++v) {
    if (state[static_cast<std::size_t>(v)] != 0) continue;
    chain.clear();
    int u = v;
    while (state[static_cast<std::size_t>(u)] == 0 &&
           parent_arc[static_cast<std::size_t>(u)] != -1) {
      state[static_cast<std::size_t>(u)] = 2;
      chain.push_back(u);
      u = g.arc(parent_arc[static_cast<std::size_t>(u)]).head;
    }
    if (state[static_cast<std::size_t>(u)] == 2) throw Error("parent vector has a cycle");
    const bool reached = state[static_cast<std::size_t>(u)] == 1 &&
                         !dist[static_cast<std::size_t>(u)].is_infinite();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const int s = *it;
      if (reached) {
        const int a = parent_arc[static_cast<std::size_t>(s)];
        dist[static_cast<std::size_t>(s)] =
            mul(g.weight_monomial(a), dist[static_cast<std::size_t>(g.arc(a).head)]);
      }
      state[static_cast<std::size_t>(s)] = 1;
    }
    state[static_cast<std::size_t>(u)] = 1;
  }
  return dist;
}

Spt initial_tree(const ParamGraph& g, int target) {
  const ScalarTree at_lower = scalar_tree(g, target, g.box().lower);
  Spt tree;
  tree.target = target;
  tree.parent_arc = at_lower.parent_arc;
  tree.dist = fill_distances(g, target, tree.parent_arc);
  return tree;
}

bool is_spt(const ParamGraph& g, const Spt& tree) {
  for (int a = 0; a < g.arc_count(); ++a) {
    if (!arc_ok(g, tree, a)) return false;
  }
  return true;
}

std::vector<std::pair<int, Spt>> neighbors(const ParamGraph& g, const Spt& tree) {
  const TreeIndex index(g, tree);
  const ArcScan scan = scan_arcs(g, tree, index);
  std::vector<std::pair<int, Spt>> out;
  for (int a : scan.pivot_arcs) {
    Spt candidate = pivot_tree(g, tree, index, a);
    if (is_spt(g, candidate)) out.emplace_back(a, std::move(candidate));
  }
  return out;
}

Region region_of(const ParamGraph& g, const Spt& tree) {
  const TreeIndex index(g, tree);
  Region region;
  region.inequalities = scan_arcs(g, tree, index).inequalities;
  region.box = g.box();
  return region;
}

EnumerateStats enumerate_trees(const ParamGraph& g, int target, const Limits& limits,
                               const std::function<void(SptSolution&&)>& sink) {
  if (!g.nonnegative()) {
    throw Error("tree enumeration needs nonnegative lower bounds");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  Spt first = initial_tree(g, target);
  std::unordered_set<std::vector<int>, ParentVectorHash> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(first.parent_arc);
  queue.push_back(first.parent_arc);

  EnumerateStats stats;
  while (!queue.empty()) {
    if (stats.solutions >= limits.max_solutions) {
      throw LimitExceededError("solution limit reached after " +
                                   std::to_string(stats.solutions) + " trees",
                               stats.solutions);
    }
    if (elapsed() > limits.max_seconds) {
      throw LimitExceededError("time limit reached after " +
                                   std::to_string(stats.solutions) + " trees",
                               stats.solutions);
    }
    std::vector<int> parents = std::move(queue.front());
    queue.pop_front();

    Spt tree;
    tree.target = target;
    tree.dist = fill_distances(g, target, parents);
    tree.parent_arc = std::move(parents);

    const TreeIndex index(g, tree);
    ArcScan scan = scan_arcs(g, tree, index);

    // Candidates share one scratch tree: replace the pivot node's arc,
    // relabel its subtree, validate, then roll back.  Since the popped tree
    // satisfies the tree condition everywhere and a pivot at v only changes
    // the distances inside v's subtree, only arcs touching that subtree can
    // flip their verdict.
    Spt scratch = tree;
    std::vector<int> subtree;  // breadth-first, so parents relabel before children
    std::vector<Monomial> saved;
    for (int a : scan.pivot_arcs) {
      const int v = g.arc(a).tail;
      std::vector<int> key = tree.parent_arc;
      key[static_cast<std::size_t>(v)] = a;
      if (seen.contains(key)) continue;

      subtree.clear();
      saved.clear();
      subtree.push_back(v);
      for (std::size_t i = 0; i < subtree.size(); ++i) {
        for (int c : index.children(subtree[i])) subtree.push_back(c);
      }
      for (int s : subtree) saved.push_back(scratch.dist[static_cast<std::size_t>(s)]);

      const int old_arc = scratch.parent_arc[static_cast<std::size_t>(v)];
      scratch.parent_arc[static_cast<std::size_t>(v)] = a;
      scratch.dist[static_cast<std::size_t>(v)] =
          mul(g.weight_monomial(a), scratch.dist[static_cast<std::size_t>(g.arc(a).head)]);
      for (std::size_t i = 1; i < subtree.size(); ++i) {
        const int s = subtree[i];
        const int pa = scratch.parent_arc[static_cast<std::size_t>(s)];
        scratch.dist[static_cast<std::size_t>(s)] =
            mul(g.weight_monomial(pa),
                scratch.dist[static_cast<std::size_t>(g.arc(pa).head)]);
      }

      bool ok = true;
      for (std::size_t i = 0; i < subtree.size() && ok; ++i) {
        const int s = subtree[i];
        for (int a2 : g.out_arcs(s)) {
          if (!arc_ok(g, scratch, a2)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        for (int a2 : g.in_arcs(s)) {
          // Arcs whose tail also sits in the subtree are covered above.
          if (index.in_subtree(g.arc(a2).tail, v)) continue;
          if (!arc_ok(g, scratch, a2)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        seen.insert(key);
        queue.push_back(std::move(key));
      }

      scratch.parent_arc[static_cast<std::size_t>(v)] = old_arc;
      for (std::size_t i = 0; i < subtree.size(); ++i) {
        scratch.dist[static_cast<std::size_t>(subtree[i])] = saved[i];
      }
    }

    Region region;
    region.inequalities = std::move(scan.inequalities);
    region.box = g.box();
    sink(SptSolution{std::move(tree), std::move(region)});
    ++stats.solutions;
  }
  stats.seconds = elapsed();
  return stats;
}

}  // namespace tropsp
