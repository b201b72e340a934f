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
// Acceptance suite: eight end-to-end checks, one pass/fail line each.
// Exit code is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tropsp/bounds.hpp"
#include "tropsp/matrix.hpp"
#include "tropsp/spt.hpp"
#include "tropsp/tntp.hpp"

using namespace tropsp;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<SptSolution> collect(const ParamGraph& g, int target,
                                 Limits limits = Limits{}) {
  std::vector<SptSolution> out;
  enumerate_trees(g, target, limits,
                  [&](SptSolution&& s) { out.push_back(std::move(s)); });
  return out;
}

std::set<std::vector<int>> parent_set(const std::vector<SptSolution>& sols) {
  std::set<std::vector<int>> out;
  for (const auto& s : sols) out.insert(s.tree.parent_arc);
  return out;
}

std::set<std::vector<int>> parent_set(const std::vector<Spt>& trees) {
  std::set<std::vector<int>> out;
  for (const auto& t : trees) out.insert(t.parent_arc);
  return out;
}

std::string data_file(const std::string& name) {
  return std::string(TROPSP_DATA_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------
// 1. Closure regression on the 4-node / 2-variable fixture: the (n-1)st
//    matrix power matches all 16 known entries exactly, in under 1 ms.
Check criterion1() {
  Check c;
  const ParamMatrix d = testing::two_var_cycle_matrix();
  const BoundsBox box = testing::two_var_cycle_box();
  const ParamMatrix want = testing::two_var_cycle_closure();

  kleene_star_power(d, box);  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  const KleeneResult result = kleene_star_power(d, box);
  const double ms = seconds_since(t0) * 1e3;

  int matched = 0;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (result.star.at(u, v) == want.at(u, v)) {
        ++matched;
      } else {
        c.expect(false, "entry (" + std::to_string(u) + "," + std::to_string(v) +
                            ") = " + to_string(result.star.at(u, v)) + ", want " +
                            to_string(want.at(u, v)));
      }
    }
  }

  // Literal spot checks, independent of how the fixture matrix was built.
  c.expect(to_string(result.star.at(2, 1)) == "min(1, 1+x0+x1)",
           "(2,1) = " + to_string(result.star.at(2, 1)));
  c.expect(to_string(result.star.at(0, 0)) == "min(0, 2+x0, 2+x1)",
           "(0,0) = " + to_string(result.star.at(0, 0)));
  c.expect(to_string(result.star.at(3, 0)) == "min(3, 1+x0, 1+x1)",
           "(3,0) = " + to_string(result.star.at(3, 0)));
  int total_terms = 0;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) total_terms += result.star.at(u, v).term_count();
  }
  c.expect(total_terms == 29, "total term count " + std::to_string(total_terms) + " != 29");

  c.note(std::to_string(matched) + "/16 entries, " + format_double(ms) + " ms");
  c.expect(ms < 1.0, "took " + format_double(ms) + " ms, budget 1 ms");

  // Same instance on the nonnegative box agrees between both closure routes.
  const auto fw = kleene_star(d, testing::nonneg_box2());
  c.expect(fw.star == testing::two_var_cycle_closure_nonneg(),
           "pivot-recursion closure deviates on the nonnegative box");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Enumeration regression on the 4-node diamond: exactly 4 trees, 3
//    full-dimensional regions split at x = 1 and x = 3, one empty system
//    {x >= 3, x <= 1}; under 1 ms.
Check criterion2() {
  Check c;
  const ParamGraph g = testing::one_var_diamond();

  collect(g, 0);  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  auto sols = collect(g, 0);
  for (auto& s : sols) s.region = classify(s.region);
  const double ms = seconds_since(t0) * 1e3;

  c.expect(sols.size() == 4, "expected 4 trees, got " + std::to_string(sols.size()));
  if (sols.size() == 4) {
    int full = 0, empty = 0;
    std::vector<double> witnesses;
    for (const auto& s : sols) {
      if (s.region.status == RegionStatus::FullDim) {
        ++full;
        witnesses.push_back((*s.region.witness)[0]);
      }
      if (s.region.status == RegionStatus::Empty) ++empty;
    }
    c.expect(full == 3, "expected 3 full-dimensional regions, got " + std::to_string(full));
    c.expect(empty == 1, "expected 1 empty region, got " + std::to_string(empty));

    // Boundary values 1 and 3: one witness in each of (0,1), (1,3), (3,inf).
    std::sort(witnesses.begin(), witnesses.end());
    c.expect(witnesses.size() == 3 && witnesses[0] < 1.0 && witnesses[1] > 1.0 &&
                 witnesses[1] < 3.0 && witnesses[2] > 3.0,
             "witnesses do not straddle the boundaries 1 and 3");

    // The empty system is {x0 >= 3, x0 <= 1}.
    const auto& empty_sol = *std::find_if(sols.begin(), sols.end(), [](const auto& s) {
      return s.region.status == RegionStatus::Empty;
    });
    bool geq3 = false, leq1 = false;
    for (const auto& q : empty_sol.region.inequalities) {
      if (q.coeffs == std::vector<std::pair<int, int>>{{0, -1}} && q.rhs == -3.0) geq3 = true;
      if (q.coeffs == std::vector<std::pair<int, int>>{{0, +1}} && q.rhs == 1.0) leq1 = true;
    }
    c.expect(geq3 && leq1, "empty system is not {x0 >= 3, x0 <= 1}");
  }
  c.note(format_double(ms) + " ms");
  c.expect(ms < 1.0, "took " + format_double(ms) + " ms, budget 1 ms");
  return c;
}

// ---------------------------------------------------------------------------
// 3. Closure oracle equivalence on 200 random instances (n <= 8, k <= 3,
//    halves weights): pivot recursion == matrix powers structurally, and
//    100 random box points evaluate to plain scalar all-pairs distances
//    exactly.  Budget 30 s.
Check criterion3(std::vector<ParamGraph>& instances_out) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(1003);
  int point_checks = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const int k = static_cast<int>(rng.next_below(4));
    ParamGraph g = testing::random_graph(rng, n, k);
    const ParamMatrix d = g.adjacency_matrix();
    const auto fw = kleene_star(d, g.box());
    const auto pw = kleene_star_power(d, g.box());
    if (!(fw.star == pw.star)) {
      c.expect(false, "closure mismatch on instance " + std::to_string(round));
    }
    for (int pt = 0; pt < 100; ++pt) {
      const std::vector<double> z = testing::random_box_point(rng, g.box());
      const auto scalar = testing::scalar_apsp(testing::weights_at(g, z));
      bool all_equal = true;
      for (int u = 0; u < n && all_equal; ++u) {
        for (int v = 0; v < n && all_equal; ++v) {
          all_equal = eval(fw.star.at(u, v), z) ==
                      scalar[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        }
      }
      ++point_checks;
      if (!all_equal) {
        c.expect(false, "point evaluation mismatch on instance " + std::to_string(round));
        break;
      }
    }
    instances_out.push_back(std::move(g));
  }
  const double secs = seconds_since(t0);
  c.note("200 instances, " + std::to_string(point_checks) + " point checks, " +
         format_double(secs) + " s");
  c.expect(secs < 30.0, "took " + format_double(secs) + " s, budget 30 s");
  return c;
}

// ---------------------------------------------------------------------------
// 4. Enumeration oracle equivalence on 100 random instances (n <= 7,
//    k <= 3): the emitted set equals the brute-force shortest-path-tree set
//    restricted to the component of the initial tree, and at 200 interior
//    points the scalar tree is among the emitted ones with matching
//    distances.  Budget 60 s.
Check criterion4(std::vector<std::pair<ParamGraph, int>>& enumerated_out,
                 std::vector<std::vector<SptSolution>>& solutions_out) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(1004);
  int point_checks = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = 3 + static_cast<int>(rng.next_below(5));
    const int k = 1 + static_cast<int>(rng.next_below(3));
    ParamGraph g = testing::random_graph(rng, n, k);
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    auto sols = collect(g, t);
    const auto brute = testing::all_spts(g, t);
    const auto component = testing::component_of(g, brute, sols[0].tree);
    if (parent_set(sols) != parent_set(component)) {
      c.expect(false, "tree set mismatch on instance " + std::to_string(round) + " (" +
                          std::to_string(sols.size()) + " emitted vs " +
                          std::to_string(component.size()) + " brute-force)");
    }

    std::map<std::vector<int>, const SptSolution*> by_parent;
    for (const auto& s : sols) by_parent[s.tree.parent_arc] = &s;
    for (int pt = 0; pt < 2; ++pt, ++point_checks) {
      const std::vector<double> z = testing::random_interior_point(rng, g.box());
      const ScalarTree at_z = scalar_tree(g, t, z);
      const auto it = by_parent.find(at_z.parent_arc);
      if (it == by_parent.end()) {
        c.expect(false, "scalar tree missing on instance " + std::to_string(round));
        continue;
      }
      for (int v = 0; v < n; ++v) {
        if (it->second->tree.dist[static_cast<std::size_t>(v)].eval(z) !=
            at_z.dist[static_cast<std::size_t>(v)]) {
          c.expect(false, "scalar distance mismatch on instance " + std::to_string(round));
          break;
        }
      }
    }
    enumerated_out.emplace_back(std::move(g), t);
    solutions_out.push_back(std::move(sols));
  }
  const double secs = seconds_since(t0);
  c.note("100 instances, " + std::to_string(point_checks) + " point checks, " +
         format_double(secs) + " s");
  c.expect(secs < 60.0, "took " + format_double(secs) + " s, budget 60 s");
  return c;
}

// ---------------------------------------------------------------------------
// 5. Bound suite over the instances of checks 3 and 4: tree counts within
//    min(phi, Cayley, binomial) and feasible counts within the region bound
//    and n^k.  Zero violations.
Check criterion5(const std::vector<ParamGraph>& closure_instances,
                 const std::vector<std::pair<ParamGraph, int>>& enumerated,
                 const std::vector<std::vector<SptSolution>>& solutions) {
  Check c;
  SplitMix64 rng(1005);
  int violations = 0;
  int checked = 0;

  const auto check_instance = [&](const ParamGraph& g, int target,
                                  const std::vector<SptSolution>& sols) {
    const int n = g.node_count();
    const int k = g.var_count();
    const mpz_class trees(static_cast<unsigned long>(sols.size()));
    if (!(trees <= tree_count_bound(n, g.arc_count(), k))) ++violations;
    std::uint64_t feasible = 0;
    for (const auto& s : sols) {
      Region r = s.region.status == RegionStatus::Unknown ? classify(s.region) : s.region;
      if (r.status == RegionStatus::FullDim) ++feasible;
    }
    const mpz_class f(static_cast<unsigned long>(feasible));
    if (!(f <= feasible_count_bound(n, k))) ++violations;
    if (!(feasible_count_bound(n, k) <= feasible_count_bound_coarse(n, k))) ++violations;
    ++checked;
    (void)target;
  };

  for (const ParamGraph& g : closure_instances) {
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.node_count())));
    check_instance(g, t, collect(g, t));
  }
  for (std::size_t i = 0; i < enumerated.size(); ++i) {
    check_instance(enumerated[i].first, enumerated[i].second, solutions[i]);
  }
  c.note(std::to_string(checked) + " instances, " + std::to_string(violations) +
         " violations");
  c.expect(violations == 0, "bound violations found");
  return c;
}

// ---------------------------------------------------------------------------
// 6. Network ingestion: the bundled city file parses to 398 nodes / 871
//    links / 36 zones and strips to 362 nodes / 583 arcs.  A real network
//    file can be substituted via TROPSP_BERLIN_NET.
Check criterion6() {
  Check c;
  std::string path = data_file("synthetic_city_net.tntp");
  if (const char* real = std::getenv("TROPSP_BERLIN_NET")) path = real;
  const TntpNetwork net = parse_tntp_file(path);
  c.expect(net.n_nodes == 398, "nodes " + std::to_string(net.n_nodes) + " != 398");
  c.expect(net.n_links() == 871, "links " + std::to_string(net.n_links()) + " != 871");
  c.expect(net.n_zones == 36, "zones " + std::to_string(net.n_zones) + " != 36");
  const StripResult stripped = strip_zones(net);
  c.expect(stripped.network.n_nodes == 362,
           "stripped nodes " + std::to_string(stripped.network.n_nodes) + " != 362");
  c.expect(stripped.network.n_links() == 583,
           "stripped links " + std::to_string(stripped.network.n_links()) + " != 583");
  c.note("398/871/36 -> 362/583");
  return c;
}

// ---------------------------------------------------------------------------
// 7. Output sensitivity on the city-scale synthetic network with 10 fixed
//    variable arcs: enumeration over 10 random targets completes, solution
//    counts are reproducible, and log(time) vs log(solutions) is rank-
//    correlated with Spearman rho > 0.8.
Check criterion7() {
  Check c;
  const TntpNetwork net =
      strip_zones(parse_tntp_file(data_file("synthetic_city_net.tntp"))).network;
  ScenarioConfig cfg;
  cfg.mode = ScenarioConfig::Mode::FixedCount;
  cfg.count = 10;
  cfg.factor = 2.0;
  cfg.seed = 20260809;
  const ParamGraph g = build_instance(net, cfg);

  SplitMix64 rng(cfg.seed);
  std::vector<int> targets;
  while (targets.size() < 10) {
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.node_count())));
    if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
  }

  Limits limits;
  limits.max_solutions = 2'000'000;
  std::vector<double> counts, times;
  for (int t : targets) {
    const auto t0 = std::chrono::steady_clock::now();
    auto sols = collect(g, t, limits);
    for (auto& s : sols) s.region = classify(s.region);
    times.push_back(seconds_since(t0));
    counts.push_back(static_cast<double>(sols.size()));
  }

  // Reproducibility of the counts for a fixed seed.
  const auto again = collect(g, targets[0], limits);
  c.expect(static_cast<double>(again.size()) == counts[0], "solution count not reproducible");

  const double rho = testing::spearman(counts, times);
  const double slope = testing::loglog_slope(counts, times);
  double lo = counts[0], hi = counts[0];
  for (double v : counts) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  c.note("counts " + format_double(lo) + ".." + format_double(hi) + ", rho " +
         format_double(rho) + ", log-log slope " + format_double(slope));
  c.expect(rho > 0.8, "Spearman rho " + format_double(rho) + " <= 0.8");
  c.expect(slope > 0.3 && slope < 1.7,
           "log-log slope " + format_double(slope) + " outside (0.3, 1.7)");
  return c;
}

// ---------------------------------------------------------------------------
// 8. Funnel family: k variable arcs straight into the target gives at most
//    (k+1)^(n-k-1) trees; full enumeration matches the brute-force set.
//    Budget 10 s.
Check criterion8() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(1008);
  int checked = 0;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{
           {4, 1}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {8, 3}}) {
    const ParamGraph g = testing::funnel_family(n, k, rng);
    const int t = n - 1;
    const auto sols = collect(g, t);
    std::uint64_t bound = 1;
    for (int i = 0; i < n - k - 1; ++i) bound *= static_cast<std::uint64_t>(k + 1);
    c.expect(sols.size() <= bound,
             "count " + std::to_string(sols.size()) + " exceeds bound for n=" +
                 std::to_string(n) + " k=" + std::to_string(k));
    c.expect(parent_set(sols) == parent_set(testing::all_spts(g, t)),
             "incomplete enumeration for n=" + std::to_string(n) + " k=" + std::to_string(k));
    ++checked;
  }
  const double secs = seconds_since(t0);
  c.note(std::to_string(checked) + " instances, " + format_double(secs) + " s");
  c.expect(secs < 10.0, "took " + format_double(secs) + " s, budget 10 s");
  return c;
}

}  // namespace

int main() {
  std::vector<ParamGraph> closure_instances;
  std::vector<std::pair<ParamGraph, int>> enumerated;
  std::vector<std::vector<SptSolution>> solutions;

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"closure regression (4 nodes, 2 variables, 16 entries)", criterion1},
      {"enumeration regression (diamond: 4 trees, 3 regions, 1 empty)", criterion2},
      {"closure oracle equivalence (200 random instances)",
       [&] { return criterion3(closure_instances); }},
      {"enumeration oracle equivalence (100 random instances)",
       [&] { return criterion4(enumerated, solutions); }},
      {"counting bounds (all instances above)",
       [&] { return criterion5(closure_instances, enumerated, solutions); }},
      {"network ingestion (398/871/36 -> 362/583)", criterion6},
      {"output sensitivity (city-scale, k = 10, 10 targets)", criterion7},
      {"funnel family bound ((k+1)^(n-k-1))", criterion8},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.ok) ++failed;
    std::printf("[%zu/8] %s — %s%s%s\n", i + 1, result.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), result.detail.empty() ? "" : ": ",
                result.detail.c_str());
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all 8 acceptance checks passed\n");
  } else {
    std::printf("%d acceptance check(s) failed\n", failed);
  }
  return failed;
}
