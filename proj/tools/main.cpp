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
// Command-line surface: turn traffic networks into parameterized instances,
// compute the all-pairs closure, enumerate shortest-path trees with their
// regions, and export per-target timing data.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tropsp/bounds.hpp"
#include "tropsp/json_io.hpp"
#include "tropsp/matrix.hpp"
#include "tropsp/spt.hpp"
#include "tropsp/tntp.hpp"

namespace {

using namespace tropsp;

constexpr int kExitError = 1;
constexpr int kExitNegativeCycle = 2;
constexpr int kExitLimitExceeded = 3;

// "-" means stdout.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_targets(const std::string& spec, int n) {
  std::vector<int> targets;
  if (spec == "all") {
    targets.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) targets[static_cast<std::size_t>(v)] = v;
    return targets;
  }
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const int v = std::stoi(item);
    if (v < 0 || v >= n) throw Error("target " + item + " out of range");
    targets.push_back(v);
  }
  if (targets.empty()) throw Error("no targets given");
  return targets;
}

void classify_pool(std::vector<SptSolution>& solutions, int jobs) {
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < solutions.size();) {
      solutions[i].region = classify(solutions[i].region);
    }
  };
  if (jobs == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

int cmd_instance(const std::string& tntp_path, bool keep_zones, const std::string& mode,
                 double p, int count, double factor, std::uint64_t seed,
                 const std::string& out_path) {
  TntpNetwork net = parse_tntp_file(tntp_path);
  std::cerr << "parsed " << net.n_nodes << " nodes, " << net.n_links() << " links, "
            << net.n_zones << " zones\n";
  if (!keep_zones) {
    StripResult stripped = strip_zones(net);
    if (!stripped.warning.empty()) std::cerr << "warning: " << stripped.warning << "\n";
    net = std::move(stripped.network);
    std::cerr << "zones removed: " << net.n_nodes << " nodes, " << net.n_links()
              << " links remain\n";
  }
  ScenarioConfig cfg;
  cfg.seed = seed;
  if (mode == "prob") {
    cfg.mode = ScenarioConfig::Mode::PerArcProbability;
    cfg.p = p;
  } else if (mode == "fixed") {
    cfg.mode = ScenarioConfig::Mode::FixedCount;
    cfg.count = count;
    cfg.factor = factor;
  } else {
    throw Error("mode must be 'prob' or 'fixed'");
  }
  const ParamGraph g = build_instance(net, cfg);
  OutputFile out(out_path);
  out.stream() << to_json(g).dump(2) << "\n";
  std::cerr << "instance: n=" << g.node_count() << " m=" << g.arc_count()
            << " k=" << g.var_count() << "\n";
  return 0;
}

int cmd_kleene(const std::string& instance_path, const std::string& out_path, int max_n,
               const std::string& method) {
  const ParamGraph g = read_instance(instance_path);
  if (g.node_count() > max_n) {
    throw Error("instance has " + std::to_string(g.node_count()) +
                " nodes; the dense closure is capped at " + std::to_string(max_n) +
                " (raise with --max-n)");
  }
  const KleeneResult result = method == "power"
                                  ? kleene_star_power(g.adjacency_matrix(), g.box())
                                  : kleene_star(g.adjacency_matrix(), g.box());
  OutputFile out(out_path);
  out.stream() << to_json(result).dump(2) << "\n";
  if (result.negative_cycle) {
    std::cerr << "negative cycle: node " << result.negative_cycle->node << ", weight "
              << to_string(result.negative_cycle->monomial) << " = "
              << format_double(result.negative_cycle->value_at_lower)
              << " at the lower corner\n";
    return kExitNegativeCycle;
  }
  return 0;
}

int cmd_enumerate(const std::string& instance_path, const std::string& targets_spec,
                  int jobs, std::uint64_t limit_solutions, double limit_seconds,
                  const std::string& out_path, const std::string& report_path) {
  const ParamGraph g = read_instance(instance_path);
  const std::vector<int> targets = parse_targets(targets_spec, g.node_count());

  Limits limits;
  limits.max_solutions = limit_solutions;
  limits.max_seconds = limit_seconds;

  OutputFile out(out_path);
  Json report;
  report["instance"] = Json{{"n", g.node_count()}, {"m", g.arc_count()}, {"k", g.var_count()}};
  report["bounds"] =
      Json{{"trees", tree_count_bound(g.node_count(), g.arc_count(), g.var_count()).get_str()},
           {"feasible_regions", feasible_count_bound(g.node_count(), g.var_count()).get_str()},
           {"feasible_regions_coarse",
            feasible_count_bound_coarse(g.node_count(), g.var_count()).get_str()}};
  Json rows = Json::array();

  bool all_completed = true;
  std::uint64_t total_solutions = 0, total_feasible = 0;
  for (int target : targets) {
    std::vector<SptSolution> solutions;
    bool completed = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      enumerate_trees(g, target, limits, [&](SptSolution&& s) {
        solutions.push_back(std::move(s));
        if (solutions.size() % 100000 == 0) {
          std::cerr << "target " << target << ": " << solutions.size() << " trees so far\n";
        }
      });
    } catch (const LimitExceededError& e) {
      completed = false;
      all_completed = false;
      std::cerr << "target " << target << ": " << e.what() << "\n";
    }
    classify_pool(solutions, jobs);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::uint64_t feasible = 0;
    for (const SptSolution& s : solutions) {
      if (s.region.status == RegionStatus::FullDim) ++feasible;
      Json line = solution_to_json(s);
      line["target"] = target;
      out.stream() << line.dump() << "\n";
    }
    total_solutions += solutions.size();
    total_feasible += feasible;
    rows.push_back(Json{{"target", target},
                        {"solutions", solutions.size()},
                        {"feasible", feasible},
                        {"seconds", seconds},
                        {"completed", completed}});
    std::cerr << "target " << target << ": " << solutions.size() << " trees, " << feasible
              << " feasible regions, " << format_double(seconds) << " s"
              << (completed ? "" : " (aborted)") << "\n";
  }

  report["targets"] = std::move(rows);
  report["totals"] = Json{{"solutions", total_solutions},
                          {"feasible", total_feasible},
                          {"targets", targets.size()},
                          {"completed", all_completed}};
  OutputFile rep(report_path);
  rep.stream() << report.dump(2) << "\n";
  return all_completed ? 0 : kExitLimitExceeded;
}

int cmd_plotdata(const std::vector<std::string>& report_paths, const std::string& out_path) {
  OutputFile out(out_path);
  out.stream() << "target,solutions,feasible,seconds\n";
  for (const std::string& path : report_paths) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json report;
    in >> report;
    for (const Json& row : report.at("targets")) {
      out.stream() << row.at("target").get<long long>() << ","
                   << row.at("solutions").get<std::uint64_t>() << ","
                   << row.at("feasible").get<std::uint64_t>() << ","
                   << format_double(row.at("seconds").get<double>()) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parameterized shortest-path trees over interval arc weights"};
  app.require_subcommand(1);

  // instance
  auto* instance = app.add_subcommand("instance", "build an instance from a .tntp network");
  std::string tntp_path, mode = "fixed", inst_out = "-";
  bool keep_zones = false;
  double p = 0.05, factor = 2.0;
  int count = 10;
  std::uint64_t seed = 0;
  instance->add_option("--tntp", tntp_path, "network file")->required();
  instance->add_flag("--keep-zones", keep_zones, "skip zone removal");
  instance->add_option("--mode", mode, "prob | fixed")->check(CLI::IsMember({"prob", "fixed"}));
  instance->add_option("--p", p, "per-arc variable probability (mode prob)");
  instance->add_option("--k", count, "number of variable arcs (mode fixed)");
  instance->add_option("--factor", factor, "upper bound factor (mode fixed)");
  instance->add_option("--seed", seed, "random seed");
  instance->add_option("--out", inst_out, "instance file ('-' = stdout)");

  // kleene
  auto* kleene = app.add_subcommand("kleene", "all-pairs parameterized closure");
  std::string kleene_instance, kleene_out = "-", kleene_method = "fw";
  int max_n = 512;
  kleene->add_option("--instance", kleene_instance, "instance file")->required();
  kleene->add_option("--out", kleene_out, "output file ('-' = stdout)");
  kleene->add_option("--max-n", max_n, "node cap for the dense closure");
  kleene->add_option("--method", kleene_method, "fw (pivot recursion) | power (matrix powers)")
      ->check(CLI::IsMember({"fw", "power"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all shortest-path trees per target");
  std::string enum_instance, targets = "all", enum_out = "-", report_out = "-";
  int jobs = 1;
  std::uint64_t limit_solutions = 100000000ULL;
  double limit_seconds = kInf;
  enumerate->add_option("--instance", enum_instance, "instance file")->required();
  enumerate->add_option("--targets", targets, "'all' or comma-separated node list");
  enumerate->add_option("--jobs", jobs, "classification worker threads");
  enumerate->add_option("--limit-solutions", limit_solutions, "per-target tree cap");
  enumerate->add_option("--limit-seconds", limit_seconds, "per-target time cap");
  enumerate->add_option("--out", enum_out, "solution stream, one JSON object per line");
  enumerate->add_option("--report", report_out, "per-target report (JSON)");

  // plotdata
  auto* plotdata = app.add_subcommand("plotdata", "solutions-vs-time table from reports");
  std::vector<std::string> report_paths;
  std::string plot_out = "-";
  plotdata->add_option("--report", report_paths, "report file(s)")->required();
  plotdata->add_option("--out", plot_out, "CSV output ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (instance->parsed()) {
      return cmd_instance(tntp_path, keep_zones, mode, p, count, factor, seed, inst_out);
    }
    if (kleene->parsed()) {
      return cmd_kleene(kleene_instance, kleene_out, max_n, kleene_method);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_instance, targets, jobs, limit_solutions, limit_seconds,
                           enum_out, report_out);
    }
    if (plotdata->parsed()) return cmd_plotdata(report_paths, plot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
