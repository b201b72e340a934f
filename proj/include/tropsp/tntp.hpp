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
// Ingestion of plain-text traffic network files (.tntp): a metadata header
// of "<KEY> value" lines up to <END OF METADATA>, '~' comment lines, and one
// whitespace-separated link row per arc terminated by ';'.  Zones are the
// nodes numbered below the first through node; no traffic may pass through
// them.  Also: BPR link travel times and the two randomized ways of turning
// a network into a parameterized instance.

#ifndef TROPSP_TNTP_HPP_
#define TROPSP_TNTP_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tropsp/graph.hpp"

namespace tropsp {

struct ParseError : Error {
  ParseError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};

struct CountMismatchError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct TooFewArcsError : Error {
  using Error::Error;
};

struct TntpLink {
  int init_node = 0;  // 1-based, as in the file
  int term_node = 0;
  double capacity = 0.0;
  double length = 0.0;
  double free_flow_time = 0.0;
  double b = 0.0;
  double power = 0.0;
  double speed = 0.0;
  double toll = 0.0;
  int link_type = 0;

  friend bool operator==(const TntpLink&, const TntpLink&) = default;
};

struct TntpNetwork {
  int n_nodes = 0;
  int n_zones = 0;
  int first_thru_node = 1;
  std::vector<TntpLink> links;

  int n_links() const { return static_cast<int>(links.size()); }

  friend bool operator==(const TntpNetwork&, const TntpNetwork&) = default;
};

// Throws ParseError (with line number) on malformed input and
// CountMismatchError when the row count disagrees with <NUMBER OF LINKS>.
TntpNetwork parse_tntp(std::istream& in);
TntpNetwork parse_tntp_file(const std::string& path);

void write_tntp(const TntpNetwork& net, std::ostream& out);

// Removes the zone nodes together with their incident links and renumbers
// the remaining nodes contiguously (still 1-based).  Zones are nodes
// 1..n_zones; when the header's first through node disagrees, the nodes
// below it are treated as zones and a warning is emitted.  Idempotent.
struct StripResult {
  TntpNetwork network;
  std::vector<int> old_to_new;  // 1-based; 0 = removed
  std::string warning;
};
StripResult strip_zones(const TntpNetwork& net);

// t0 * (1 + b * (flow/capacity)^power).  Throws DomainError when the link
// has no positive capacity.
double bpr_time(const TntpLink& link, double flow);

// How a network becomes a parameterized instance.  PerArcProbability gives
// every arc a variable weight independently with probability p, bounded by
// the travel time at a uniformly random fraction of capacity; FixedCount
// picks exactly `count` arcs uniformly and scales their free-flow time by
// `factor`.  Constant arcs keep the free-flow time.
struct ScenarioConfig {
  enum class Mode { PerArcProbability, FixedCount };
  Mode mode = Mode::FixedCount;
  double p = 0.0;        // PerArcProbability
  int count = 0;         // FixedCount
  double factor = 2.0;   // FixedCount; must be > 1
  std::uint64_t seed = 0;
};

// Deterministic in cfg.seed.  Node v of the result is file node v+1.
// Duplicate (u,v) rows are collapsed to the smallest free-flow time.
ParamGraph build_instance(const TntpNetwork& net, const ScenarioConfig& cfg);

}  // namespace tropsp

#endif  // TROPSP_TNTP_HPP_
