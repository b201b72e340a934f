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

#include "tropsp/tntp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tropsp/rng.hpp"

namespace tropsp {

namespace {

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

int metadata_int(const std::string& key, const std::string& value, int line_no) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ParseError("<" + key + "> needs an integer, got '" + value + "'", line_no);
  }
}

}  // namespace

TntpNetwork parse_tntp(std::istream& in) {
  TntpNetwork net;
  int declared_links = -1;
  std::string line;
  int line_no = 0;
  bool in_header = true;

  while (in_header && std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '~') continue;
    if (text[0] == '<') {
      const auto close = text.find('>');
      if (close == std::string::npos) throw ParseError("unterminated metadata tag", line_no);
      const std::string key = upper(trim(text.substr(1, close - 1)));
      const std::string value = trim(text.substr(close + 1));
      if (key == "END OF METADATA") {
        in_header = false;
      } else if (key == "NUMBER OF NODES") {
        net.n_nodes = metadata_int(key, value, line_no);
      } else if (key == "NUMBER OF ZONES") {
        net.n_zones = metadata_int(key, value, line_no);
      } else if (key == "NUMBER OF LINKS") {
        declared_links = metadata_int(key, value, line_no);
      } else if (key == "FIRST THRU NODE") {
        net.first_thru_node = metadata_int(key, value, line_no);
      }
      // Unknown keys are ignored.
    } else {
      throw ParseError("expected metadata before link rows", line_no);
    }
  }
  if (in_header) throw ParseError("missing <END OF METADATA>", line_no);
  if (net.n_nodes <= 0) throw ParseError("missing or invalid <NUMBER OF NODES>", line_no);
  if (declared_links < 0) throw ParseError("missing <NUMBER OF LINKS>", line_no);

  // Link rows may span lines arbitrarily; fields are whitespace separated
  // and every row ends with ';'.
  std::string pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line.substr(0, line.find('~')));
    if (text.empty()) continue;
    pending += " " + text;
    std::size_t semi;
    while ((semi = pending.find(';')) != std::string::npos) {
      std::string row = pending.substr(0, semi);
      pending = pending.substr(semi + 1);
      if (trim(row).empty()) continue;
      std::istringstream fields(row);
      TntpLink link;
      if (!(fields >> link.init_node >> link.term_node >> link.capacity >> link.length >>
            link.free_flow_time >> link.b >> link.power >> link.speed >> link.toll >>
            link.link_type)) {
        throw ParseError("malformed link row: '" + trim(row) + "'", line_no);
      }
      std::string extra;
      if (fields >> extra) throw ParseError("trailing fields in link row", line_no);
      if (link.init_node < 1 || link.init_node > net.n_nodes || link.term_node < 1 ||
          link.term_node > net.n_nodes) {
        throw ParseError("link endpoint out of range", line_no);
      }
      net.links.push_back(link);
    }
  }
  if (!trim(pending).empty()) throw ParseError("unterminated link row at end of file", line_no);
  if (net.n_links() != declared_links) {
    throw CountMismatchError("header declares " + std::to_string(declared_links) +
                             " links but file has " + std::to_string(net.n_links()));
  }
  return net;
}

TntpNetwork parse_tntp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_tntp(in);
}

void write_tntp(const TntpNetwork& net, std::ostream& out) {
  out << "<NUMBER OF ZONES> " << net.n_zones << "\n";
  out << "<NUMBER OF NODES> " << net.n_nodes << "\n";
  out << "<FIRST THRU NODE> " << net.first_thru_node << "\n";
  out << "<NUMBER OF LINKS> " << net.n_links() << "\n";
  out << "<END OF METADATA>\n";
  out << "~ \tinit\tterm\tcapacity\tlength\tfftime\tb\tpower\tspeed\ttoll\ttype\t;\n";
  for (const TntpLink& l : net.links) {
    out << "\t" << l.init_node << "\t" << l.term_node << "\t" << format_double(l.capacity)
        << "\t" << format_double(l.length) << "\t" << format_double(l.free_flow_time) << "\t"
        << format_double(l.b) << "\t" << format_double(l.power) << "\t"
        << format_double(l.speed) << "\t" << format_double(l.toll) << "\t" << l.link_type
        << "\t;\n";
  }
}

StripResult strip_zones(const TntpNetwork& net) {
  StripResult out;
  int zones = net.n_zones;
  if (net.first_thru_node - 1 != net.n_zones) {
    zones = net.first_thru_node - 1;
    out.warning = "zone count " + std::to_string(net.n_zones) +
                  " disagrees with first through node " +
                  std::to_string(net.first_thru_node) + "; treating nodes below " +
                  std::to_string(net.first_thru_node) + " as zones";
  }
  zones = std::clamp(zones, 0, net.n_nodes);

  out.old_to_new.assign(static_cast<std::size_t>(net.n_nodes) + 1, 0);
  for (int v = zones + 1; v <= net.n_nodes; ++v) {
    out.old_to_new[static_cast<std::size_t>(v)] = v - zones;
  }
  out.network.n_nodes = net.n_nodes - zones;
  out.network.n_zones = 0;
  out.network.first_thru_node = 1;
  for (TntpLink link : net.links) {
    if (link.init_node <= zones || link.term_node <= zones) continue;
    link.init_node -= zones;
    link.term_node -= zones;
    out.network.links.push_back(link);
  }
  return out;
}

double bpr_time(const TntpLink& link, double flow) {
  if (!(link.capacity > 0.0)) throw DomainError("link capacity must be positive");
  if (flow < 0.0) throw DomainError("flow must be nonnegative");
  return link.free_flow_time * (1.0 + link.b * std::pow(flow / link.capacity, link.power));
}

ParamGraph build_instance(const TntpNetwork& net, const ScenarioConfig& cfg) {
  // Collapse duplicate rows; the model has no parallel arcs.
  std::map<std::pair<int, int>, TntpLink> by_pair;
  for (const TntpLink& link : net.links) {
    const auto key = std::make_pair(link.init_node, link.term_node);
    auto [it, inserted] = by_pair.emplace(key, link);
    if (!inserted && link.free_flow_time < it->second.free_flow_time) it->second = link;
  }
  std::vector<TntpLink> links;
  links.reserve(by_pair.size());
  for (const TntpLink& link : net.links) {
    const auto it = by_pair.find({link.init_node, link.term_node});
    if (it != by_pair.end() && it->second == link) {
      links.push_back(link);
      by_pair.erase(it);
    }
  }

  SplitMix64 rng(cfg.seed);
  std::vector<bool> variable(links.size(), false);
  std::vector<double> upper_bound(links.size(), 0.0);

  if (cfg.mode == ScenarioConfig::Mode::PerArcProbability) {
    if (cfg.p < 0.0 || cfg.p > 1.0) throw Error("probability must lie in [0, 1]");
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (rng.next_unit() >= cfg.p) continue;
      const double r = rng.next_open();
      variable[i] = true;
      upper_bound[i] = bpr_time(links[i], r * links[i].capacity);
    }
  } else {
    if (cfg.count < 0 || static_cast<std::size_t>(cfg.count) > links.size()) {
      throw TooFewArcsError("instance has " + std::to_string(links.size()) +
                            " arcs, cannot pick " + std::to_string(cfg.count));
    }
    if (!(cfg.factor > 1.0)) throw Error("interval factor must exceed 1");
    // Partial Fisher-Yates over the arc indices.
    std::vector<std::size_t> order(links.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int j = 0; j < cfg.count; ++j) {
      const std::size_t pick =
          static_cast<std::size_t>(j) +
          static_cast<std::size_t>(rng.next_below(order.size() - static_cast<std::size_t>(j)));
      std::swap(order[static_cast<std::size_t>(j)], order[pick]);
      const std::size_t i = order[static_cast<std::size_t>(j)];
      variable[i] = true;
      upper_bound[i] = cfg.factor * links[i].free_flow_time;
    }
  }

  std::vector<Arc> arcs;
  std::vector<double> lower, upper;
  arcs.reserve(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    const TntpLink& link = links[i];
    const double t0 = link.free_flow_time;
    if (variable[i]) {
      if (!(t0 > 0.0)) {
        throw DomainError("variable arc needs a positive free-flow time");
      }
      const int var = static_cast<int>(lower.size());
      lower.push_back(t0);
      upper.push_back(upper_bound[i]);
      arcs.push_back(Arc{link.init_node - 1, link.term_node - 1, ArcWeight::variable(var)});
    } else {
      arcs.push_back(Arc{link.init_node - 1, link.term_node - 1, ArcWeight::constant(t0)});
    }
  }
  return ParamGraph(net.n_nodes, std::move(arcs), BoundsBox(std::move(lower), std::move(upper)));
}

}  // namespace tropsp
