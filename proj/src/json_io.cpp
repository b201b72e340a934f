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

#include "tropsp/json_io.hpp"

#include <bit>
#include <fstream>

namespace tropsp {

namespace {

Json number_or_inf(double v) {
  if (v == kInf) return "inf";
  return v;
}

double from_number_or_inf(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw Error("expected a number or \"inf\"");
  }
  return j.get<double>();
}

}  // namespace

Json to_json(const Monomial& m) {
  Json vars = Json::array();
  for (VarSet s = m.vars; s != 0; s &= s - 1) vars.push_back(std::countr_zero(s));
  return Json{{"c", number_or_inf(m.constant)}, {"vars", std::move(vars)}};
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  m.constant = from_number_or_inf(j.at("c"));
  m.vars = 0;
  for (const auto& v : j.at("vars")) {
    const int i = v.get<int>();
    if (i < 0 || i >= kMaxVars) throw Error("variable index out of range");
    m.vars |= var_bit(i);
  }
  if (m.constant == kInf && m.vars != 0) throw Error("infinite monomial cannot carry variables");
  return m;
}

Json to_json(const TropPoly& f) {
  Json terms = Json::array();
  for (const Monomial& m : f.terms()) terms.push_back(to_json(m));
  return Json{{"terms", std::move(terms)}};
}

TropPoly poly_from_json(const Json& j, const BoundsBox& box) {
  std::vector<Monomial> terms;
  for (const auto& t : j.at("terms")) terms.push_back(monomial_from_json(t));
  return prune(std::move(terms), box);
}

Json to_json(const ParamMatrix& m) {
  Json rows = Json::array();
  for (int u = 0; u < m.n(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < m.n(); ++v) row.push_back(to_json(m.at(u, v)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const BoundsBox& box) {
  Json lower = Json::array(), upper = Json::array();
  for (double v : box.lower) lower.push_back(v);
  for (double v : box.upper) upper.push_back(number_or_inf(v));
  return Json{{"lower", std::move(lower)}, {"upper", std::move(upper)}};
}

BoundsBox box_from_json(const Json& j) {
  std::vector<double> lower, upper;
  for (const auto& v : j.at("lower")) lower.push_back(v.get<double>());
  for (const auto& v : j.at("upper")) upper.push_back(from_number_or_inf(v));
  return BoundsBox(std::move(lower), std::move(upper));
}

Json to_json(const ParamGraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) {
    Json w = a.weight.is_variable ? Json{{"var", a.weight.var}}
                                  : Json{{"const", a.weight.value}};
    arcs.push_back(Json{{"u", a.tail}, {"v", a.head}, {"w", std::move(w)}});
  }
  return Json{{"n", g.node_count()}, {"arcs", std::move(arcs)}, {"box", to_json(g.box())}};
}

ParamGraph graph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    Arc arc;
    arc.tail = a.at("u").get<int>();
    arc.head = a.at("v").get<int>();
    const Json& w = a.at("w");
    if (w.contains("var")) {
      arc.weight = ArcWeight::variable(w.at("var").get<int>());
    } else {
      arc.weight = ArcWeight::constant(w.at("const").get<double>());
    }
    arcs.push_back(arc);
  }
  return ParamGraph(n, std::move(arcs), box_from_json(j.at("box")));
}

void write_instance(const std::string& path, const ParamGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(g).dump(2) << "\n";
}

ParamGraph read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  in >> j;
  return graph_from_json(j);
}

Json to_json(const LinearInequality& ineq) {
  Json coeffs = Json::object();
  for (const auto& [var, coef] : ineq.coeffs) coeffs[std::to_string(var)] = coef;
  return Json{{"coeffs", std::move(coeffs)}, {"rhs", ineq.rhs}};
}

Json to_json(const Region& region) {
  Json ineqs = Json::array();
  for (const LinearInequality& ineq : region.inequalities) ineqs.push_back(to_json(ineq));
  Json status;
  switch (region.status) {
    case RegionStatus::Unknown: status = nullptr; break;
    case RegionStatus::FullDim: status = "full_dim"; break;
    case RegionStatus::LowerDim: status = "lower_dim"; break;
    case RegionStatus::Empty: status = "empty"; break;
  }
  Json witness;
  if (region.witness) {
    witness = Json::array();
    for (double v : *region.witness) witness.push_back(v);
  } else {
    witness = nullptr;
  }
  return Json{{"ineqs", std::move(ineqs)}, {"status", std::move(status)},
              {"witness", std::move(witness)}};
}

Json to_json(const KleeneResult& result) {
  Json neg;
  if (result.negative_cycle) {
    neg = Json{{"node", result.negative_cycle->node},
               {"monomial", to_json(result.negative_cycle->monomial)},
               {"value_at_lower", result.negative_cycle->value_at_lower}};
  } else {
    neg = nullptr;
  }
  return Json{{"n", result.star.n()}, {"star", to_json(result.star)},
              {"negative_cycle", std::move(neg)}};
}

Json solution_to_json(const SptSolution& solution) {
  Json dist = Json::array();
  for (const Monomial& m : solution.tree.dist) dist.push_back(to_json(m));
  Json ineqs = Json::array();
  for (const LinearInequality& ineq : solution.region.inequalities) {
    ineqs.push_back(to_json(ineq));
  }
  Json feasible;
  switch (solution.region.status) {
    case RegionStatus::Unknown: feasible = nullptr; break;
    case RegionStatus::FullDim: feasible = true; break;
    default: feasible = false; break;
  }
  return Json{{"tree", Json{{"parent", solution.tree.parent_arc}}},
              {"dist", std::move(dist)},
              {"ineqs", std::move(ineqs)},
              {"feasible", std::move(feasible)},
              {"region", to_json(solution.region)}};
}

}  // namespace tropsp
