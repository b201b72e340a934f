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
// JSON forms of the core objects.  Infinite values serialize as the string
// "inf" (JSON has no infinity).
//
//   monomial   {"c": 1.5, "vars": [0, 2]}         or {"c": "inf", "vars": []}
//   polynomial {"terms": [monomial...]}
//   matrix     [[polynomial...]...]
//   instance   {"n": int, "arcs": [{"u","v","w":{"const": c}|{"var": i}}...],
//               "box": {"lower": [...], "upper": [... | "inf"]}}
//   region     {"ineqs": [{"coeffs": {"0": 1, "3": -1}, "rhs": r}...],
//               "status": "full_dim"|"lower_dim"|"empty"|null,
//               "witness": [...]|null}
//   solution   {"tree": {"parent": [arc ids, -1 for none]},
//               "dist": [monomial...], "ineqs": [...],
//               "feasible": bool|null, "region": region}

#ifndef TROPSP_JSON_IO_HPP_
#define TROPSP_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "tropsp/graph.hpp"
#include "tropsp/matrix.hpp"
#include "tropsp/region.hpp"
#include "tropsp/spt.hpp"

namespace tropsp {

using Json = nlohmann::json;

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const TropPoly& f);
TropPoly poly_from_json(const Json& j, const BoundsBox& box);

Json to_json(const ParamMatrix& m);

Json to_json(const BoundsBox& box);
BoundsBox box_from_json(const Json& j);

Json to_json(const ParamGraph& g);
ParamGraph graph_from_json(const Json& j);

void write_instance(const std::string& path, const ParamGraph& g);
ParamGraph read_instance(const std::string& path);

Json to_json(const LinearInequality& ineq);
Json to_json(const Region& region);

Json to_json(const KleeneResult& result);

// One JSON-lines record of the enumeration stream.
Json solution_to_json(const SptSolution& solution);

}  // namespace tropsp

#endif  // TROPSP_JSON_IO_HPP_
