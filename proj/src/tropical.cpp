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

#include "tropsp/tropical.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>

namespace tropsp {

bool varset_lex_less(VarSet a, VarSet b) {
  // Walk both sorted index lists in parallel; a shorter list that is a
  // prefix of the other compares smaller.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

double Monomial::eval(std::span<const double> z) const {
  if (is_infinite()) return kInf;
  double acc = constant;
  for (VarSet s = vars; s != 0; s &= s - 1) {
    acc += z[static_cast<std::size_t>(std::countr_zero(s))];
  }
  return acc;
}

std::optional<Monomial> try_mul(const Monomial& a, const Monomial& b) {
  if (a.is_infinite() || b.is_infinite()) return Monomial::infinite();
  if ((a.vars & b.vars) != 0) return std::nullopt;
  return Monomial{a.constant + b.constant, a.vars | b.vars};
}

Monomial mul(const Monomial& a, const Monomial& b) {
  auto m = try_mul(a, b);
  if (!m) {
    throw OverlappingVariablesError("monomial product is not multilinear: " +
                                    to_string(a) + " * " + to_string(b));
  }
  return *m;
}

BoundsBox::BoundsBox(std::vector<double> lo, std::vector<double> up)
    : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() != upper.size()) {
    throw Error("bounds box: lower/upper dimension mismatch");
  }
  if (lower.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error("bounds box: more than " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i])) throw Error("bounds box: lower bound must be finite");
    if (std::isnan(upper[i]) || upper[i] < lower[i]) {
      throw Error("bounds box: needs lower <= upper per variable");
    }
  }
}

BoundsBox BoundsBox::nonnegative(int k) {
  return BoundsBox(std::vector<double>(static_cast<std::size_t>(k), 0.0),
                   std::vector<double>(static_cast<std::size_t>(k), kInf));
}

bool BoundsBox::nonneg_lower() const {
  return std::all_of(lower.begin(), lower.end(), [](double v) { return v >= 0.0; });
}

bool BoundsBox::contains(std::span<const double> z) const {
  if (z.size() != lower.size()) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < lower[i] || z[i] > upper[i]) return false;
  }
  return true;
}

double BoundsBox::sum_lower(VarSet s) const {
  double acc = 0.0;
  for (; s != 0; s &= s - 1) acc += lower[static_cast<std::size_t>(std::countr_zero(s))];
  return acc;
}

double BoundsBox::sum_upper(VarSet s) const {
  double acc = 0.0;
  for (; s != 0; s &= s - 1) acc += upper[static_cast<std::size_t>(std::countr_zero(s))];
  return acc;
}

Order compare(const Monomial& a, const Monomial& b, const BoundsBox& box) {
  const VarSet only_a = a.vars & ~b.vars;
  const VarSet only_b = b.vars & ~a.vars;
  // IEEE handles the infinite monomial: its constant is +inf, so it is >=
  // everything and <= only another +inf.
  const bool le = a.constant + box.sum_upper(only_a) <= b.constant + box.sum_lower(only_b);
  const bool ge = b.constant + box.sum_upper(only_b) <= a.constant + box.sum_lower(only_a);
  if (le && ge) return Order::Equal;
  if (le) return Order::LessEqual;
  if (ge) return Order::GreaterEqual;
  return Order::Incomparable;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.vars != b.vars) return varset_lex_less(a.vars, b.vars);
  return a.constant < b.constant;
}

TropPoly TropPoly::constant(double c) { return single(Monomial::constant_term(c)); }

TropPoly TropPoly::single(const Monomial& m) {
  return TropPoly(std::vector<Monomial>{m});
}

TropPoly prune(std::vector<Monomial> terms, const BoundsBox& box) {
  std::sort(terms.begin(), terms.end(), canonical_less);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  const std::size_t n = terms.size();
  std::vector<bool> dropped(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dropped[j]) continue;
      switch (compare(terms[j], terms[i], box)) {
        case Order::LessEqual:
          dropped[i] = true;
          break;
        case Order::Equal:
          // Function-equal ties keep the lex-smaller variable set, then the
          // smaller constant.  (Distinct monomials can only be function-equal
          // when the box pins some variables, so the sets differ here.)
          if (terms[j].vars != terms[i].vars
                  ? varset_lex_less(terms[j].vars, terms[i].vars)
                  : terms[j].constant < terms[i].constant) {
            dropped[i] = true;
          }
          break;
        default:
          break;
      }
      if (dropped[i]) break;
    }
  }

  std::vector<Monomial> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped[i]) kept.push_back(terms[i]);
  }
  if (kept.empty()) kept.push_back(Monomial::infinite());
  // A finite term always dominates the infinite monomial, so if one survived
  // it must be alone.
  assert(kept.size() == 1 || !kept.front().is_infinite());
  return TropPoly(std::move(kept));
}

TropPoly add(const TropPoly& f, const TropPoly& g, const BoundsBox& box) {
  std::vector<Monomial> terms;
  terms.reserve(f.terms().size() + g.terms().size());
  terms.insert(terms.end(), f.terms().begin(), f.terms().end());
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return prune(std::move(terms), box);
}

TropPoly mul(const TropPoly& f, const TropPoly& g, const BoundsBox& box) {
  std::vector<Monomial> terms;
  terms.reserve(f.terms().size() * g.terms().size());
  for (const Monomial& a : f.terms()) {
    for (const Monomial& b : g.terms()) {
      if (auto m = try_mul(a, b)) terms.push_back(*m);
    }
  }
  return prune(std::move(terms), box);
}

double eval(const TropPoly& f, std::span<const double> z) {
  double best = kInf;
  for (const Monomial& m : f.terms()) best = std::min(best, m.eval(z));
  return best;
}

std::string format_double(double v) {
  if (v == kInf) return "inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_string(const Monomial& m) {
  if (m.is_infinite()) return "inf";
  std::string out;
  if (m.constant != 0.0 || m.vars == 0) out = format_double(m.constant);
  for (VarSet s = m.vars; s != 0; s &= s - 1) {
    if (!out.empty()) out += "+";
    out += "x" + std::to_string(std::countr_zero(s));
  }
  return out;
}

std::string to_string(const TropPoly& f) {
  if (f.terms().size() == 1) return to_string(f.terms()[0]);
  std::string out = "min(";
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(f.terms()[i]);
  }
  out += ")";
  return out;
}

}  // namespace tropsp
