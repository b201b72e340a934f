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
// Min-plus scalars, multilinear monomials and tropical polynomials.
//
// A scalar lives in R ∪ {+inf}: "addition" is min, "multiplication" is
// ordinary +, and +inf is the additive identity (no path).  A monomial is a
// finite constant plus a set of distinct variables (the weight of a simple
// path whose variable arcs are pairwise distinct); a polynomial is a formal
// minimum of monomials, kept as an antichain of the partial order "f <= g
// everywhere on the variable bound box".  NaN and -inf are never
// representable.

#ifndef TROPSP_TROPICAL_HPP_
#define TROPSP_TROPICAL_HPP_

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropsp/errors.hpp"

namespace tropsp {

// The tropical additive identity.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A set of variable indices as a bit mask.  Variable indices live in
// [0, kMaxVars); widen to a two-word bitset here if more are ever needed.
using VarSet = std::uint64_t;
inline constexpr int kMaxVars = 64;

constexpr VarSet var_bit(int i) { return VarSet{1} << i; }
constexpr int var_count(VarSet s) { return std::popcount(s); }

// Order of variable sets as lexicographically compared sorted index lists
// (e.g. {2,3} < {3} because [2,3] < [3], and {0} < {0,5} as a prefix).
bool varset_lex_less(VarSet a, VarSet b);

// Raised by the checked monomial product when both operands are finite and
// share a variable (a path revisiting a variable arc, i.e. not simple).
struct OverlappingVariablesError : Error {
  using Error::Error;
};

// constant + sum of distinct variables.  The infinite monomial is the unique
// one with constant = +inf; it has no variables.
struct Monomial {
  double constant = kInf;
  VarSet vars = 0;

  static Monomial infinite() { return Monomial{}; }
  static Monomial constant_term(double c) { return Monomial{c, 0}; }
  static Monomial variable(int i) { return Monomial{0.0, var_bit(i)}; }

  bool is_infinite() const { return constant == kInf; }
  int degree() const { return var_count(vars); }

  double eval(std::span<const double> z) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Product (ordinary sum) of two monomials; infinity absorbs.  Returns nullopt
// when both are finite and the variable sets intersect.
std::optional<Monomial> try_mul(const Monomial& a, const Monomial& b);

// Same, but throws OverlappingVariablesError instead of returning nullopt.
Monomial mul(const Monomial& a, const Monomial& b);

// Per-variable bounds lower[i] <= x_i <= upper[i].  Lower bounds are finite
// (negative is allowed for library use; the traversal algorithms require
// nonnegative), upper bounds may be +inf.
struct BoundsBox {
  std::vector<double> lower;
  std::vector<double> upper;

  BoundsBox() = default;
  BoundsBox(std::vector<double> lo, std::vector<double> up);

  // [0, inf] in every coordinate.
  static BoundsBox nonnegative(int k);

  int k() const { return static_cast<int>(lower.size()); }
  bool nonneg_lower() const;
  bool contains(std::span<const double> z) const;

  double sum_lower(VarSet s) const;
  double sum_upper(VarSet s) const;
};

// Outcome of comparing two monomials or polynomials as functions on a box.
// LessEqual / GreaterEqual are strict outcomes in the partial-order sense:
// "<= everywhere and not equal as functions".
enum class Order { LessEqual, GreaterEqual, Equal, Incomparable };

// Compares a and b as functions on the box.  Both extrema of a difference of
// monomials sit at box vertices, so a <= b iff
//   a.constant + sum of upper bounds over vars(a)\vars(b)
//     <= b.constant + sum of lower bounds over vars(b)\vars(a);
// shared variables cancel.  The infinite monomial dominates everything.
Order compare(const Monomial& a, const Monomial& b, const BoundsBox& box);

// A tropical polynomial: formal min of monomials, canonically an antichain
// sorted by (degree, variable-set lex order, constant).  Never empty; the
// polynomial +inf is the single infinite monomial.  Immutable after
// construction.
class TropPoly {
 public:
  // The polynomial +inf.
  TropPoly() : terms_{Monomial::infinite()} {}
  static TropPoly infinite() { return TropPoly{}; }
  static TropPoly constant(double c);
  static TropPoly single(const Monomial& m);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_infinite() const { return terms_.size() == 1 && terms_[0].is_infinite(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  explicit TropPoly(std::vector<Monomial> canonical) : terms_(std::move(canonical)) {}
  std::vector<Monomial> terms_;

  friend TropPoly prune(std::vector<Monomial> terms, const BoundsBox& box);
};

// Canonical term order: degree, then variable-set lex, then constant.
bool canonical_less(const Monomial& a, const Monomial& b);

// Canonicalizes a term list: drops every monomial dominated by another one
// (ties between function-equal monomials keep the lexicographically smaller
// variable set, then the smaller constant) and sorts the survivors.  An empty
// input yields the polynomial +inf.
TropPoly prune(std::vector<Monomial> terms, const BoundsBox& box);

// min(f, g): union of term lists, pruned.
TropPoly add(const TropPoly& f, const TropPoly& g, const BoundsBox& box);

// f + g pointwise: all pairwise products, pruned.  Products with overlapping
// variable sets (non-simple path combinations) are discarded; under
// nonnegative weights such a product is never the pointwise minimum.
TropPoly mul(const TropPoly& f, const TropPoly& g, const BoundsBox& box);

// min over terms of (constant + sum of z over the term's variables).
double eval(const TropPoly& f, std::span<const double> z);

// "min(1+x0, 3)" style rendering; a one-term polynomial prints bare.
std::string to_string(const Monomial& m);
std::string to_string(const TropPoly& f);

// Shortest round-trip decimal for a double ("2.5", "3", "inf").
std::string format_double(double v);

}  // namespace tropsp

#endif  // TROPSP_TROPICAL_HPP_
