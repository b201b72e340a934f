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

#include "tropsp/bounds.hpp"

#include <algorithm>

#include "tropsp/errors.hpp"

namespace tropsp {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class power(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

mpz_class phi(int n, int k) {
  if (n < 1 || k < 0) throw Error("phi needs n >= 1 and k >= 0");
  mpz_class sum = 0;
  const int top = std::min(k, n - 1);
  for (int i = 0; i <= top; ++i) {
    sum += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)) *
           power(static_cast<unsigned long>(i + 1), static_cast<unsigned long>(n - i - 1));
  }
  return sum;
}

mpz_class tree_count_bound(int n, int m, int k) {
  if (n < 1 || m < 0 || k < 0) throw Error("tree_count_bound needs valid sizes");
  mpz_class best = phi(n, k);
  if (n >= 2) {
    best = std::min(best, power(static_cast<unsigned long>(n),
                                static_cast<unsigned long>(n - 2)));
  }
  best = std::min(best, binomial(static_cast<unsigned long>(m),
                                 static_cast<unsigned long>(n - 1)));
  return best;
}

mpz_class feasible_count_bound(int n, int k) {
  if (n < 1 || k < 0) throw Error("feasible_count_bound needs n >= 1 and k >= 0");
  mpz_class sum = 0;
  const int top = std::min(k, n - 1);
  for (int i = 0; i <= top; ++i) {
    // (n-1)! / (n-i-1)! = (n-1)(n-2)...(n-i)
    mpz_class falling = 1;
    for (int j = 0; j < i; ++j) falling *= n - 1 - j;
    sum += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)) * falling;
  }
  return sum;
}

mpz_class feasible_count_bound_coarse(int n, int k) {
  if (n < 1 || k < 0) throw Error("feasible_count_bound needs n >= 1 and k >= 0");
  return power(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

}  // namespace tropsp
