// Copyright 2026 The Authors.
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "matflat/report.hpp"

namespace matflat {

using BigInt = boost::multiprecision::cpp_int;

/// Gaussian binomial coefficient [r k]_q. Zero exactly when k < 0 or k > r.
struct QBinom {
  int q = 2;
  int r = 0;
  int k = 0;
  BigInt value;
};

BigInt big_pow(const BigInt& base, unsigned exponent);

/// [r 0] = [r r] = 1 and [r k] = q^k [r-1 k] + [r-1 k-1].
QBinom qbinom_recursive(int q, int r, int k);

/// Quotient of the products (q^r - 1)...(q^{r-k+1} - 1) and (q^k - 1)...(q - 1).
/// Throws Error(kInternal) if the division is inexact.
QBinom qbinom_product(int q, int r, int k);

/// Default evaluation route.
inline BigInt qbinom(int q, int r, int k) { return qbinom_product(q, r, k).value; }

/// qb1: [r k] >= q^{ki} [r-i k] for i = 0..r
/// qb2: q^{k(r-k)} <= [r k] <= q^{rk}
/// qb3: [r k] = [r-1 k] + q^{r-k} [r-1 k-1]
/// Requires 0 < k < r; one report entry per property.
Report check_qb_properties(int q, int r, int k);

}  // namespace matflat
