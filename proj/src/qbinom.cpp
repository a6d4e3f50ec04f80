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

#include "matflat/qbinom.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "matflat/error.hpp"

namespace matflat {
namespace {

void check_args(int q, int r) {
  if (q < 2) throw Error(ErrorKind::kInvalidArgument, "q-binomial needs q >= 2");
  if (r < 0) throw Error(ErrorKind::kInvalidArgument, "q-binomial needs r >= 0");
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

QBinom qbinom_recursive(int q, int r, int k) {
  check_args(q, r);
  QBinom out{q, r, k, 0};
  if (k < 0 || k > r) return out;
  // Row-by-row evaluation of the recursion; row[j] holds [i j] for j <= min(i, k).
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  std::vector<BigInt> q_pow(k + 1);
  q_pow[0] = 1;
  for (int j = 1; j <= k; ++j) q_pow[j] = q_pow[j - 1] * q;
  for (int i = 1; i <= r; ++i) {
    const int top = std::min(i, k);
    for (int j = top; j >= 1; --j) {
      if (j == i)
        row[j] = 1;
      else
        row[j] = q_pow[j] * row[j] + row[j - 1];
    }
  }
  out.value = row[k];
  return out;
}

QBinom qbinom_product(int q, int r, int k) {
  check_args(q, r);
  QBinom out{q, r, k, 0};
  if (k < 0 || k > r) return out;
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (int i = 0; i < k; ++i) {
    num *= big_pow(bq, static_cast<unsigned>(r - i)) - 1;
    den *= big_pow(bq, static_cast<unsigned>(k - i)) - 1;
  }
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0)
    throw Error(ErrorKind::kInternal, "inexact q-binomial division at q=" + std::to_string(q) +
                                          " r=" + std::to_string(r) + " k=" + std::to_string(k));
  out.value = quot;
  return out;
}

Report check_qb_properties(int q, int r, int k) {
  if (!(0 < k && k < r))
    throw Error(ErrorKind::kInvalidArgument, "q-binomial properties need 0 < k < r");
  Report report;
  const BigInt value = qbinom(q, r, k);
  const BigInt bq = q;
  auto base_values = [&](ClaimReport& c) {
    c.values["q"] = q;
    c.values["r"] = r;
    c.values["k"] = k;
    c.values["qbinom"] = str(value);
  };

  {
    Stopwatch sw;
    ClaimReport c{"qb1", ClaimStatus::kPass, "Lemma 4 (qb1)"};
    base_values(c);
    int first_bad = -1;
    for (int i = 0; i <= r; ++i) {
      const BigInt rhs = big_pow(bq, static_cast<unsigned>(k * i)) * qbinom(q, r - i, k);
      if (value < rhs) {
        first_bad = i;
        break;
      }
    }
    c.status = status_of(first_bad < 0);
    if (first_bad >= 0) c.values["failing_i"] = first_bad;
    c.values["checked_i"] = r + 1;
    c.runtime_ms = sw.elapsed_ms();
    report.push_back(std::move(c));
  }
  {
    Stopwatch sw;
    ClaimReport c{"qb2", ClaimStatus::kPass, "Lemma 4 (qb2)"};
    base_values(c);
    const BigInt lower = big_pow(bq, static_cast<unsigned>(k * (r - k)));
    const BigInt upper = big_pow(bq, static_cast<unsigned>(r * k));
    c.values["lower"] = str(lower);
    c.values["upper"] = str(upper);
    c.status = status_of(lower <= value && value <= upper);
    c.runtime_ms = sw.elapsed_ms();
    report.push_back(std::move(c));
  }
  {
    Stopwatch sw;
    ClaimReport c{"qb3", ClaimStatus::kPass, "Lemma 4 (qb3)"};
    base_values(c);
    const BigInt rhs = qbinom(q, r - 1, k) + big_pow(bq, static_cast<unsigned>(r - k)) * qbinom(q, r - 1, k - 1);
    c.values["rhs"] = str(rhs);
    c.status = status_of(rhs == value);
    c.runtime_ms = sw.elapsed_ms();
    report.push_back(std::move(c));
  }
  return report;
}

}  // namespace matflat
