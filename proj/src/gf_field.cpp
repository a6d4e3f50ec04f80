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

#include "matflat/gf_field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

#include "matflat/error.hpp"

namespace matflat {
namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly digits(int n, int p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len; ++i, n /= p) out[i] = n % p;
  return out;
}

int undigits(const Poly& a, int p) {
  int n = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) n = n * p + a[i];
  return n;
}

Poly smallest_irreducible(int p, int degree) {
  // Candidates in increasing order of their base-p encoding (c_0 least
  // significant), the same encoding used for field elements.
  int total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (int t = 0; t < total; ++t) {
    Poly cand(degree + 1, 0);
    int v = t;
    for (int i = 0; i < degree; ++i, v /= p) cand[i] = v % p;
    cand[degree] = 1;
    if (is_irreducible_mod_p(cand, p)) return cand;
  }
  throw Error(ErrorKind::kInternal, "no irreducible polynomial found");
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrimePower:
      return "NotPrimePower";
    case ErrorKind::kUnsupported:
      return "Unsupported";
    case ErrorKind::kDivideByZero:
      return "DivideByZero";
    case ErrorKind::kInternal:
      return "InternalError";
    case ErrorKind::kResourceLimit:
      return "ResourceLimit";
    case ErrorKind::kLoopElement:
      return "LoopElement";
    case ErrorKind::kNotInClass:
      return "NotInClass";
    case ErrorKind::kOutOfRange:
      return "OutOfRange";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kIo:
      return "IoError";
  }
  return "Error";
}

bool is_prime_power(std::uint64_t n, std::uint64_t* prime, int* exponent) {
  if (n < 2) return false;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  int k = 0;
  std::uint64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = k;
  return true;
}

std::uint64_t largest_prime_power_leq(std::uint64_t ell) {
  if (ell < 2) throw Error(ErrorKind::kInvalidArgument, "largest_prime_power_leq needs ell >= 2");
  for (std::uint64_t q = ell;; --q)
    if (is_prime_power(q)) return q;
}

bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p) {
  const int degree = static_cast<int>(coeffs.size()) - 1;
  if (degree < 1 || coeffs.back() != 1) return false;
  if (degree == 1) return true;
  for (int d = 1; d <= degree / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int t = 0; t < count; ++t) {
      Poly divisor = digits(t, p, d);
      divisor.push_back(1);
      if (poly_mod(coeffs, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldElement FieldTable::inv(FieldElement a) const {
  if (a == 0) throw Error(ErrorKind::kDivideByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

FieldElement FieldTable::pow(FieldElement a, unsigned e) const {
  FieldElement result = 1;
  FieldElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FieldTable::modulus_string() const {
  std::string out;
  for (int i = degree_; i >= 0; --i) {
    const int c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FieldTable build_field(int q) {
  std::uint64_t p = 0;
  int degree = 0;
  if (q < 2 || !is_prime_power(static_cast<std::uint64_t>(q), &p, &degree))
    throw Error(ErrorKind::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder)
    throw Error(ErrorKind::kUnsupported,
                "GF(" + std::to_string(q) + ") exceeds the supported order " +
                    std::to_string(kMaxFieldOrder));

  FieldTable f;
  f.q_ = q;
  f.p_ = static_cast<int>(p);
  f.degree_ = degree;
  if (degree == 1)
    f.modulus_ = {0, 1};
  else
    f.modulus_ = smallest_irreducible(f.p_, degree);

  const std::size_t qq = static_cast<std::size_t>(q) * q;
  f.add_.assign(qq, 0);
  f.mul_.assign(qq, 0);
  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const Poly da = digits(a, f.p_, degree);
    Poly na(degree);
    for (int i = 0; i < degree; ++i) na[i] = (f.p_ - da[i]) % f.p_;
    f.neg_[a] = static_cast<FieldElement>(undigits(na, f.p_));
    for (int b = 0; b < q; ++b) {
      const Poly db = digits(b, f.p_, degree);
      Poly sum(degree);
      for (int i = 0; i < degree; ++i) sum[i] = (da[i] + db[i]) % f.p_;
      f.add_[a * q + b] = static_cast<FieldElement>(undigits(sum, f.p_));

      Poly prod(2 * degree, 0);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p_;
      Poly red = degree == 1 ? Poly{prod[0]} : poly_mod(prod, f.modulus_, f.p_);
      red.resize(degree, 0);
      f.mul_[a * q + b] = static_cast<FieldElement>(undigits(red, f.p_));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) {
        f.inv_[a] = static_cast<FieldElement>(b);
        break;
      }
  return f;
}

std::shared_ptr<const FieldTable> shared_field(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FieldTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FieldTable>(build_field(q));
  cache.emplace(q, f);
  return f;
}

}  // namespace matflat
