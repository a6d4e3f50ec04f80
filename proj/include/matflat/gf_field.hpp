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

#include <cstdint>
#include <memory>
#include <vector>

#include "matflat/simd/kernels.hpp"

namespace matflat {

using FieldElement = std::uint8_t;

inline constexpr int kMaxFieldOrder = 128;

/// Lookup-table arithmetic in GF(q), q = p^degree <= 128.
///
/// Element n encodes the polynomial over GF(p) whose coefficient of x^i is the
/// i-th base-p digit of n. The reduction modulus is the monic irreducible of
/// the right degree whose coefficients c_0..c_{d-1}, read the same way, give
/// the smallest number: x^2+x+1, x^3+x+1, x^2+1 for q = 4, 8, 9.
class FieldTable {
 public:
  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return degree_; }

  /// Coefficients c_0, ..., c_degree (c_degree == 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Throws Error(kDivideByZero) for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, unsigned e) const;

  const std::vector<FieldElement>& add_table() const { return add_; }
  const std::vector<FieldElement>& mul_table() const { return mul_; }
  /// Index 0 holds 0 and is never a valid inverse.
  const std::vector<FieldElement>& inv_table() const { return inv_; }

  simd::FieldView view() const { return {q_, p_, degree_, add_.data(), mul_.data()}; }

  /// Human-readable modulus, e.g. "x^3 + x + 1".
  std::string modulus_string() const;

 private:
  friend FieldTable build_field(int q);
  FieldTable() = default;

  int q_ = 0;
  int p_ = 0;
  int degree_ = 0;
  std::vector<int> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_;
};

/// Throws Error(kNotPrimePower) for q < 2 or composite non-prime-powers and
/// Error(kUnsupported) for q > 128.
FieldTable build_field(int q);

/// Process-wide cache of built fields; tables are immutable once built.
std::shared_ptr<const FieldTable> shared_field(int q);

/// n = p^k for a prime p and k >= 1. Writes p and k when non-null.
bool is_prime_power(std::uint64_t n, std::uint64_t* prime = nullptr, int* exponent = nullptr);

/// Largest prime power q <= ell. Requires ell >= 2.
std::uint64_t largest_prime_power_leq(std::uint64_t ell);

/// Monic polynomial over GF(p) (coefficients low degree first) has no monic
/// factor of degree 1..deg/2.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

}  // namespace matflat
