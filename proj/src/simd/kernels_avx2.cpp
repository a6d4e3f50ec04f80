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

#include <immintrin.h>

#include <vector>

#include "matflat/simd/kernels.hpp"

namespace matflat::simd {
namespace {

inline __m256i load_set(const ElementSet& s) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(s.words().data()));
}

std::size_t count_between_avx2(std::span<const ElementSet> sets, const ElementSet& lower,
                               const ElementSet& upper) {
  const __m256i lo = load_set(lower);
  const __m256i not_up = _mm256_xor_si256(load_set(upper), _mm256_set1_epi32(-1));
  std::size_t hits = 0;
  for (const ElementSet& s : sets) {
    const __m256i v = load_set(s);
    // lower \ s and s \ upper must both be empty.
    const __m256i bad = _mm256_or_si256(_mm256_andnot_si256(v, lo), _mm256_and_si256(v, not_up));
    hits += _mm256_testz_si256(bad, bad);
  }
  return hits;
}

std::size_t mark_subsets_avx2(std::span<const ElementSet> sets, const ElementSet& upper,
                              std::uint8_t* out) {
  const __m256i up = load_set(upper);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const __m256i v = load_set(sets[i]);
    // testc(up, v) is 1 iff (~up & v) == 0.
    out[i] = static_cast<std::uint8_t>(_mm256_testc_si256(up, v));
    hits += out[i];
  }
  return hits;
}

// Multiplication by a constant is a 16-entry shuffle when q <= 16. Addition is
// XOR in characteristic 2 and a conditional subtract for prime q. Other fields
// (q = 9 or q > 16) take the scalar path.
void gf_lincomb_avx2(const FieldView& f, std::span<const std::uint8_t> coeffs,
                     const std::uint8_t* rows, std::size_t stride, std::size_t n,
                     std::uint8_t* out) {
  const bool char2 = f.p == 2;
  const bool prime = f.degree == 1;
  if (f.q > 16 || !(char2 || prime)) {
    scalar_kernels().gf_lincomb(f, coeffs, rows, stride, n, out);
    return;
  }
  struct Lut {
    __m256i v;
  };
  std::vector<Lut> luts(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    alignas(16) std::uint8_t lut_bytes[16] = {};
    for (int x = 0; x < f.q; ++x) lut_bytes[x] = f.mul[coeffs[i] * f.q + x];
    luts[i].v =
        _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(lut_bytes)));
  }
  const std::size_t blocks = n / 32;
  const __m256i modulus = _mm256_set1_epi8(static_cast<char>(f.p));
  for (std::size_t b = 0; b < blocks; ++b) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      const __m256i x =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i * stride + b * 32));
      const __m256i prod = _mm256_shuffle_epi8(luts[i].v, x);
      if (char2) {
        acc = _mm256_xor_si256(acc, prod);
      } else {
        const __m256i sum = _mm256_add_epi8(acc, prod);
        acc = _mm256_min_epu8(sum, _mm256_sub_epi8(sum, modulus));
      }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + b * 32), acc);
  }
  const std::size_t done = blocks * 32;
  if (done < n) {
    // Tail: shift the row pointers so the scalar kernel sees columns done..n-1.
    std::vector<std::uint8_t> tail_rows(coeffs.size() * (n - done));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t e = done; e < n; ++e)
        tail_rows[i * (n - done) + (e - done)] = rows[i * stride + e];
    scalar_kernels().gf_lincomb(f, coeffs, tail_rows.data(), n - done, n - done, out + done);
  }
}

ElementSet nonzero_mask_avx2(const std::uint8_t* v, std::size_t n) {
  ElementSet s;
  auto& words = s.words();
  const std::size_t blocks = n / 32;
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t b = 0; b < blocks; ++b) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + b * 32));
    const std::uint32_t zero_bits =
        static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
    const std::uint64_t bits = static_cast<std::uint32_t>(~zero_bits);
    words[b / 2] |= bits << ((b % 2) * 32);
  }
  for (std::size_t e = blocks * 32; e < n; ++e)
    if (v[e]) s.insert(static_cast<int>(e));
  return s;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Backend::kAvx2, count_between_avx2, mark_subsets_avx2,
                                 gf_lincomb_avx2, nonzero_mask_avx2};
  return table;
}

}  // namespace matflat::simd
