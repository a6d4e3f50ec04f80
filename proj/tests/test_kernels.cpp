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

#include <doctest.h>

#include <random>

#include "matflat/flats.hpp"
#include "matflat/geometry.hpp"
#include "matflat/gf_field.hpp"
#include "matflat/minor_scan.hpp"
#include "matflat/simd/kernels.hpp"

using namespace matflat;

namespace {

ElementSet random_set(std::mt19937_64& rng, int density) {
  ElementSet s;
  for (int e = 0; e < kMaxElements; ++e)
    if (static_cast<int>(rng() % 100) < density) s.insert(e);
  return s;
}

std::vector<ElementSet> random_sets(std::mt19937_64& rng, std::size_t n, const ElementSet& upper) {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    // mix of subsets of `upper` and arbitrary sets so both answers occur
    ElementSet s = random_set(rng, 3 + static_cast<int>(i % 20));
    if (i % 3 == 0) s &= upper;
    out.push_back(s);
  }
  return out;
}

std::vector<const simd::KernelTable*> wide_tables() {
  std::vector<const simd::KernelTable*> out;
  for (simd::Backend b : simd::available_backends())
    if (b != simd::Backend::kScalar) out.push_back(simd::kernels_for(b));
  return out;
}

// Restores the runtime choice at scope exit.
struct BackendGuard {
  simd::Backend saved = simd::active_kernels().backend;
  ~BackendGuard() { simd::set_active_backend(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernels match direct loops") {
  std::mt19937_64 rng(7);
  const auto& k = simd::scalar_kernels();
  const ElementSet upper = random_set(rng, 60);
  const ElementSet lower = random_set(rng, 2) & upper;
  const auto sets = random_sets(rng, 100, upper);
  std::size_t between = 0, subsets = 0;
  for (const auto& s : sets) {
    between += lower.is_subset_of(s) && s.is_subset_of(upper);
    subsets += s.is_subset_of(upper);
  }
  CHECK(k.count_between(sets, lower, upper) == between);
  std::vector<std::uint8_t> marks(sets.size());
  CHECK(k.mark_subsets(sets, upper, marks.data()) == subsets);
  for (std::size_t i = 0; i < sets.size(); ++i) CHECK(marks[i] == sets[i].is_subset_of(upper));

  for (int q : {2, 3, 4, 9, 16, 27, 125}) {
    const auto f = shared_field(q);
    const std::size_t rows = 5, n = 77, stride = 96;
    std::vector<std::uint8_t> mat(rows * stride), out(n);
    for (auto& x : mat) x = static_cast<std::uint8_t>(rng() % q);
    std::vector<std::uint8_t> coeffs(rows);
    for (auto& c : coeffs) c = static_cast<std::uint8_t>(rng() % q);
    k.gf_lincomb(f->view(), coeffs, mat.data(), stride, n, out.data());
    for (std::size_t e = 0; e < n; ++e) {
      FieldElement acc = 0;
      for (std::size_t i = 0; i < rows; ++i) acc = f->add(acc, f->mul(coeffs[i], mat[i * stride + e]));
      REQUIRE(out[e] == acc);
    }
    const ElementSet nz = k.nonzero_mask(out.data(), n);
    for (std::size_t e = 0; e < n; ++e) CHECK(nz.contains(static_cast<int>(e)) == (out[e] != 0));
  }
}

TEST_CASE("wide kernels are bit-identical to scalar") {
  const auto tables = wide_tables();
  if (tables.empty()) {
    MESSAGE("no wide kernel variant on this machine");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (const auto* t : tables) {
    CAPTURE(simd::to_string(t->backend));
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 31u, 64u, 257u}) {
      const ElementSet upper = random_set(rng, 70);
      const ElementSet lower = random_set(rng, 3) & upper;
      const auto sets = random_sets(rng, count, upper);
      CHECK(t->count_between(sets, lower, upper) == ref.count_between(sets, lower, upper));
      std::vector<std::uint8_t> a(count + 1, 0xAA), b(count + 1, 0xAA);
      CHECK(t->mark_subsets(sets, upper, a.data()) == ref.mark_subsets(sets, upper, b.data()));
      CHECK(a == b);
    }
    for (int q = 2; q <= kMaxFieldOrder; ++q) {
      if (!is_prime_power(q)) continue;
      CAPTURE(q);
      const auto f = shared_field(q);
      for (std::size_t n : {1u, 31u, 32u, 33u, 64u, 100u, 256u}) {
        const std::size_t stride = (n + 31) / 32 * 32;
        for (std::size_t rows : {1u, 2u, 7u}) {
          std::vector<std::uint8_t> mat(rows * stride);
          for (auto& x : mat) x = static_cast<std::uint8_t>(rng() % q);
          std::vector<std::uint8_t> coeffs(rows);
          for (auto& c : coeffs) c = static_cast<std::uint8_t>(rng() % q);
          if (rows == 2) coeffs[0] = 0;
          std::vector<std::uint8_t> a(n + 8, 0x55), b(n + 8, 0x55);
          t->gf_lincomb(f->view(), coeffs, mat.data(), stride, n, a.data());
          ref.gf_lincomb(f->view(), coeffs, mat.data(), stride, n, b.data());
          REQUIRE(a == b);
          CHECK(t->nonzero_mask(a.data(), n) == ref.nonzero_mask(b.data(), n));
        }
      }
    }
  }
}

TEST_CASE("lattice results do not depend on the kernel variant") {
  BackendGuard guard;
  const auto pg = build_pg(4, 3);
  const auto blok = build_blokhuis(4);
  const auto ag = build_ag(4, 4);
  simd::set_active_backend(simd::Backend::kScalar);
  const FlatLevels ref = enumerate_flats(*pg, 4);
  const FlatLevels ref_ag = enumerate_flats(*ag, 3);
  const auto ref_line = max_line_length(*blok);
  for (simd::Backend b : simd::available_backends()) {
    CAPTURE(simd::to_string(b));
    REQUIRE(simd::set_active_backend(b));
    CHECK(enumerate_flats(*pg, 4).levels == ref.levels);
    CHECK(enumerate_flats(*ag, 3).levels == ref_ag.levels);
    const auto line = max_line_length(*blok);
    CHECK(line.max_line_length == ref_line.max_line_length);
    CHECK(line.histogram == ref_line.histogram);
  }
}

TEST_CASE("scalar is always available") {
  const auto backends = simd::available_backends();
  CHECK(std::find(backends.begin(), backends.end(), simd::Backend::kScalar) != backends.end());
  CHECK(simd::kernels_for(simd::Backend::kScalar) == &simd::scalar_kernels());
}

}  // TEST_SUITE
