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

// Data-parallel inner loops used by closure computation and lattice scans.
// Every kernel has a scalar reference implementation; wider variants are
// compiled separately and chosen once at runtime from the host CPU. All
// variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matflat/element_set.hpp"

namespace matflat::simd {

enum class Backend { kScalar, kAvx2 };

const char* to_string(Backend b);

/// Raw GF(q) tables as seen by the kernels. Elements are 0..q-1 and the
/// tables are q*q row-major.
struct FieldView {
  int q = 0;
  int p = 0;
  int degree = 0;
  const std::uint8_t* add = nullptr;
  const std::uint8_t* mul = nullptr;
};

struct KernelTable {
  Backend backend;

  /// Number of sets s with lower ⊆ s ⊆ upper.
  std::size_t (*count_between)(std::span<const ElementSet> sets, const ElementSet& lower,
                               const ElementSet& upper);

  /// out[i] = (sets[i] ⊆ upper). Returns the number of hits.
  std::size_t (*mark_subsets)(std::span<const ElementSet> sets, const ElementSet& upper,
                              std::uint8_t* out);

  /// out[e] = sum_i coeffs[i] * rows[i * stride + e] over GF(q), for e < n.
  void (*gf_lincomb)(const FieldView& f, std::span<const std::uint8_t> coeffs,
                     const std::uint8_t* rows, std::size_t stride, std::size_t n,
                     std::uint8_t* out);

  /// Elements e < n with v[e] != 0. Requires n <= kMaxElements.
  ElementSet (*nonzero_mask)(const std::uint8_t* v, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* kernels_for(Backend b);

/// The table used by the library. Chosen on first call: the widest supported
/// variant, unless MATFLAT_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

/// Overrides the runtime choice. Returns false if `b` is unavailable.
bool set_active_backend(Backend b);

std::vector<Backend> available_backends();

}  // namespace matflat::simd
