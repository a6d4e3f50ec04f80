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

#include "matflat/simd/kernels.hpp"

namespace matflat::simd {
namespace {

std::size_t count_between_scalar(std::span<const ElementSet> sets, const ElementSet& lower,
                                 const ElementSet& upper) {
  std::size_t hits = 0;
  for (const ElementSet& s : sets) hits += lower.is_subset_of(s) && s.is_subset_of(upper);
  return hits;
}

std::size_t mark_subsets_scalar(std::span<const ElementSet> sets, const ElementSet& upper,
                                std::uint8_t* out) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out[i] = sets[i].is_subset_of(upper) ? 1 : 0;
    hits += out[i];
  }
  return hits;
}

void gf_lincomb_scalar(const FieldView& f, std::span<const std::uint8_t> coeffs,
                       const std::uint8_t* rows, std::size_t stride, std::size_t n,
                       std::uint8_t* out) {
  for (std::size_t e = 0; e < n; ++e) out[e] = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::uint8_t c = coeffs[i];
    if (c == 0) continue;
    const std::uint8_t* mul_row = f.mul + static_cast<std::size_t>(c) * f.q;
    const std::uint8_t* row = rows + i * stride;
    for (std::size_t e = 0; e < n; ++e)
      out[e] = f.add[static_cast<std::size_t>(out[e]) * f.q + mul_row[row[e]]];
  }
}

ElementSet nonzero_mask_scalar(const std::uint8_t* v, std::size_t n) {
  ElementSet s;
  for (std::size_t e = 0; e < n; ++e)
    if (v[e]) s.insert(static_cast<int>(e));
  return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Backend::kScalar, count_between_scalar, mark_subsets_scalar,
                                 gf_lincomb_scalar, nonzero_mask_scalar};
  return table;
}

}  // namespace matflat::simd
