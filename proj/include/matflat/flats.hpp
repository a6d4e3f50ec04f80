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

#include <cstddef>
#include <optional>
#include <vector>

#include "matflat/matroid.hpp"
#include "matflat/qbinom.hpp"
#include "matflat/report.hpp"

namespace matflat {

inline constexpr std::size_t kDefaultFlatCap = 10'000'000;

struct EnumOptions {
  /// Largest level size before enumeration gives up with kResourceLimit.
  std::size_t cap = kDefaultFlatCap;
  unsigned threads = 1;
};

struct Flat {
  ElementSet members;
  int rank = 0;
};

/// levels[k] holds every rank-k flat in canonical ElementSet order.
struct FlatLevels {
  std::vector<std::vector<ElementSet>> levels;

  int top_rank() const { return static_cast<int>(levels.size()) - 1; }
  std::size_t count(int k) const { return levels.at(k).size(); }
};

/// Level 0 is the closure of the empty set; level k+1 is every closure of a
/// level-k flat plus one outside element. Output does not depend on thread
/// count.
FlatLevels enumerate_flats(const Matroid& m, int up_to_rank, const EnumOptions& opts = {});

/// The flats covering `f`: cl(f + e) for e outside f, each listed once, in
/// canonical order.
std::vector<ElementSet> covers_of(const Matroid& m, const ElementSet& f);

/// W_k, the number of rank-k flats.
std::size_t whitney(const Matroid& m, int k, const EnumOptions& opts = {});

/// Rank-k flats containing e. Throws Error(kLoopElement) if e is a loop.
std::vector<Flat> flats_through(const Matroid& m, int k, int e, const EnumOptions& opts = {});

/// W_k^e = W_k - |flats through e|.
std::size_t whitney_avoiding(const Matroid& m, int k, int e, const EnumOptions& opts = {});

/// Upper bound on W_k known before enumerating: every rank-k flat is spanned
/// by k of the non-loop elements.
BigInt predicted_level_bound(const Matroid& m, int k);

/// sp1: W_k <= W_1^k
/// sp2: W_k < ell^{k r}   (skipped without ell)
/// sp3: |F_k(M;e)| = W_{k-1}(M/e)
/// sp4: W_k = W_{k-1}(M/e) + sum over rank-(k+1) flats F through e of W_k^e(M|F)
/// Requires a loopless matroid, a valid e and 1 <= k < r(M).
Report check_sp_identities(const MatroidPtr& m, int k, int e, std::optional<int> ell = std::nullopt,
                           const EnumOptions& opts = {});

}  // namespace matflat
