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

#include "matflat/flats.hpp"
#include "matflat/matroid.hpp"
#include "matflat/report.hpp"

namespace matflat {

/// A height-2 interval [lower, upper] of the lattice of flats. Its middle
/// flats are the points of a line of M / lower, so `length` middle flats
/// exhibit a U_{2,length}-minor.
struct LineWitness {
  ElementSet lower;
  ElementSet upper;
  int lower_rank = 0;
  int length = 0;
};

struct LineLengthReport {
  /// Exact maximum over all height-2 intervals, or, when `early_exit` is set,
  /// the first length found that reached the threshold.
  int max_line_length = 0;
  bool early_exit = false;
  /// Present whenever some height-2 interval exists. Among maximal intervals
  /// this is the least in (rank of lower, lower, upper) order.
  std::optional<LineWitness> witness;
  /// histogram[len] = number of height-2 intervals with len middle flats.
  /// Empty after an early exit.
  std::vector<std::size_t> histogram;
};

LineLengthReport max_line_length(const Matroid& m, std::optional<int> early_exit_at = std::nullopt,
                                 const EnumOptions& opts = {});

/// Recounts the witness from scratch: contract the lower flat, restrict to
/// the upper one, simplify. True iff that gives a rank-2 matroid with
/// `length` points.
bool verify_witness(const MatroidPtr& m, const LineWitness& w);

/// M has no U_{2,ell+2}-minor. Requires ell >= 2.
bool in_U(const Matroid& m, int ell, const EnumOptions& opts = {});

/// W_1(M) <= (ell^r - 1)/(ell - 1). Throws Error(kNotInClass) unless in_U.
ClaimReport check_kung(const Matroid& m, int ell, const EnumOptions& opts = {});

/// W_k(M) <= [r k]_q with q the largest prime power <= ell. Throws
/// Error(kNotInClass) unless in_U.
ClaimReport check_whitney_bound(const Matroid& m, int ell, int k, const EnumOptions& opts = {});

/// The rank-3 counterexample chain for a prime power q > 125: pick the power
/// of two q' with (q+2)/4 < q' <= (q+2)/2 and check
///   W_2(M(q')) = q'^2 (q'+1)/2 > (q+2)^3/128 >= (q+2)^2 > q^2+q+1 = [3 2]_q
/// together with M(q') having no U_{2,q+2}-minor. Throws Error(kOutOfRange)
/// for q <= 125.
ClaimReport corollary_check(std::uint64_t q, const EnumOptions& opts = {});

/// JSON form of a witness with element lists.
nlohmann::ordered_json witness_to_json(const LineWitness& w);

}  // namespace matflat
