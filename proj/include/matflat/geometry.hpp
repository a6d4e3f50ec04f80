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
#include <string>
#include <vector>

#include "matflat/matroid.hpp"

namespace matflat {

enum class GeometryFamily { kPG, kAG, kBlokhuis, kPGPlusFreePoint };

struct GeometrySpec {
  GeometryFamily family = GeometryFamily::kPG;
  /// Rank; ignored for the two rank-3 families.
  int r = 3;
  int q = 2;
};

/// Normalized representatives (first nonzero coordinate 1) of the points of
/// PG(r-1,q), in lexicographic order of coordinates.
std::vector<std::vector<FieldElement>> projective_points(const FieldTable& f, int r);

/// PG(r-1,q) as a linear matroid on (q^r - 1)/(q - 1) points.
/// Throws Error(kResourceLimit) when that exceeds 256.
std::shared_ptr<const LinearMatroid> build_pg(int r, int q);

/// AG(r-1,q): columns (v, 1) for v in GF(q)^{r-1}, lexicographic in v.
std::shared_ptr<const LinearMatroid> build_ag(int r, int q);

/// Long lines of the affine plane over GF(q) on points (x, y) -> x*q + y,
/// minus the q lines x = const. Works for any supported q >= 3 and does not
/// need the bitset representation.
std::vector<std::vector<int>> blokhuis_long_lines(int q);

/// The rank-3 matroid M(q) built from blokhuis_long_lines. Requires q >= 3
/// and q^2 <= 256.
std::shared_ptr<const Rank3PointLine> build_blokhuis(int q);

/// PG(2,q) plus one element on no long line; the new element has label
/// q^2 + q + 1. Supports q in {2, 3, 4, 5}.
std::shared_ptr<const Rank3PointLine> build_pg_plus_free_point(int q);

MatroidPtr build_geometry(const GeometrySpec& spec);
std::string describe(const GeometrySpec& spec);

/// Counts for a simple rank-3 matroid given as a point-line incidence
/// structure, without building the oracle.
struct PointLineStats {
  std::uint64_t points = 0;
  std::uint64_t long_lines = 0;
  /// All lines, i.e. rank-2 flats: long lines plus uncovered pairs.
  std::uint64_t lines = 0;
  std::uint64_t min_lines_per_point = 0;
  std::uint64_t max_lines_per_point = 0;
  std::uint64_t max_points_per_line = 0;
  /// Longest line of any minor: the larger of the longest line and the most
  /// lines through one point.
  std::uint64_t max_line_length = 0;
};

PointLineStats point_line_stats(int n, const std::vector<std::vector<int>>& long_lines);

}  // namespace matflat
