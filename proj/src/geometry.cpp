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

#include "matflat/geometry.hpp"

#include <algorithm>

#include "matflat/error.hpp"

namespace matflat {
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

void check_rank_arg(int r) {
  if (r < 1) throw Error(ErrorKind::kInvalidArgument, "geometry rank must be at least 1");
}

void check_size(std::uint64_t n, const std::string& what) {
  if (n > static_cast<std::uint64_t>(kMaxElements))
    throw Error(ErrorKind::kResourceLimit, what + " has " + std::to_string(n) +
                                               " points, more than the supported " +
                                               std::to_string(kMaxElements));
}

}  // namespace

std::vector<std::vector<FieldElement>> projective_points(const FieldTable& f, int r) {
  std::vector<std::vector<FieldElement>> out;
  const int q = f.q();
  // Lead coordinate at position `lead`, zeros before, anything after.
  // Iterating lead from the back gives lexicographic order overall.
  for (int lead = r - 1; lead >= 0; --lead) {
    const int tail = r - 1 - lead;
    const std::uint64_t count = ipow(q, tail);
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<FieldElement> v(r, 0);
      v[lead] = 1;
      std::uint64_t x = t;
      for (int i = r - 1; i > lead; --i, x /= q) v[i] = static_cast<FieldElement>(x % q);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::shared_ptr<const LinearMatroid> build_pg(int r, int q) {
  check_rank_arg(r);
  auto field = shared_field(q);
  check_size((ipow(q, r) - 1) / (q - 1), "PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ")");
  return std::make_shared<LinearMatroid>(field, r, projective_points(*field, r));
}

std::shared_ptr<const LinearMatroid> build_ag(int r, int q) {
  check_rank_arg(r);
  auto field = shared_field(q);
  const std::uint64_t n = ipow(q, r - 1);
  check_size(n, "AG(" + std::to_string(r - 1) + "," + std::to_string(q) + ")");
  std::vector<std::vector<FieldElement>> cols;
  for (std::uint64_t t = 0; t < n; ++t) {
    std::vector<FieldElement> v(r, 0);
    std::uint64_t x = t;
    for (int i = r - 2; i >= 0; --i, x /= q) v[i] = static_cast<FieldElement>(x % q);
    v[r - 1] = 1;
    cols.push_back(std::move(v));
  }
  return std::make_shared<LinearMatroid>(field, r, std::move(cols));
}

std::vector<std::vector<int>> blokhuis_long_lines(int q) {
  const FieldTable& f = *shared_field(q);
  if (q < 3)
    throw Error(ErrorKind::kUnsupported, "M(q) needs q >= 3; AG(2,2) has no 3-point lines");
  // Lines y = m x + b for every slope m; the vertical class x = c is the one
  // demoted to two-point lines.
  std::vector<std::vector<int>> lines;
  lines.reserve(static_cast<std::size_t>(q) * q);
  for (int m = 0; m < q; ++m)
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      line.reserve(q);
      for (int x = 0; x < q; ++x) {
        const int y = f.add(f.mul(static_cast<FieldElement>(m), static_cast<FieldElement>(x)),
                            static_cast<FieldElement>(b));
        line.push_back(x * q + y);
      }
      std::sort(line.begin(), line.end());
      lines.push_back(std::move(line));
    }
  return lines;
}

std::shared_ptr<const Rank3PointLine> build_blokhuis(int q) {
  shared_field(q);
  if (q < 3) throw Error(ErrorKind::kUnsupported, "M(q) needs q >= 3; AG(2,2) has no 3-point lines");
  check_size(static_cast<std::uint64_t>(q) * q, "M(" + std::to_string(q) + ")");
  return std::make_shared<Rank3PointLine>(q * q, blokhuis_long_lines(q));
}

std::shared_ptr<const Rank3PointLine> build_pg_plus_free_point(int q) {
  if (q < 2 || q > 5 || !is_prime_power(static_cast<std::uint64_t>(q)))
    throw Error(ErrorKind::kUnsupported, "free extension of PG(2,q) is supported for q in {2,3,4,5}");
  const FieldTable& f = *shared_field(q);
  const auto pts = projective_points(f, 3);
  const int n = static_cast<int>(pts.size());
  // Lines of PG(2,q) are the zero sets of the dual points.
  std::vector<std::vector<int>> lines;
  for (const auto& a : pts) {
    std::vector<int> line;
    for (int i = 0; i < n; ++i) {
      FieldElement dot = 0;
      for (int j = 0; j < 3; ++j) dot = f.add(dot, f.mul(a[j], pts[i][j]));
      if (dot == 0) line.push_back(i);
    }
    lines.push_back(std::move(line));
  }
  return std::make_shared<Rank3PointLine>(n + 1, std::move(lines));
}

MatroidPtr build_geometry(const GeometrySpec& spec) {
  switch (spec.family) {
    case GeometryFamily::kPG:
      return build_pg(spec.r, spec.q);
    case GeometryFamily::kAG:
      return build_ag(spec.r, spec.q);
    case GeometryFamily::kBlokhuis:
      return build_blokhuis(spec.q);
    case GeometryFamily::kPGPlusFreePoint:
      return build_pg_plus_free_point(spec.q);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown geometry family");
}

std::string describe(const GeometrySpec& spec) {
  const std::string q = std::to_string(spec.q);
  switch (spec.family) {
    case GeometryFamily::kPG:
      return "PG(" + std::to_string(spec.r - 1) + "," + q + ")";
    case GeometryFamily::kAG:
      return "AG(" + std::to_string(spec.r - 1) + "," + q + ")";
    case GeometryFamily::kBlokhuis:
      return "M(" + q + ")";
    case GeometryFamily::kPGPlusFreePoint:
      return "PG(2," + q + ")+e";
  }
  return "?";
}

PointLineStats point_line_stats(int n, const std::vector<std::vector<int>>& long_lines) {
  PointLineStats s;
  s.points = static_cast<std::uint64_t>(n);
  s.long_lines = long_lines.size();
  // covered[p] = number of other points sharing a long line with p.
  std::vector<std::uint64_t> covered(n, 0), long_through(n, 0);
  std::uint64_t covered_pairs = 0;
  for (const auto& line : long_lines) {
    const std::uint64_t len = line.size();
    s.max_points_per_line = std::max(s.max_points_per_line, len);
    covered_pairs += len * (len - 1) / 2;
    for (int p : line) {
      covered[p] += len - 1;
      ++long_through[p];
    }
  }
  const std::uint64_t pairs = s.points * (s.points - (s.points > 0)) / 2;
  s.lines = s.long_lines + (pairs - covered_pairs);
  if (n >= 2) s.max_points_per_line = std::max<std::uint64_t>(s.max_points_per_line, 2);
  s.min_lines_per_point = n > 0 ? ~std::uint64_t{0} : 0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t through = long_through[p] + (s.points - 1 - covered[p]);
    s.min_lines_per_point = std::min(s.min_lines_per_point, through);
    s.max_lines_per_point = std::max(s.max_lines_per_point, through);
  }
  s.max_line_length = std::max(s.max_points_per_line, s.max_lines_per_point);
  return s;
}

}  // namespace matflat
