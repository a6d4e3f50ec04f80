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

#include "matflat/error.hpp"
#include "matflat/flats.hpp"
#include "matflat/geometry.hpp"
#include "oracles.hpp"
#include "small_cases.hpp"

using namespace matflat;

TEST_SUITE("geometry") {

TEST_CASE("projective points are the normalized vectors in lexicographic order") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int r = 1; r <= 4; ++r) {
      if ((q > 5 && r > 3)) continue;
      const auto got = projective_points(*shared_field(q), r);
      const auto want = oracle::pg_points(testcase::oracle_field(q), r);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(std::vector<int>(got[i].begin(), got[i].end()) == want[i]);
    }
  }
}

TEST_CASE("sizes and ranks of the standard geometries") {
  CHECK(build_pg(3, 2)->size() == 7);
  CHECK(build_pg(4, 5)->size() == 156);
  CHECK(build_pg(3, 9)->full_rank() == 3);
  CHECK(build_ag(3, 3)->size() == 9);
  CHECK(build_ag(4, 4)->size() == 64);
  CHECK(build_ag(4, 4)->full_rank() == 4);
  CHECK(whitney(*build_ag(3, 3), 2) == 12);
  CHECK(whitney(*build_ag(4, 2), 2) == 28);
}

TEST_CASE("M(q) counts from the incidence structure") {
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 32, 64}) {
    CAPTURE(q);
    const std::uint64_t uq = static_cast<std::uint64_t>(q);
    const PointLineStats st = point_line_stats(q * q, blokhuis_long_lines(q));
    CHECK(st.points == uq * uq);
    CHECK(st.long_lines == uq * uq);
    CHECK(st.lines == uq * uq * (uq + 1) / 2);
    CHECK(st.min_lines_per_point == 2 * uq - 1);
    CHECK(st.max_lines_per_point == 2 * uq - 1);
    CHECK(st.max_points_per_line == uq);
    CHECK(st.max_line_length == 2 * uq - 1);
  }
}

TEST_CASE("M(q) as a matroid") {
  const std::size_t expect[] = {18, 40, 75};
  for (int q : {3, 4, 5}) {
    const auto m = build_blokhuis(q);
    CHECK(m->size() == q * q);
    CHECK(m->full_rank() == 3);
    CHECK(is_simple(*m));
    CHECK(whitney(*m, 2) == expect[q - 3]);
    for (int e = 0; e < m->size(); ++e) CHECK(flats_through(*m, 2, e).size() == static_cast<std::size_t>(2 * q - 1));
  }
  // vertical pairs are two-point lines
  const auto m3 = build_blokhuis(3);
  CHECK(m3->rank({0, 1, 2}) == 3);
  CHECK(m3->rank({0, 3, 6}) == 2);
}

TEST_CASE("projective plane plus a free point") {
  for (int q : {2, 3, 4, 5}) {
    const auto m = build_pg_plus_free_point(q);
    const int n = q * q + q + 2;
    REQUIRE(m->size() == n);
    CHECK(m->full_rank() == 3);
    const auto me = contract(m, {n - 1});
    CHECK(whitney(*me, 1) == static_cast<std::size_t>(q * q + q + 1));
    // the plane part is still PG(2,q)
    CHECK(whitney(*restrict_to(m, ElementSet::prefix(n - 1)), 2) == static_cast<std::size_t>(q * q + q + 1));
  }
}

TEST_CASE("build_geometry dispatch and errors") {
  CHECK(build_geometry({GeometryFamily::kPG, 3, 3})->size() == 13);
  CHECK(build_geometry({GeometryFamily::kAG, 3, 4})->size() == 16);
  CHECK(build_geometry({GeometryFamily::kBlokhuis, 0, 4})->size() == 16);
  CHECK(build_geometry({GeometryFamily::kPGPlusFreePoint, 0, 3})->size() == 14);
  CHECK(describe({GeometryFamily::kPG, 4, 2}) == "PG(3,2)");
  CHECK(describe({GeometryFamily::kBlokhuis, 0, 5}) == "M(5)");
  auto kind_of = [](const GeometrySpec& s) {
    try {
      build_geometry(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInternal;
  };
  CHECK(kind_of({GeometryFamily::kPG, 3, 6}) == ErrorKind::kNotPrimePower);
  CHECK(kind_of({GeometryFamily::kPG, 5, 4}) == ErrorKind::kResourceLimit);
  CHECK(kind_of({GeometryFamily::kAG, 0, 3}) == ErrorKind::kInvalidArgument);
  CHECK(kind_of({GeometryFamily::kBlokhuis, 0, 2}) == ErrorKind::kUnsupported);
  CHECK(kind_of({GeometryFamily::kBlokhuis, 0, 17}) == ErrorKind::kResourceLimit);
  CHECK(kind_of({GeometryFamily::kPGPlusFreePoint, 0, 7}) == ErrorKind::kUnsupported);
}

}  // TEST_SUITE
