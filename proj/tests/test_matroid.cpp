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
#include "matflat/geometry.hpp"
#include "matflat/matroid.hpp"
#include "oracles.hpp"
#include "small_cases.hpp"

using namespace matflat;
using testcase::to_mask;
using testcase::to_set;

TEST_SUITE("matroid") {

TEST_CASE("rank and closure agree with the oracles on every subset") {
  for (const auto& c : testcase::small_catalog(10, 21)) {
    CAPTURE(c.name);
    REQUIRE(c.matroid->size() == c.n);
    int rank_bad = 0, closure_bad = 0;
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << c.n); ++s) {
      const ElementSet set = to_set(s);
      if (c.matroid->rank(set) != c.rank(s)) ++rank_bad;
      if (to_mask(c.matroid->closure(set)) != oracle::closure(c.rank, c.n, s)) ++closure_bad;
    }
    CHECK(rank_bad == 0);
    CHECK(closure_bad == 0);
    CHECK(c.matroid->full_rank() == c.rank((oracle::Mask{1} << c.n) - 1));
  }
}

TEST_CASE("rank axioms hold exhaustively for n <= 10") {
  for (const auto& c : testcase::small_catalog(10, 14, 99)) {
    CAPTURE(c.name);
    const auto& m = *c.matroid;
    CHECK(oracle::rank_axiom_violations([&](oracle::Mask s) { return m.rank(to_set(s)); }, c.n) == 0);
  }
}

TEST_CASE("nested minors fold into one view") {
  const auto pg = build_pg(3, 3);
  const auto once = contract(delete_elements(pg, {5, 7}), {0});
  const auto* view = dynamic_cast<const MinorView*>(once.get());
  REQUIRE(view != nullptr);
  CHECK(view->base().get() == pg.get());
  CHECK(view->contracted() == ElementSet{0});
  CHECK(view->deleted() == ElementSet({5, 7}));
  CHECK(once->size() == 10);
  CHECK(once->full_rank() == 2);
  // element 4 of the view is base element 6: skips 0 (contracted) and 5
  CHECK(origin_element(*once, *pg, 4) == 6);
  CHECK(origin_element(*pg, *once, 0) == -1);
}

TEST_CASE("contraction by a materialized matrix matches the lazy view") {
  std::mt19937_64 rng(3);
  for (int q : {2, 3, 4, 5}) {
    const testcase::SmallCase c = testcase::random_linear(rng, q, 4, 10);
    const auto& lin = dynamic_cast<const LinearMatroid&>(*c.matroid);
    for (const ElementSet& cset : {ElementSet{0}, ElementSet{1, 2}, ElementSet{0, 3, 9}}) {
      const auto lazy = contract(c.matroid, cset);
      const auto direct = materialize_contraction(lin, cset);
      REQUIRE(lazy->size() == direct->size());
      for (oracle::Mask s = 0; s < (oracle::Mask{1} << lazy->size()); ++s)
        REQUIRE(lazy->rank(to_set(s)) == direct->rank(to_set(s)));
    }
  }
}

TEST_CASE("simplification keeps one element per parallel class") {
  auto f = shared_field(3);
  // columns: loop, e1, 2*e1, e2, e1+e2, loop, e2
  const std::vector<std::vector<FieldElement>> cols = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 0}, {0, 1}};
  auto m = std::make_shared<LinearMatroid>(f, 2, cols);
  const Simplification s = simplify(m);
  CHECK(s.loops == ElementSet({0, 5}));
  REQUIRE(s.classes.size() == 3);
  CHECK(s.classes[0] == ElementSet({1, 2}));
  CHECK(s.classes[1] == ElementSet({3, 6}));
  CHECK(s.classes[2] == ElementSet({4}));
  CHECK(s.matroid->size() == 3);
  CHECK(s.matroid->kind() == MatroidKind::kSimplificationView);
  CHECK(is_simple(*s.matroid));
  CHECK(!is_simple(*m));
}

TEST_CASE("point-line validation") {
  CHECK_NOTHROW(Rank3PointLine(7, {{0, 1, 2}, {0, 3, 4}}));
  CHECK_THROWS_AS(Rank3PointLine(7, {{0, 1}}), Error);
  CHECK_THROWS_AS(Rank3PointLine(7, {{0, 1, 2}, {0, 1, 3}}), Error);
  CHECK_THROWS_AS(Rank3PointLine(7, {{0, 1, 9}}), Error);
  CHECK_THROWS_AS(Rank3PointLine(7, {{0, 1, 1}}), Error);
  const Rank3PointLine fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  CHECK(fano.line_through(1, 6) == 4);
  CHECK(fano.line_through(6, 1) == 4);
  CHECK(fano.closure({3, 6}) == ElementSet({2, 3, 6}));
  CHECK(fano.closure({1, 3, 4}) == ElementSet::prefix(7));
}

TEST_CASE("uniform matroids") {
  const UniformMatroid u(2, 5);
  CHECK(u.rank({0, 1, 2}) == 2);
  CHECK(u.closure({3}) == ElementSet{3});
  CHECK(u.closure({3, 4}) == ElementSet::prefix(5));
  CHECK_THROWS_AS(UniformMatroid(4, 3), Error);
}

TEST_CASE("linear matroid input checks") {
  auto f = shared_field(4);
  CHECK_THROWS_AS(LinearMatroid(f, 2, {{0, 4}}), Error);
  CHECK_THROWS_AS(LinearMatroid(f, 2, {{0, 1, 1}}), Error);
  CHECK_THROWS_AS(LinearMatroid(f, 1, std::vector<std::vector<FieldElement>>(257, {1})), Error);
}

TEST_CASE("minor construction rejects bad sets") {
  const auto pg = build_pg(3, 2);
  CHECK_THROWS_AS(MinorView(pg, {1}, {1}), Error);
  CHECK_THROWS_AS(MinorView(pg, {9}, {}), Error);
}

TEST_CASE("representability of small rank-3 configurations") {
  const auto fano = build_pg(3, 2);
  CHECK(is_gfq_representable_rank_le3(*fano, 2));
  CHECK(!is_gfq_representable_rank_le3(*fano, 3));
  CHECK(is_gfq_representable_rank_le3(*fano, 4));
  const auto ag23 = build_ag(3, 3);
  CHECK(is_gfq_representable_rank_le3(*ag23, 3));
  CHECK(is_gfq_representable_rank_le3(*ag23, 4));
  CHECK(!is_gfq_representable_rank_le3(*ag23, 5));
  CHECK(is_gfq_representable_rank_le3(*ag23, 7));
  // six points with no three collinear: a hyperoval of PG(2,4), too many for PG(2,3)
  const UniformMatroid u36(3, 6);
  CHECK(is_gfq_representable_rank_le3(u36, 4));
  CHECK(!is_gfq_representable_rank_le3(u36, 3));
  const UniformMatroid u25(2, 5);
  CHECK(!is_gfq_representable_rank_le3(u25, 3));
  CHECK(is_gfq_representable_rank_le3(u25, 4));
  CHECK(is_gfq_representable_rank_le3(*build_pg(3, 4), 4));
  CHECK(!is_gfq_representable_rank_le3(*build_pg(3, 4), 3));
  CHECK_THROWS_AS(is_gfq_representable_rank_le3(*build_pg(4, 2), 2), Error);
  auto f = shared_field(2);
  const LinearMatroid parallel(f, 2, {{1, 0}, {1, 0}});
  CHECK_THROWS_AS(is_gfq_representable_rank_le3(parallel, 2), Error);
}

TEST_CASE("M(q) is not representable over GF(q)") {
  // it has lines of 2q-1 points in a contraction, too long for PG(2,q)
  CHECK(!is_gfq_representable_rank_le3(*build_blokhuis(3), 3));
  CHECK(is_gfq_representable_rank_le3(*build_ag(3, 3), 3));
}

}  // TEST_SUITE
