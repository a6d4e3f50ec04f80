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

#include <numeric>

#include "matflat/error.hpp"
#include "matflat/flats.hpp"
#include "matflat/geometry.hpp"
#include "matflat/qbinom.hpp"
#include "oracles.hpp"
#include "small_cases.hpp"

using namespace matflat;
using testcase::to_mask;

TEST_SUITE("flats") {

TEST_CASE("enumeration equals closing every subset for n <= 12") {
  for (const auto& c : testcase::small_catalog(12, 28, 5)) {
    CAPTURE(c.name);
    const auto want = oracle::all_flats(c.rank, c.n);
    const FlatLevels got = enumerate_flats(*c.matroid, c.matroid->full_rank());
    REQUIRE(got.top_rank() == c.matroid->full_rank());
    std::size_t total = 0;
    for (int k = 0; k <= got.top_rank(); ++k) {
      std::set<oracle::Mask> level;
      for (const auto& f : got.levels[k]) level.insert(to_mask(f));
      CHECK(level.size() == got.count(k));
      auto it = want.find(k);
      CHECK(level == (it == want.end() ? std::set<oracle::Mask>{} : it->second));
      total += got.count(k);
    }
    std::size_t want_total = 0;
    for (const auto& [k, s] : want) want_total += s.size();
    CHECK(total == want_total);
  }
}

TEST_CASE("levels are in canonical order and independent of thread count") {
  const auto pg = build_pg(4, 3);
  const FlatLevels one = enumerate_flats(*pg, 4, {kDefaultFlatCap, 1});
  for (unsigned t : {2u, 3u, 8u}) CHECK(enumerate_flats(*pg, 4, {kDefaultFlatCap, t}).levels == one.levels);
  for (const auto& level : one.levels) CHECK(std::is_sorted(level.begin(), level.end()));
}

TEST_CASE("relabelling the ground set relabels the flats") {
  std::mt19937_64 rng(17);
  const testcase::SmallCase c = testcase::random_linear(rng, 3, 3, 11);
  const auto& lin = dynamic_cast<const LinearMatroid&>(*c.matroid);
  std::vector<int> perm(11);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<FieldElement>> cols(11);
  for (int e = 0; e < 11; ++e) cols[perm[e]] = lin.column(e);
  const LinearMatroid shuffled(lin.field_ptr(), lin.rows(), cols);
  const FlatLevels a = enumerate_flats(lin, lin.full_rank());
  const FlatLevels b = enumerate_flats(shuffled, lin.full_rank());
  for (int k = 0; k <= a.top_rank(); ++k) {
    std::vector<ElementSet> mapped;
    for (const auto& f : a.levels[k]) {
      ElementSet g;
      for (int e : f) g.insert(perm[e]);
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == b.levels[k]);
  }
}

TEST_CASE("projective geometries have q-binomial Whitney numbers") {
  for (int q : {2, 3, 4, 5}) {
    for (int r = 1; r <= (q <= 3 ? 5 : 4); ++r) {
      const auto pg = build_pg(r, q);
      const FlatLevels lv = enumerate_flats(*pg, r);
      for (int k = 0; k <= r; ++k) CHECK(lv.count(k) == static_cast<std::size_t>(oracle::gauss(q, r, k)));
    }
  }
  CHECK(whitney(*build_pg(4, 2), 2) == 35);
  CHECK(whitney(*build_pg(5, 2), 2) == 155);
}

TEST_CASE("covers partition the complement") {
  const auto m = build_blokhuis(4);
  const auto lines = enumerate_flats(*m, 1).levels[1];
  for (const ElementSet& f : {ElementSet{}, lines[0], lines[5]}) {
    const auto covers = covers_of(*m, f);
    ElementSet seen = f;
    for (const auto& g : covers) {
      CHECK(f.is_subset_of(g));
      CHECK(m->rank(g) == m->rank(f) + 1);
      CHECK(!(g - f).intersects(seen - f));
      seen |= g;
    }
    CHECK(seen == m->ground());
  }
  CHECK(covers_of(*build_pg(3, 3), {}).size() == 13);
}

TEST_CASE("flats through a point in the Fano plane") {
  const auto fano = build_pg(3, 2);
  for (int e = 0; e < 7; ++e) {
    CHECK(flats_through(*fano, 2, e).size() == 3);
    CHECK(whitney_avoiding(*fano, 2, e) == 4);
    CHECK(whitney_avoiding(*fano, 3, e) == 0);
    CHECK(flats_through(*fano, 1, e).size() == 1);
  }
  const UniformMatroid u26(2, 6);
  CHECK(flats_through(u26, 1, 0).size() == 1);
  CHECK(whitney_avoiding(u26, 1, 0) == 5);
}

TEST_CASE("loops and invalid arguments") {
  auto f = shared_field(2);
  const LinearMatroid m(f, 2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(enumerate_flats(m, 0).levels[0] == std::vector<ElementSet>{ElementSet{0}});
  try {
    flats_through(m, 1, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kLoopElement);
  }
  CHECK_THROWS_AS(whitney(m, 3), Error);
  CHECK_THROWS_AS(flats_through(m, 1, 7), Error);
}

TEST_CASE("the level cap raises a resource error") {
  const auto pg = build_pg(3, 3);
  try {
    enumerate_flats(*pg, 2, {10, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
  CHECK(enumerate_flats(*pg, 2, {13, 1}).count(2) == 13);
}

TEST_CASE("the a-priori bound dominates") {
  const auto pg = build_pg(4, 3);
  for (int k = 0; k <= 4; ++k) CHECK(predicted_level_bound(*pg, k) >= BigInt(whitney(*pg, k)));
}

TEST_CASE("the four identities on the Fano plane and M(3)") {
  const auto fano = build_pg(3, 2);
  const Report rep = check_sp_identities(fano, 2, 0);
  REQUIRE(rep.size() == 4);
  CHECK(rep[0].passed());
  CHECK(rep[1].status == ClaimStatus::kSkipped);
  CHECK(rep[2].passed());
  CHECK(rep[3].passed());
  CHECK(rep[3].values["W_k"] == 7);
  CHECK(rep[3].values["W_{k-1}(M/e)"] == 3);
  CHECK(rep[3].values["restriction_sum"] == 4);
  CHECK(check_sp_identities(fano, 1, 4, 2)[1].passed());

  const MatroidPtr m3 = build_blokhuis(3);
  for (int e = 0; e < 9; ++e)
    for (int k : {1, 2}) CHECK(all_passed(check_sp_identities(m3, k, e, 4)));
}

TEST_CASE("the identities need a loopless matroid and 1 <= k < r") {
  const auto fano = build_pg(3, 2);
  CHECK_THROWS_AS(check_sp_identities(fano, 0, 0), Error);
  CHECK_THROWS_AS(check_sp_identities(fano, 3, 0), Error);
  auto f = shared_field(2);
  auto loopy = std::make_shared<LinearMatroid>(f, 2, std::vector<std::vector<FieldElement>>{{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(check_sp_identities(loopy, 1, 1), Error);
}

}  // TEST_SUITE
