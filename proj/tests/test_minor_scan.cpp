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
#include "matflat/minor_scan.hpp"
#include "oracles.hpp"
#include "small_cases.hpp"

using namespace matflat;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

}  // namespace

TEST_SUITE("minor_scan") {

TEST_CASE("interval scan equals the brute-force minor scan for n <= 9") {
  for (const auto& c : testcase::small_catalog(9, 21, 31)) {
    CAPTURE(c.name);
    const LineLengthReport rep = max_line_length(*c.matroid);
    CHECK(rep.max_line_length == oracle::brute_max_line(c.rank, c.n));
    if (rep.witness) CHECK(verify_witness(c.matroid, *rep.witness));
    if (c.matroid->full_rank() < 2) CHECK(!rep.witness);
  }
}

TEST_CASE("known longest lines") {
  CHECK(max_line_length(*build_pg(3, 2)).max_line_length == 3);
  CHECK(max_line_length(*build_ag(3, 3)).max_line_length == 4);
  CHECK(max_line_length(*build_pg(4, 3)).max_line_length == 4);
  CHECK(max_line_length(UniformMatroid(3, 6)).max_line_length == 5);
  CHECK(max_line_length(UniformMatroid(1, 6)).max_line_length == 0);
  for (int q : {3, 4, 5, 7, 8}) CHECK(max_line_length(*build_blokhuis(q)).max_line_length == 2 * q - 1);
}

TEST_CASE("witness is deterministic and minimal in order") {
  const auto m = build_blokhuis(5);
  const LineLengthReport a = max_line_length(*m, std::nullopt, {kDefaultFlatCap, 1});
  const LineLengthReport b = max_line_length(*m, std::nullopt, {kDefaultFlatCap, 3});
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(a.witness->lower == b.witness->lower);
  CHECK(a.witness->upper == b.witness->upper);
  CHECK(a.histogram == b.histogram);
  // lines of M(5) have at most 5 points, so the longest line needs a contraction
  CHECK(a.witness->lower_rank == 1);
  CHECK(a.witness->lower == ElementSet{0});
  CHECK(a.witness->length == 9);
  CHECK(verify_witness(m, *a.witness));
  LineWitness wrong = *a.witness;
  wrong.length = 8;
  CHECK(!verify_witness(m, wrong));
}

TEST_CASE("histogram counts every height-2 interval") {
  // Fano: 7 lines over the empty flat (3 points each) and 7 point contractions (3 lines each)
  const LineLengthReport rep = max_line_length(*build_pg(3, 2));
  REQUIRE(rep.histogram.size() == 4);
  CHECK(rep.histogram[3] == 14);
  CHECK(rep.histogram[2] == 0);
}

TEST_CASE("early exit stops at the threshold") {
  const auto m = build_blokhuis(7);
  const LineLengthReport rep = max_line_length(*m, 8);
  CHECK(rep.early_exit);
  CHECK(rep.max_line_length >= 8);
  REQUIRE(rep.witness);
  CHECK(verify_witness(m, *rep.witness));
  CHECK(rep.histogram.empty());
  const LineLengthReport none = max_line_length(*m, 20);
  CHECK(!none.early_exit);
  CHECK(none.max_line_length == 13);
}

TEST_CASE("class membership") {
  for (int q : {3, 4, 5}) {
    const auto m = build_blokhuis(q);
    CHECK(in_U(*m, 2 * q - 2));
    CHECK(!in_U(*m, 2 * q - 3));
    CHECK(in_U(*build_pg(3, q), q));
    CHECK(!in_U(*build_pg(3, q), q - 1));
  }
  CHECK_THROWS_AS(in_U(*build_pg(3, 2), 1), Error);
}

TEST_CASE("Kung's bound") {
  for (int q : {2, 3, 4}) {
    for (int r = 2; r <= 4; ++r) {
      const ClaimReport c = check_kung(*build_pg(r, q), q);
      CHECK(c.passed());
      CHECK(c.values["tight"] == true);
    }
  }
  for (int q : {3, 4, 5}) {
    const ClaimReport c = check_kung(*build_blokhuis(q), 2 * q - 1);
    CHECK(c.passed());
    CHECK(c.values["tight"] == false);
  }
  CHECK(kind_of([] { check_kung(*build_blokhuis(4), 2); }) == ErrorKind::kNotInClass);
}

TEST_CASE("Whitney-number bound in U(ell)") {
  // M(3) at ell = 4 (q = 4): 18 <= 21
  CHECK(check_whitney_bound(*build_blokhuis(3), 4, 2).passed());
  // M(4) at ell = 6 (q = 5): 40 > 31
  const ClaimReport bad = check_whitney_bound(*build_blokhuis(4), 6, 2);
  CHECK(bad.failed());
  CHECK(bad.values["W_k"] == "40");
  CHECK(bad.values["qbinom"] == "31");
  // M(5) at ell = 8 (q = 8): 75 > 73
  CHECK(check_whitney_bound(*build_blokhuis(5), 8, 2).failed());
  CHECK(check_whitney_bound(*build_blokhuis(4), 7, 2).passed());
  for (int k = 0; k <= 4; ++k) CHECK(check_whitney_bound(*build_pg(4, 2), 2, k).passed());
  CHECK(kind_of([] { check_whitney_bound(*build_blokhuis(4), 5, 2); }) == ErrorKind::kNotInClass);
}

TEST_CASE("the counterexample chain for large q") {
  const ClaimReport c = corollary_check(127);
  CHECK(c.passed());
  CHECK(c.values["q_prime"] == 64);
  CHECK(c.values["W2_formula"] == "133120");
  CHECK(c.values["qbinom_3_2"] == "16257");
  CHECK(corollary_check(128).passed());
  CHECK(corollary_check(131).passed());
  CHECK(corollary_check(131).values["q_prime"] == 64);
  CHECK(corollary_check(256).values["q_prime"] == 128);
  CHECK(corollary_check(257).passed());
  CHECK(kind_of([] { corollary_check(125); }) == ErrorKind::kOutOfRange);
  CHECK(kind_of([] { corollary_check(126); }) == ErrorKind::kNotPrimePower);
}

TEST_CASE("witness JSON") {
  const auto rep = max_line_length(*build_pg(3, 2));
  const auto j = witness_to_json(*rep.witness);
  CHECK(j["length"] == 3);
  CHECK(j["lower"].is_array());
  CHECK(j["upper"].size() == 3);
}

}  // TEST_SUITE
