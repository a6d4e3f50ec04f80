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
#include "matflat/qbinom.hpp"
#include "oracles.hpp"

using namespace matflat;

namespace {

BigInt from128(unsigned __int128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

}  // namespace

TEST_SUITE("qbinom") {

TEST_CASE("known values") {
  CHECK(qbinom(2, 3, 2) == 7);
  CHECK(qbinom(2, 4, 2) == 35);
  CHECK(qbinom(2, 5, 2) == 155);
  CHECK(qbinom(3, 4, 2) == 130);
  CHECK(qbinom(3, 5, 2) == 1210);
  CHECK(qbinom(127, 3, 2) == 16257);
  CHECK(qbinom(5, 3, 7) == 0);
  CHECK(qbinom(5, 3, -1) == 0);
  CHECK(qbinom(5, 0, 0) == 1);
}

TEST_CASE("both routes agree with the recursion oracle") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int r = 0; r <= 12; ++r) {
      for (int k = -1; k <= r + 1; ++k) {
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(k);
        const BigInt want = from128(oracle::gauss(q, r, k));
        REQUIRE(qbinom_product(q, r, k).value == want);
        REQUIRE(qbinom_recursive(q, r, k).value == want);
      }
    }
  }
}

TEST_CASE("routes agree far past 128 bits") {
  for (int q : {2, 13, 64, 127}) {
    for (int r : {20, 33, 40}) {
      for (int k : {1, r / 3, r / 2, r - 1}) CHECK(qbinom_product(q, r, k).value == qbinom_recursive(q, r, k).value);
    }
  }
}

TEST_CASE("symmetry and Pascal-type identities") {
  for (int q : {2, 3, 4, 7}) {
    for (int r = 1; r <= 15; ++r) {
      for (int k = 1; k < r; ++k) {
        CHECK(qbinom(q, r, k) == qbinom(q, r, r - k));
        CHECK(qbinom(q, r, k) == qbinom(q, r - 1, k - 1) + big_pow(q, k) * qbinom(q, r - 1, k));
      }
    }
  }
}

TEST_CASE("the three properties hold on the grid") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int r = 2; r <= 12; ++r) {
      for (int k = 1; k < r; ++k) {
        const Report rep = check_qb_properties(q, r, k);
        REQUIRE(rep.size() == 3);
        CHECK(rep[0].claim_id == "qb1");
        CHECK(rep[1].claim_id == "qb2");
        CHECK(rep[2].claim_id == "qb3");
        CHECK(all_passed(rep));
      }
    }
  }
}

TEST_CASE("property checks reject k outside 0 < k < r") {
  CHECK_THROWS_AS(check_qb_properties(2, 3, 0), Error);
  CHECK_THROWS_AS(check_qb_properties(2, 3, 3), Error);
}

TEST_CASE("big_pow") {
  CHECK(big_pow(2, 0) == 1);
  CHECK(big_pow(3, 5) == 243);
  CHECK(big_pow(2, 130) == (BigInt(1) << 130));
}

}  // TEST_SUITE
