// Copyright 2026 The qhash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhash/gf.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace qhash;

namespace {

// independent primality oracle: plain trial division by every smaller integer
bool oracle_is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fp_mul reduces products mod q") {
  CHECK(fp_mul({3, 5}, {4, 5}).value() == 2);  // 12 mod 5
  CHECK(fp_mul({0, 7}, {6, 7}).value() == 0);  // zero annihilates
  CHECK(fp_mul({6, 7}, {6, 7}).value() == 1);  // 36 mod 7
}

TEST_CASE("fp_mul rejects modulus mismatch") {
  CHECK_THROWS_AS(fp_mul({1, 5}, {1, 7}), std::invalid_argument);
}

TEST_CASE("fp_add and fp_sub wrap around") {
  CHECK(fp_add({4, 5}, {3, 5}).value() == 2);
  CHECK(fp_sub({1, 5}, {3, 5}).value() == 3);
  CHECK_THROWS_AS(fp_add({1, 5}, {1, 7}), std::invalid_argument);
}

TEST_CASE("values are reduced into [0, q) at construction") {
  CHECK(FieldElement(-1, 5).value() == 4);
  CHECK(FieldElement(12, 5).value() == 2);
  CHECK(Word(5, {-1, 7}) == Word(5, {4, 2}));
}

TEST_CASE("composite moduli are rejected with a diagnostic") {
  CHECK_THROWS_WITH_AS(FieldElement(1, 4),
                       doctest::Contains("prime fields only"),
                       std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(0, std::int64_t{1} << 31), std::invalid_argument);
  CHECK_NOTHROW(FieldElement(0, 2147483647));  // 2^31 - 1 is prime
}

TEST_CASE("fp_inv") {
  CHECK(fp_inv({2, 7}).value() == 4);  // 2*4 = 8 = 1 mod 7
  CHECK(fp_inv({1, 13}).value() == 1);
  CHECK(fp_inv({4, 5}).value() == 4);  // 16 = 1 mod 5
  CHECK_THROWS_AS(fp_inv({0, 5}), std::invalid_argument);
}

TEST_CASE("fp_mul by fp_inv gives 1 for every nonzero element, q <= 101") {
  for (std::int64_t q : primes_up_to(101)) {
    for (std::int64_t a = 1; a < q; ++a) {
      CHECK(fp_mul({a, q}, fp_inv({a, q})).value() == 1);
    }
  }
}

TEST_CASE("fp_pow") {
  CHECK(fp_pow({3, 5}, 4).value() == 1);    // 81 mod 5
  CHECK(fp_pow({9, 11}, 0).value() == 1);   // a^0 = 1
  CHECK(fp_pow({0, 11}, 0).value() == 1);   // 0^0 = 1 by convention
  CHECK(fp_pow({0, 11}, 3).value() == 0);
  CHECK(fp_pow({2, 11}, 10).value() == 1);  // Fermat
}

TEST_CASE("fp_pow Fermat exponent, exhaustive for q <= 101") {
  for (std::int64_t q : primes_up_to(101)) {
    for (std::int64_t a = 1; a < q; ++a) {
      CHECK(fp_pow({a, q}, static_cast<std::uint64_t>(q - 1)).value() == 1);
    }
  }
}

TEST_CASE("primes_up_to matches the trial-division oracle") {
  auto primes = primes_up_to(10);
  CHECK(primes == std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<std::int64_t>{2});
  CHECK(primes_up_to(17).size() == 7);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(-3).empty());

  auto all = primes_up_to(500);
  std::size_t idx = 0;
  for (std::int64_t n = 2; n <= 500; ++n) {
    if (oracle_is_prime(n)) {
      REQUIRE(idx < all.size());
      CHECK(all[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == all.size());
}

TEST_CASE("prime counting bounds M/ln M <= pi(M) <= 1.26 M/ln M on [17, 2000]") {
  auto primes = primes_up_to(2000);
  std::size_t count = 0;
  std::int64_t next_check = 17;
  for (std::int64_t M = 2; M <= 2000; ++M) {
    while (count < primes.size() && primes[count] <= M) ++count;
    if (M < next_check) continue;
    const double lower = static_cast<double>(M) / std::log(static_cast<double>(M));
    CAPTURE(M);
    CHECK(static_cast<double>(count) >= lower);
    CHECK(static_cast<double>(count) <= 1.26 * lower);
    next_check = M + 1;
  }
}

TEST_CASE("next_prime") {
  CHECK(next_prime(50) == 53);
  CHECK(next_prime(53) == 53);
  CHECK(next_prime(-7) == 2);
  CHECK(next_prime(90) == 97);
}

TEST_CASE("words share one modulus and have length >= 1") {
  Word w(5, {1, 4, 0});
  CHECK(w.size() == 3);
  CHECK(w.value(1) == 4);
  CHECK(w.at(1) == FieldElement(4, 5));
  CHECK_THROWS_AS(Word(5, {}), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<FieldElement>{{1, 5}, {1, 7}}), std::invalid_argument);
  CHECK(Word(std::vector<FieldElement>{{2, 3}, {1, 3}}) == Word(3, {2, 1}));
}

TEST_CASE("word index round trip is little-endian base q") {
  // index 7 = 1 + 2*3 over q=3: digits (1, 2)
  CHECK(Word::from_index(3, 2, 7) == Word(3, {1, 2}));
  CHECK(Word(3, {1, 2}).to_index() == 7);
  for (std::uint64_t v = 0; v < 125; ++v) {
    CHECK(Word::from_index(5, 3, v).to_index() == v);
  }
  CHECK_THROWS_AS(Word::from_index(3, 2, 9), std::invalid_argument);
}

TEST_CASE("word rendering") {
  CHECK(Word(5, {2, 1}).to_string() == "2,1");
  CHECK(Word(2, {1}).to_string() == "1");
}
