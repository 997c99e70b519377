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

#include "qhash/qstate.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "qhash/rng.hpp"

using namespace qhash;
using cd = std::complex<double>;

namespace {

QuantumState random_state(int qubits, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<cd> amps(std::size_t{1} << qubits);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    a = {rng.next_double() - 0.5, rng.next_double() - 0.5};
    norm_sq += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm_sq);
  return QuantumState(std::move(amps));
}

}  // namespace

TEST_CASE("states are validated at construction") {
  CHECK_THROWS_AS(QuantumState({cd(1), cd(0), cd(0)}), std::invalid_argument);  // not 2^s
  CHECK_THROWS_AS(QuantumState({cd(0.5), cd(0.5)}), std::invalid_argument);     // norm 0.707
  CHECK(QuantumState::basis(3, 5).qubits() == 3);
  CHECK(QuantumState::scalar_one().qubits() == 0);
  CHECK_THROWS_AS(QuantumState::basis(2, 4), std::invalid_argument);
}

TEST_CASE("inner product basics") {
  auto psi = random_state(4, 11);
  CHECK(inner_product(psi, psi).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner_product(QuantumState::basis(3, 0), QuantumState::basis(3, 7))) == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  QuantumState plus({cd(r), cd(r)});
  CHECK(inner_product(plus, QuantumState::basis(1, 0)).real() == doctest::Approx(r));

  CHECK_THROWS_AS(inner_product(QuantumState::basis(1, 0), QuantumState::basis(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("inner product is conjugate-symmetric and Cauchy-Schwarz bounded") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = random_state(5, 2 * seed);
    auto b = random_state(5, 2 * seed + 1);
    auto ab = inner_product(a, b);
    auto ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    CHECK(std::abs(ab) <= 1.0 + 1e-9);
  }
}

TEST_CASE("tensor product") {
  auto zero = QuantumState::basis(1, 0);
  auto one = QuantumState::basis(1, 1);
  auto zo = tensor(zero, one);
  CHECK(zo.qubits() == 2);
  CHECK(zo.amplitude(1).real() == 1.0);  // |01>

  // scalar-1 state is the tensor identity
  auto psi = random_state(3, 5);
  auto left = tensor(QuantumState::scalar_one(), psi);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    CHECK(left.amplitude(i) == psi.amplitude(i));
  }

  // <a (x) b | a' (x) b'> = <a|a'> <b|b'>
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = random_state(2, 4 * seed);
    auto a2 = random_state(2, 4 * seed + 1);
    auto b = random_state(3, 4 * seed + 2);
    auto b2 = random_state(3, 4 * seed + 3);
    auto joint = inner_product(tensor(a, b), tensor(a2, b2));
    auto split = inner_product(a, a2) * inner_product(b, b2);
    CHECK(std::abs(joint - split) < 1e-12);
  }
}

TEST_CASE("swap test acceptance probability") {
  auto psi = random_state(4, 3);
  CHECK(swap_test_accept_prob(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(swap_test_accept_prob(QuantumState::basis(2, 1), QuantumState::basis(2, 2)) == 0.5);

  // overlap 0.6 -> acceptance 0.68
  QuantumState a({cd(1), cd(0)});
  QuantumState b({cd(0.6), cd(0.8)});
  CHECK(swap_test_accept_prob(a, b) == doctest::Approx(0.68).epsilon(1e-12));
}

TEST_CASE("swap test sampling is deterministic and concentrates") {
  auto a = QuantumState::basis(2, 0);
  auto same = QuantumState::basis(2, 0);
  auto orth = QuantumState::basis(2, 3);
  QuantumState tilted({cd(0.6), cd(0.8), cd(0), cd(0)});

  CHECK(swap_test_sample(a, same, 1000, 9) == 1.0);  // p = 1 accepts every shot

  const std::uint64_t shots = 100000;
  CHECK(std::abs(swap_test_sample(a, orth, shots, 1) - 0.5) <= 0.01);
  // |<a|tilted>| = 0.6 -> p = 0.68
  CHECK(std::abs(swap_test_sample(a, tilted, shots, 2) - 0.68) <= 0.01);

  CHECK(swap_test_sample(a, orth, shots, 123) == swap_test_sample(a, orth, shots, 123));
  CHECK_THROWS_AS(swap_test_sample(a, orth, 0, 1), std::invalid_argument);
}

TEST_CASE("nonzero-entry rendering skips padding") {
  QuantumState s({cd(0.6), cd(0), cd(0.8), cd(0)});
  auto text = format_nonzero(s);
  CHECK(text == "0: 0.6\n2: 0.8\n");
}
