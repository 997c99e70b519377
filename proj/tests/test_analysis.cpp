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

#include "qhash/analysis.hpp"

#include <cmath>

#include "doctest.h"

using namespace qhash;

TEST_CASE("resistance of the degenerate hdq generator is 1 and the qubit bound check is skipped") {
  auto g = QuantumHashGenerator::hdq(BSet(7, {0}));
  auto report = measure_resistance(g, ResistanceMode::exhaustive);
  CHECK(report.delta_measured == doctest::Approx(1.0));
  CHECK(report.qubit_bound == BoundStatus::skipped);
  CHECK(std::isnan(report.s_lower_bound));
}

TEST_CASE("resistance of the simplex fingerprint is exactly 7/15") {
  auto g = QuantumHashGenerator::binary_fingerprint(simplex_code(4));
  auto report = measure_resistance(g, ResistanceMode::exhaustive);
  CHECK(report.pairs_evaluated == 120);
  CHECK(std::abs(report.delta_measured - 7.0 / 15.0) < 1e-9);
  CHECK(report.delta_bound == doctest::Approx(7.0 / 15.0));
  CHECK(report.composition_bound_satisfied);
  CHECK(report.s_qubits == 5);
  // frozen evaluation of the qubit lower bound at delta = 7/15, K = 16
  CHECK(report.s_lower_bound == doctest::Approx(0.363926652).epsilon(1e-8));
  CHECK(report.qubit_bound == BoundStatus::ok);
}

TEST_CASE("composed resistance satisfies the epsilon + delta bound") {
  BSet bstar(5, {0, 1, 2, 3});
  auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(5, 2, 4),
                                         QuantumHashGenerator::hdq(bstar));
  auto report = measure_resistance(g, ResistanceMode::exhaustive);
  CHECK(report.pairs_evaluated == 300);
  CHECK(report.epsilon_used == doctest::Approx(0.25));
  const double delta_inner = hdq_exact_resistance(bstar);
  CHECK(report.delta_bound == doctest::Approx(0.25 + delta_inner).epsilon(1e-12));
  CHECK(report.delta_measured <= report.delta_bound + 1e-9);
  // frozen from the branch-average evaluation of this construction
  CHECK(report.delta_measured == doctest::Approx(0.3318135621).epsilon(1e-8));
  CHECK(report.composition_bound_satisfied);
  CHECK(report.qubit_bound == BoundStatus::ok);
}

TEST_CASE("difference mode matches exhaustive mode for hdq generators, q <= 31") {
  for (std::int64_t q : {5, 13, 31}) {
    BSet b(q, {1, 2, static_cast<std::int64_t>(q - 1)});
    auto g = QuantumHashGenerator::hdq(b);
    auto exact = measure_resistance(g, ResistanceMode::exhaustive);
    auto diff = measure_resistance(g, ResistanceMode::difference);
    CAPTURE(q);
    CHECK(std::abs(exact.delta_measured - diff.delta_measured) < 1e-9);
    CHECK(diff.pairs_evaluated == static_cast<std::uint64_t>(q - 1));
  }
}

TEST_CASE("difference mode rejects non-hdq generators") {
  auto g = QuantumHashGenerator::binary_fingerprint(simplex_code(3));
  CHECK_THROWS_AS(measure_resistance(g, ResistanceMode::difference), std::invalid_argument);
}

TEST_CASE("sampled resistance is a lower estimate and deterministic") {
  auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(7, 2, 6),
                                         QuantumHashGenerator::hdq(BSet(7, {1, 2, 4})));
  auto exact = measure_resistance(g, ResistanceMode::exhaustive, 2000);
  for (std::uint64_t seed : {0u, 3u, 9u}) {
    auto sampled = measure_resistance(g, ResistanceMode::sampled, 150, seed);
    CHECK(sampled.delta_measured <= exact.delta_measured + 1e-12);
  }
  auto a = measure_resistance(g, ResistanceMode::sampled, 150, 5);
  auto b = measure_resistance(g, ResistanceMode::sampled, 150, 5);
  CHECK(a.delta_measured == b.delta_measured);
  CHECK(a.argmax_w == b.argmax_w);
}

TEST_CASE("results are independent of the worker count") {
  auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(5, 2, 4),
                                         QuantumHashGenerator::hdq(BSet(5, {0, 1, 2, 3})));
  for (ResistanceMode mode : {ResistanceMode::exhaustive, ResistanceMode::sampled}) {
    auto one = measure_resistance(g, mode, 300, 11, 1);
    auto four = measure_resistance(g, mode, 300, 11, 4);
    CHECK(one.delta_measured == four.delta_measured);
    CHECK(one.argmax_w == four.argmax_w);
    CHECK(one.argmax_w_prime == four.argmax_w_prime);
  }
  auto h = QuantumHashGenerator::hdq(BSet(31, {1, 5, 7}));
  auto d1 = measure_resistance(h, ResistanceMode::difference, 1000, 0, 1);
  auto d3 = measure_resistance(h, ResistanceMode::difference, 1000, 0, 3);
  CHECK(d1.delta_measured == d3.delta_measured);
  CHECK(d1.argmax_w_prime == d3.argmax_w_prime);
}

TEST_CASE("exhaustive resistance refuses out-of-budget domains") {
  auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(101, 2, 100),
                                         QuantumHashGenerator::hdq(BSet(101, {1, 2})));
  // 101^2 words -> ~52M pairs over the default budget
  CHECK_THROWS_WITH_AS(measure_resistance(g, ResistanceMode::exhaustive),
                       doctest::Contains("sampled"), budget_error);
}

TEST_CASE("theoretical_delta") {
  CHECK(theoretical_delta(0.25, 0.3) == doctest::Approx(0.55));
  CHECK(theoretical_delta(0.0, 0.4) == doctest::Approx(0.4));
  CHECK(theoretical_delta(1.0 / 101.0, 0.3) == doctest::Approx(0.3099).epsilon(1e-3));
  CHECK(theoretical_delta(0.9, 0.8) == 1.0);  // clamped
  CHECK_THROWS_AS(theoretical_delta(-0.1, 0.5), std::invalid_argument);
}

TEST_CASE("qubit lower bound: frozen formula evaluations") {
  // K = 2^256, delta = 1/2
  CHECK(qubit_lower_bound_log2(256.0, 0.5) == doctest::Approx(6.335551293).epsilon(1e-8));
  // K = 2^16, delta = 0.3
  CHECK(qubit_lower_bound(std::uint64_t{1} << 16, 0.3) ==
        doctest::Approx(2.486234767).epsilon(1e-8));
  // K = 2: loglog K = 0, bound is negative and trivially satisfied by s >= 1
  const double tiny = qubit_lower_bound(2, 0.5);
  CHECK(tiny < 0.0);
  CHECK_THROWS_AS(qubit_lower_bound(1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(qubit_lower_bound(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(qubit_lower_bound(16, 1.0), std::invalid_argument);
}

TEST_CASE("sufficient_bset_size") {
  CHECK(sufficient_bset_size(101, 0.3) == 118);
  CHECK(sufficient_bset_size(2, 1.0) == 3);  // ceil(2 ln 4)
  CHECK(sufficient_bset_size(101, 0.35) == 87);
  // doubling delta divides T by about 4
  const double ratio = static_cast<double>(sufficient_bset_size(1009, 0.2)) /
                       static_cast<double>(sufficient_bset_size(1009, 0.4));
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
  CHECK_THROWS_AS(sufficient_bset_size(100, 0.3), std::invalid_argument);  // composite
  CHECK_THROWS_AS(sufficient_bset_size(101, 0.0), std::invalid_argument);
}

TEST_CASE("search with T = q returns the vanishing full character sum") {
  auto result = search_bset(7, 0.5, 7, 1, 0);
  CHECK(result.achieved);
  CHECK(result.delta_achieved <= 1e-9);
  CHECK(result.bset.elements == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("search with T = 1 cannot do better than a single cosine") {
  auto result = search_bset(101, 0.01, 1, 20, 3);
  CHECK(!result.achieved);
  CHECK(result.delta_achieved >= std::cos(2 * 3.14159265358979 / 101) - 1e-9);
  CHECK(result.restarts_used == 20);
}

TEST_CASE("search rejects T > q") {
  CHECK_THROWS_WITH_AS(search_bset(7, 0.3, 8, 1, 0), doctest::Contains("small-q"),
                       std::invalid_argument);
  CHECK_THROWS_AS(search_bset(8, 0.3, 2, 1, 0), std::invalid_argument);  // composite q
}

TEST_CASE("search is deterministic given (q, T, restarts, seed) for any workers") {
  auto a = search_bset(53, 0.2, 12, 25, 9, false, 1);
  auto b = search_bset(53, 0.2, 12, 25, 9, false, 3);
  CHECK(a.bset.elements == b.bset.elements);
  CHECK(a.delta_achieved == b.delta_achieved);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.achieved == b.achieved);
}

TEST_CASE("statistical realization: a random B of formula size meets the target") {
  const std::int64_t q = 101;
  const double delta = 0.35;
  const auto T = static_cast<int>(std::min<std::int64_t>(sufficient_bset_size(q, delta), q));
  CHECK(T == 87);
  auto result = search_bset(q, delta, T, 50, 1);
  CHECK(result.achieved);
  CHECK(result.delta_achieved <= delta);
}

TEST_CASE("exhaustive search finds the best size-4 subset of F_5") {
  auto result = search_bset_exhaustive(5, 4);
  CHECK(result.restarts_used == 5);  // C(5,4) subsets examined
  CHECK(result.bset.elements == std::vector<std::int64_t>{0, 1, 2, 3});  // first optimum
  CHECK(result.delta_achieved == doctest::Approx(0.2022542486).epsilon(1e-9));
  CHECK(result.achieved);  // no target set

  auto with_target = search_bset_exhaustive(5, 4, 0.1);
  CHECK(!with_target.achieved);
  CHECK_THROWS_AS(search_bset_exhaustive(101, 50), budget_error);  // C(101,50) huge
}

TEST_CASE("search stops at the first restart meeting the target") {
  auto result = search_bset(53, 1.0, 10, 25, 4);  // any B scores <= 1
  CHECK(result.achieved);
  CHECK(result.restarts_used == 1);
}

TEST_CASE("oversized states are rejected instead of exhausting memory") {
  std::vector<std::int64_t> big((1 << 23) + 1);  // needs a 25-qubit state
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<std::int64_t>(i);
  BSet b(1073741827LL, big);  // prime just above 2^30
  CHECK_THROWS_AS(hdq_state(b, 1), std::invalid_argument);
  CHECK_NOTHROW(hdq_inner_product_analytic(b, 0, 1));  // analytic form has no state

  // a composition can demand a wide index register without a big B
  auto wide = QuantumHashGenerator::compose(HashFamily::linear(2, 30),
                                            QuantumHashGenerator::hdq(BSet(2, {0, 1})));
  CHECK(wide.spec().s == 32);
  CHECK_THROWS_AS(wide.state(wide.word_at(1)), std::invalid_argument);
}

TEST_CASE("greedy polish never worsens the randomized search result") {
  auto plain = search_bset(53, 0.0, 10, 5, 4, false);
  auto polished = search_bset(53, 0.0, 10, 5, 4, true);
  CHECK(polished.delta_achieved <= plain.delta_achieved + 1e-12);
}

TEST_CASE("check_qubit_bound across constructions") {
  for (std::uint64_t seed : {1u, 2u}) {
    auto result = search_bset(53, 0.5, 16, 10, seed);
    auto g = QuantumHashGenerator::hdq(result.bset);
    auto report = measure_resistance(g, ResistanceMode::difference);
    if (report.delta_measured < 1.0) {
      CHECK(check_qubit_bound(report, g.domain_size()) == BoundStatus::ok);
    }
  }
  auto fp = QuantumHashGenerator::binary_fingerprint(simplex_code(4));
  auto report = measure_resistance(fp, ResistanceMode::exhaustive);
  CHECK(check_qubit_bound(report, 16) == BoundStatus::ok);
}

TEST_CASE("composition reference route matches the state route") {
  BSet bstar(5, {0, 1, 2, 3});
  auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(5, 2, 4),
                                         QuantumHashGenerator::hdq(bstar));
  Word w(5, {2, 0}), w2(5, {3, 1});  // argmax pair of this construction
  const double reference = composition_reference_inner_product(g, w, w2);
  const double direct = inner_product(g.state(w), g.state(w2)).real();
  CHECK(std::abs(reference - direct) < 1e-9);
  CHECK(collision_branch_count(g, w, w2) <= 1);  // rs pairs collide at <= k-1 points
  CHECK(collision_branch_count(g, w, w) == 4);
}

TEST_CASE("report serialization carries the documented fields") {
  auto g = QuantumHashGenerator::binary_fingerprint(simplex_code(4));
  auto j = to_json(measure_resistance(g, ResistanceMode::exhaustive));
  for (const char* key :
       {"delta_measured", "delta_bound", "epsilon_used", "argmax_pair", "pairs_evaluated",
        "mode", "seed", "s_qubits", "s_lower_bound", "qubit_bound_check", "composition_bound_satisfied",
        "runtime_ms"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["mode"] == "exhaustive");

  auto degenerate = to_json(
      measure_resistance(QuantumHashGenerator::hdq(BSet(7, {0})), ResistanceMode::difference));
  CHECK(degenerate["s_lower_bound"].is_null());  // NaN -> null
  CHECK(degenerate["qubit_bound_check"] == "skipped");

  auto search = to_json(search_bset(7, 0.9, 3, 1, 0));
  for (const char* key : {"q", "T", "t_capped", "target_delta", "bset", "delta_achieved",
                          "achieved", "restarts_used", "seed", "runtime_ms"}) {
    CAPTURE(key);
    CHECK(search.contains(key));
  }
}

TEST_CASE("sweep rows render the documented CSV columns") {
  CHECK(sweep_csv_header() ==
        "q,k,n,delta_target,T,seed,delta_measured,delta_bound,s_qubits,s_lower_bound");
  SweepRow row{5, 2, 4, 0.35, 4, 7, 0.33, 0.45, 5, 0.25};
  auto csv = to_csv_row(row);
  CHECK(csv.substr(0, 10) == "5,2,4,0.35");
  CHECK(to_json(row)["s_qubits"] == 5);
}
