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

/**
 * @file analysis.hpp
 * Resistance measurement, B-set search, and quantitative bound checks.
 *
 * Resistance of a generator is the maximum overlap |<psi(w)|psi(w')>| over
 * distinct domain pairs. Three evaluation modes:
 *
 *   exhaustive  exact max over all K(K-1)/2 pairs (state-vector route);
 *               refuses domains whose pair count exceeds the budget.
 *   difference  exact max over the q-1 nonzero differences; hdq
 *               generators only (their overlap depends just on w - w').
 *   sampled     max over `budget` seeded uniform pairs; a lower estimate.
 *
 * All loops are deterministic for any worker count: per-sample randomness
 * is derived from (seed, sample index) and max-reductions break ties
 * toward the smallest pair index.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qhash/qgen.hpp"

namespace qhash {

enum class ResistanceMode { exhaustive, sampled, difference };
enum class BoundStatus { ok, violated, skipped };

const char* to_string(ResistanceMode mode);
const char* to_string(BoundStatus status);

struct ResistanceReport {
  double delta_measured = 0.0;
  double delta_bound = 0.0;    ///< epsilon + delta for compositions, else the construction claim
  double epsilon_used = 0.0;   ///< outer family epsilon (0 for non-compositions)
  Word argmax_w;
  Word argmax_w_prime;
  std::uint64_t pairs_evaluated = 0;
  ResistanceMode mode = ResistanceMode::exhaustive;
  std::uint64_t seed = 0;
  int s_qubits = 0;
  double s_lower_bound = 0.0;  ///< qubit lower bound at measured delta; NaN when skipped
  BoundStatus qubit_bound = BoundStatus::skipped;
  bool composition_bound_satisfied = false;
  std::int64_t runtime_ms = 0;
};

nlohmann::ordered_json to_json(const ResistanceReport& report);

ResistanceReport measure_resistance(const QuantumHashGenerator& g,
                                    ResistanceMode mode,
                                    std::uint64_t budget = 1'000'000,
                                    std::uint64_t seed = 0, int workers = 1);

/// Composition overlap bound epsilon + delta, clamped to 1.
double theoretical_delta(double epsilon, double delta_inner);

/// Lower bound on the qubit count of any delta-resistant function on a
/// domain of size K: loglog K - loglog(1 + sqrt(2/(1-delta))) - 1, logs
/// base 2. Throws unless 0 < delta < 1.
double qubit_lower_bound(std::uint64_t K, double delta);
double qubit_lower_bound_log2(double log2_K, double delta);

/// B-set size ceil((2/delta^2) ln(2q)) sufficient for a random B to be
/// delta-resistant with positive probability.
std::int64_t sufficient_bset_size(std::int64_t q, double delta);

/// Checks s_qubits >= qubit_lower_bound(K, delta_measured); skipped when
/// delta_measured >= 1 (the bound's formula does not apply).
BoundStatus check_qubit_bound(const ResistanceReport& report, std::uint64_t K);

struct BSearchResult {
  BSet bset;
  double delta_achieved = 1.0;  ///< exact max over all q-1 nonzero differences
  int restarts_used = 0;
  double target_delta = 0.0;    ///< NaN when no target was set
  int T = 0;
  bool achieved = false;
  bool t_capped = false;        ///< requested T exceeded q and was capped
  std::uint64_t seed = 0;
  std::int64_t runtime_ms = 0;
};

nlohmann::ordered_json to_json(const BSearchResult& result);

/// Uniform random restarts over size-T subsets of F_q, each scored by the
/// exact difference maximum (O(qT) per candidate). Returns the first B
/// achieving <= delta_target, else the best seen with achieved = false.
/// Deterministic given (q, T, restarts, seed) for any worker count.
/// `greedy` polishes the returned B with incremental swap improvements.
BSearchResult search_bset(std::int64_t q, double delta_target, int T,
                          int restarts, std::uint64_t seed,
                          bool greedy = false, int workers = 1);

/// Exact best size-T subset of F_q by enumeration of all C(q, T) subsets
/// (lexicographic order, first optimum wins). Throws budget_error when the
/// subset count exceeds subset_cap.
BSearchResult search_bset_exhaustive(std::int64_t q, int T,
                                     std::optional<double> delta_target = std::nullopt,
                                     std::uint64_t subset_cap = 1'000'000);

/// Reference route for the composition overlap:
/// (1/N) sum_i <psi_inner(f_i(w)) | psi_inner(f_i(w'))>, with hdq inner
/// products taken analytically. Independent of the composed state vector.
double composition_reference_inner_product(const QuantumHashGenerator& g,
                                           const Word& w, const Word& w_prime);

/// Number of outer functions on which the pair collides (f_i(w) = f_i(w')).
std::uint64_t collision_branch_count(const QuantumHashGenerator& g,
                                     const Word& w, const Word& w_prime);

/// One row of a parameter sweep, exported as CSV.
struct SweepRow {
  std::int64_t q = 0;
  int k = 0;
  int n = 0;
  double delta_target = 0.0;
  int T = 0;
  std::uint64_t seed = 0;
  double delta_measured = 0.0;
  double delta_bound = 0.0;
  int s_qubits = 0;
  double s_lower_bound = 0.0;
};

std::string sweep_csv_header();
std::string to_csv_row(const SweepRow& row);
nlohmann::ordered_json to_json(const SweepRow& row);

}  // namespace qhash
