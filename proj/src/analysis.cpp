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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <thread>

#include "qhash/rng.hpp"

namespace qhash {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

// (value, rank) max-reduction candidate; smaller rank wins ties so results
// do not depend on enumeration partitioning
struct Best {
  double value = -1.0;
  std::uint64_t rank = UINT64_MAX;
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  void offer(double v, std::uint64_t r, std::uint64_t a, std::uint64_t b) {
    if (v > value || (v == value && r < rank)) {
      value = v;
      rank = r;
      i = a;
      j = b;
    }
  }
  void merge(const Best& other) { offer(other.value, other.rank, other.i, other.j); }
};

// formula body, defined for delta in [0, 1); measured resistances can be
// exactly 0 (orthogonal constructions) and the bound still applies there
double lower_bound_formula(double log2_K, double delta) {
  if (!(log2_K > 0.0)) {
    throw std::invalid_argument("qubit lower bound needs K >= 2");
  }
  const double spread = 1.0 + std::sqrt(2.0 / (1.0 - delta));
  return std::log2(log2_K) - std::log2(std::log2(spread)) - 1.0;
}

void run_striped(int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(body, t);
  for (auto& th : pool) th.join();
}

double finish_report(ResistanceReport& report, const QuantumHashGenerator& g,
                     Clock::time_point start) {
  if (g.kind() == GeneratorKind::composed) {
    report.epsilon_used = g.outer_family().descriptor().epsilon_claimed.value();
    report.delta_bound =
        theoretical_delta(report.epsilon_used, g.inner().spec().delta_claimed);
  } else {
    report.epsilon_used = 0.0;
    report.delta_bound = g.spec().delta_claimed;
  }
  report.s_qubits = g.spec().s;
  if (report.delta_measured < 1.0) {
    report.s_lower_bound = lower_bound_formula(
        std::log2(static_cast<double>(g.domain_size())),
        std::max(report.delta_measured, 0.0));
  } else {
    report.s_lower_bound = std::numeric_limits<double>::quiet_NaN();
  }
  report.qubit_bound = check_qubit_bound(report, g.domain_size());
  report.composition_bound_satisfied = report.delta_measured <= report.delta_bound + 1e-9;
  report.runtime_ms = elapsed_ms(start);
  return report.delta_measured;
}

}  // namespace

const char* to_string(ResistanceMode mode) {
  switch (mode) {
    case ResistanceMode::exhaustive: return "exhaustive";
    case ResistanceMode::sampled: return "sampled";
    case ResistanceMode::difference: return "difference";
  }
  return "?";
}

const char* to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::ok: return "ok";
    case BoundStatus::violated: return "violated";
    case BoundStatus::skipped: return "skipped";
  }
  return "?";
}

ResistanceReport measure_resistance(const QuantumHashGenerator& g,
                                    ResistanceMode mode, std::uint64_t budget,
                                    std::uint64_t seed, int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto start = Clock::now();
  const std::uint64_t K = g.domain_size();
  if (K < 2) throw std::invalid_argument("resistance needs a domain with at least 2 words");

  ResistanceReport report;
  report.mode = mode;
  report.seed = seed;

  switch (mode) {
    case ResistanceMode::exhaustive: {
      const unsigned __int128 pairs = static_cast<unsigned __int128>(K) * (K - 1) / 2;
      if (pairs > budget) {
        throw budget_error("exhaustive resistance needs " +
                           std::to_string(static_cast<std::uint64_t>(
                               std::min<unsigned __int128>(pairs, UINT64_MAX))) +
                           " pairs (budget " + std::to_string(budget) +
                           "); use sampled or difference mode");
      }
      report.pairs_evaluated = static_cast<std::uint64_t>(pairs);

      // cache full state table when it stays small; otherwise rebuild the
      // inner state per pair
      const std::size_t dim = std::size_t{1} << g.spec().s;
      const bool cache = K * dim <= (std::size_t{1} << 23);
      std::vector<QuantumState> states;
      if (cache) {
        states.reserve(K);
        for (std::uint64_t u = 0; u < K; ++u) states.push_back(g.state(g.word_at(u)));
      }

      std::vector<Best> bests(static_cast<std::size_t>(workers));
      run_striped(workers, [&](int tid) {
        Best local;
        for (std::uint64_t u = static_cast<std::uint64_t>(tid); u < K;
             u += static_cast<std::uint64_t>(workers)) {
          const QuantumState su = cache ? states[u] : g.state(g.word_at(u));
          for (std::uint64_t v = u + 1; v < K; ++v) {
            const double overlap =
                cache ? std::abs(inner_product(su, states[v]))
                      : std::abs(inner_product(su, g.state(g.word_at(v))));
            local.offer(overlap, u * K + v, u, v);
          }
        }
        bests[static_cast<std::size_t>(tid)] = local;
      });
      Best best;
      for (const auto& b : bests) best.merge(b);
      report.delta_measured = best.value;
      report.argmax_w = g.word_at(best.i);
      report.argmax_w_prime = g.word_at(best.j);
      break;
    }
    case ResistanceMode::difference: {
      if (g.kind() != GeneratorKind::hdq) {
        throw std::invalid_argument(
            "difference mode requires an hdq generator (shift invariance)");
      }
      const BSet& b = g.bset();
      report.pairs_evaluated = static_cast<std::uint64_t>(b.q - 1);
      std::vector<Best> bests(static_cast<std::size_t>(workers));
      run_striped(workers, [&](int tid) {
        Best local;
        for (std::int64_t d = 1 + tid; d < b.q; d += workers) {
          const double overlap = std::abs(hdq_inner_product_analytic(b, d, 0));
          local.offer(overlap, static_cast<std::uint64_t>(d), 0,
                      static_cast<std::uint64_t>(d));
        }
        bests[static_cast<std::size_t>(tid)] = local;
      });
      Best best;
      for (const auto& bb : bests) best.merge(bb);
      report.delta_measured = best.value;
      report.argmax_w = g.word_at(best.i);
      report.argmax_w_prime = g.word_at(best.j);
      break;
    }
    case ResistanceMode::sampled: {
      if (budget < 1) throw std::invalid_argument("sampled mode needs budget >= 1");
      report.pairs_evaluated = budget;
      std::vector<Best> bests(static_cast<std::size_t>(workers));
      run_striped(workers, [&](int tid) {
        Best local;
        for (std::uint64_t t = static_cast<std::uint64_t>(tid); t < budget;
             t += static_cast<std::uint64_t>(workers)) {
          SplitMix64 rng(derive_seed(seed, t));
          std::uint64_t u = rng.next_below(K);
          std::uint64_t v = rng.next_below(K - 1);
          if (v >= u) ++v;
          const double overlap =
              std::abs(inner_product(g.state(g.word_at(u)), g.state(g.word_at(v))));
          local.offer(overlap, t, u, v);
        }
        bests[static_cast<std::size_t>(tid)] = local;
      });
      Best best;
      for (const auto& b : bests) best.merge(b);
      report.delta_measured = best.value;
      report.argmax_w = g.word_at(best.i);
      report.argmax_w_prime = g.word_at(best.j);
      break;
    }
  }

  finish_report(report, g, start);
  return report;
}

double theoretical_delta(double epsilon, double delta_inner) {
  if (epsilon < 0.0 || epsilon > 1.0 || delta_inner < 0.0 || delta_inner > 1.0) {
    throw std::invalid_argument("epsilon and delta must lie in [0, 1]");
  }
  return std::min(1.0, epsilon + delta_inner);
}

double qubit_lower_bound_log2(double log2_K, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("qubit lower bound needs delta in (0, 1)");
  }
  return lower_bound_formula(log2_K, delta);
}

double qubit_lower_bound(std::uint64_t K, double delta) {
  if (K < 2) throw std::invalid_argument("qubit lower bound needs K >= 2");
  return qubit_lower_bound_log2(std::log2(static_cast<double>(K)), delta);
}

std::int64_t sufficient_bset_size(std::int64_t q, double delta) {
  require_prime_modulus(q);
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("sufficient_bset_size needs delta in (0, 1]");
  }
  return static_cast<std::int64_t>(
      std::ceil(2.0 / (delta * delta) * std::log(2.0 * static_cast<double>(q))));
}

BoundStatus check_qubit_bound(const ResistanceReport& report, std::uint64_t K) {
  if (!(report.delta_measured < 1.0)) return BoundStatus::skipped;
  const double bound = lower_bound_formula(std::log2(static_cast<double>(K)),
                                           std::max(report.delta_measured, 0.0));
  return static_cast<double>(report.s_qubits) + 1e-9 >= bound ? BoundStatus::ok
                                                              : BoundStatus::violated;
}

namespace {

std::vector<std::int64_t> sample_subset(std::int64_t q, int T, std::uint64_t seed) {
  // partial Fisher-Yates over 0..q-1
  SplitMix64 rng(seed);
  std::vector<std::int64_t> pool(static_cast<std::size_t>(q));
  std::iota(pool.begin(), pool.end(), std::int64_t{0});
  for (int i = 0; i < T; ++i) {
    const auto j = static_cast<std::size_t>(
        i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(q - i))));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(T));
  return pool;
}

double difference_cos(std::int64_t b, std::int64_t d, std::int64_t q) {
  std::int64_t h = b * d % q;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(h) /
                  static_cast<double>(q));
}

// incremental swap improvement over the per-difference cosine sums;
// deterministic: best improvement per pass, ties to the first (position,
// candidate) in scan order
void greedy_polish(std::int64_t q, std::vector<std::int64_t>& elems, double& score) {
  const int T = static_cast<int>(elems.size());
  std::vector<double> sums(static_cast<std::size_t>(q), 0.0);
  for (std::int64_t d = 1; d < q; ++d) {
    for (auto b : elems) sums[static_cast<std::size_t>(d)] += difference_cos(b, d, q);
  }
  std::vector<bool> member(static_cast<std::size_t>(q), false);
  for (auto b : elems) member[static_cast<std::size_t>(b)] = true;

  auto score_of = [&](const std::vector<double>& s) {
    double worst = 0.0;
    for (std::int64_t d = 1; d < q; ++d) {
      worst = std::max(worst, std::abs(s[static_cast<std::size_t>(d)]));
    }
    return worst / static_cast<double>(T);
  };
  score = score_of(sums);

  for (int pass = 0; pass < 50; ++pass) {
    double best_score = score;
    int best_pos = -1;
    std::int64_t best_val = -1;
    for (int p = 0; p < T; ++p) {
      for (std::int64_t v = 0; v < q; ++v) {
        if (member[static_cast<std::size_t>(v)]) continue;
        double worst = 0.0;
        for (std::int64_t d = 1; d < q; ++d) {
          const double s = sums[static_cast<std::size_t>(d)] -
                           difference_cos(elems[static_cast<std::size_t>(p)], d, q) +
                           difference_cos(v, d, q);
          worst = std::max(worst, std::abs(s));
        }
        worst /= static_cast<double>(T);
        if (worst < best_score - 1e-15) {
          best_score = worst;
          best_pos = p;
          best_val = v;
        }
      }
    }
    if (best_pos < 0) break;
    const std::int64_t old = elems[static_cast<std::size_t>(best_pos)];
    for (std::int64_t d = 1; d < q; ++d) {
      sums[static_cast<std::size_t>(d)] +=
          difference_cos(best_val, d, q) - difference_cos(old, d, q);
    }
    member[static_cast<std::size_t>(old)] = false;
    member[static_cast<std::size_t>(best_val)] = true;
    elems[static_cast<std::size_t>(best_pos)] = best_val;
    score = best_score;
  }
  std::sort(elems.begin(), elems.end());
}

}  // namespace

BSearchResult search_bset(std::int64_t q, double delta_target, int T, int restarts,
                          std::uint64_t seed, bool greedy, int workers) {
  const auto start = Clock::now();
  require_prime_modulus(q);
  if (T < 1 || T > q) {
    throw std::invalid_argument(
        "T must satisfy 1 <= T <= q: a set B of " + std::to_string(T) +
        " distinct elements of F_" + std::to_string(q) +
        " does not exist (small-q limitation; cap T at q)");
  }
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  // candidate r is fully determined by (seed, r): scores can be evaluated
  // in any order / on any worker count with identical results
  std::vector<double> scores(static_cast<std::size_t>(restarts),
                             std::numeric_limits<double>::infinity());
  std::vector<std::vector<std::int64_t>> candidates(static_cast<std::size_t>(restarts));
  std::atomic<bool> found{false};

  run_striped(workers, [&](int tid) {
    for (int r = tid; r < restarts; r += workers) {
      if (workers == 1 && found.load()) break;  // serial early exit, same result
      auto elems = sample_subset(q, T, derive_seed(seed, static_cast<std::uint64_t>(r)));
      std::sort(elems.begin(), elems.end());
      const double score = hdq_exact_resistance(BSet(q, elems));
      scores[static_cast<std::size_t>(r)] = score;
      candidates[static_cast<std::size_t>(r)] = std::move(elems);
      if (score <= delta_target) found.store(true);
    }
  });

  // first restart achieving the target, else the best seen
  int chosen = -1;
  for (int r = 0; r < restarts; ++r) {
    if (scores[static_cast<std::size_t>(r)] <= delta_target) {
      chosen = r;
      break;
    }
  }
  BSearchResult result;
  result.T = T;
  result.seed = seed;
  result.target_delta = delta_target;
  if (chosen >= 0) {
    result.achieved = true;
    result.restarts_used = chosen + 1;
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
      if (scores[static_cast<std::size_t>(r)] < best) {
        best = scores[static_cast<std::size_t>(r)];
        chosen = r;
      }
    }
    result.achieved = false;
    result.restarts_used = restarts;
  }
  double score = scores[static_cast<std::size_t>(chosen)];
  auto elems = candidates[static_cast<std::size_t>(chosen)];
  if (greedy) {
    greedy_polish(q, elems, score);
    result.achieved = score <= delta_target;
  }
  result.bset = BSet(q, std::move(elems));
  result.delta_achieved = score;
  result.runtime_ms = elapsed_ms(start);
  return result;
}

BSearchResult search_bset_exhaustive(std::int64_t q, int T,
                                     std::optional<double> delta_target,
                                     std::uint64_t subset_cap) {
  const auto start = Clock::now();
  require_prime_modulus(q);
  if (T < 1 || T > q) throw std::invalid_argument("T must satisfy 1 <= T <= q");

  unsigned __int128 count = 1;  // C(q, T)
  for (int i = 1; i <= T; ++i) {
    count = count * static_cast<unsigned __int128>(q - T + i) / static_cast<unsigned __int128>(i);
    if (count > subset_cap) {
      throw budget_error("C(q, T) exceeds the subset cap " + std::to_string(subset_cap) +
                         "; use randomized search");
    }
  }

  std::vector<std::int64_t> combo(static_cast<std::size_t>(T));
  std::iota(combo.begin(), combo.end(), std::int64_t{0});
  BSearchResult result;
  result.T = T;
  result.target_delta =
      delta_target ? *delta_target : std::numeric_limits<double>::quiet_NaN();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> best_combo;
  int examined = 0;
  for (;;) {
    ++examined;
    const double score = hdq_exact_resistance(BSet(q, combo));
    if (score < best) {  // strict: first optimum in lexicographic order wins
      best = score;
      best_combo = combo;
    }
    // next lexicographic T-combination of {0..q-1}
    int pos = T - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == q - T + pos) --pos;
    if (pos < 0) break;
    ++combo[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < T; ++i) {
      combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  result.bset = BSet(q, std::move(best_combo));
  result.delta_achieved = best;
  result.restarts_used = examined;
  result.achieved = !delta_target || best <= *delta_target;
  result.runtime_ms = elapsed_ms(start);
  return result;
}

double composition_reference_inner_product(const QuantumHashGenerator& g,
                                           const Word& w, const Word& w_prime) {
  if (g.kind() != GeneratorKind::composed) {
    throw std::invalid_argument("composition identity applies to compositions only");
  }
  const HashFamily& outer = g.outer_family();
  const QuantumHashGenerator& in = g.inner();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < outer.descriptor().N; ++i) {
    const std::int64_t v = outer.evaluate(i, w);
    const std::int64_t v2 = outer.evaluate(i, w_prime);
    if (in.kind() == GeneratorKind::hdq) {
      acc += hdq_inner_product_analytic(in.bset(), v, v2);
    } else {
      acc += inner_product(in.state(in.word_at(static_cast<std::uint64_t>(v))),
                           in.state(in.word_at(static_cast<std::uint64_t>(v2))))
                 .real();
    }
  }
  return acc / static_cast<double>(outer.descriptor().N);
}

std::uint64_t collision_branch_count(const QuantumHashGenerator& g, const Word& w,
                                     const Word& w_prime) {
  if (g.kind() != GeneratorKind::composed) {
    throw std::invalid_argument("collision branches apply to compositions only");
  }
  const HashFamily& outer = g.outer_family();
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < outer.descriptor().N; ++i) {
    if (outer.evaluate(i, w) == outer.evaluate(i, w_prime)) ++count;
  }
  return count;
}

nlohmann::ordered_json to_json(const ResistanceReport& report) {
  nlohmann::ordered_json j;
  j["delta_measured"] = report.delta_measured;
  j["delta_bound"] = report.delta_bound;
  j["epsilon_used"] = report.epsilon_used;
  j["argmax_pair"] = {{"w", report.argmax_w.values()},
                      {"w_prime", report.argmax_w_prime.values()}};
  j["pairs_evaluated"] = report.pairs_evaluated;
  j["mode"] = to_string(report.mode);
  j["seed"] = report.seed;
  j["s_qubits"] = report.s_qubits;
  if (std::isnan(report.s_lower_bound)) {
    j["s_lower_bound"] = nullptr;
  } else {
    j["s_lower_bound"] = report.s_lower_bound;
  }
  j["qubit_bound_check"] = to_string(report.qubit_bound);
  j["composition_bound_satisfied"] = report.composition_bound_satisfied;
  j["runtime_ms"] = report.runtime_ms;
  return j;
}

nlohmann::ordered_json to_json(const BSearchResult& result) {
  nlohmann::ordered_json j;
  j["q"] = result.bset.q;
  j["T"] = result.T;
  j["t_capped"] = result.t_capped;
  j["target_delta"] = result.target_delta;
  j["bset"] = result.bset.elements;
  j["delta_achieved"] = result.delta_achieved;
  j["achieved"] = result.achieved;
  j["restarts_used"] = result.restarts_used;
  j["seed"] = result.seed;
  j["runtime_ms"] = result.runtime_ms;
  return j;
}

namespace {

std::string format_double(double v) {
  // shortest round-trip rendering, matching the JSON output's style
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return {buf, end};
}

}  // namespace

std::string sweep_csv_header() {
  return "q,k,n,delta_target,T,seed,delta_measured,delta_bound,s_qubits,s_lower_bound";
}

std::string to_csv_row(const SweepRow& row) {
  std::string out;
  out += std::to_string(row.q) + ",";
  out += std::to_string(row.k) + ",";
  out += std::to_string(row.n) + ",";
  out += format_double(row.delta_target) + ",";
  out += std::to_string(row.T) + ",";
  out += std::to_string(row.seed) + ",";
  out += format_double(row.delta_measured) + ",";
  out += format_double(row.delta_bound) + ",";
  out += std::to_string(row.s_qubits) + ",";
  out += format_double(row.s_lower_bound);
  return out;
}

nlohmann::ordered_json to_json(const SweepRow& row) {
  nlohmann::ordered_json j;
  j["q"] = row.q;
  j["k"] = row.k;
  j["n"] = row.n;
  j["delta_target"] = row.delta_target;
  j["T"] = row.T;
  j["seed"] = row.seed;
  j["delta_measured"] = row.delta_measured;
  j["delta_bound"] = row.delta_bound;
  j["s_qubits"] = row.s_qubits;
  j["s_lower_bound"] = row.s_lower_bound;
  return j;
}

}  // namespace qhash
