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
 * @file uhash.hpp
 * Classical epsilon-universal hash families.
 *
 * A family F = {f_0, ..., f_{N-1}} of maps X -> Y is epsilon-universal when
 * every fixed pair of distinct words collides under at most epsilon*N of the
 * functions. Four constructions are provided:
 *
 *   linear      f_a(w) = sum_i a_i w_i over F_q, indexed by a in (F_q)^k.
 *               Domain excludes the all-zero word; note the family itself
 *               still contains the all-zero coefficient vector, whose
 *               function collides on everything.
 *   freivalds   f_i(w) = (w as integer) mod p_i for the i-th prime
 *               p_i <= M, M = ceil(c k ln k). Range is {0..M-1}, not a
 *               field.
 *   rs          f_a(w) = P_w(a), the degree-<k polynomial with coefficient
 *               vector w evaluated at point a. One function per evaluation
 *               point; these are the coordinates of a Reed-Solomon codeword.
 *   code        coordinate functions of any supplied [n,k,d]_q block code.
 *
 * Families are rule-based and evaluated lazily; they are never materialized
 * as N x K tables (K = q^k explodes quickly). All families are immutable
 * after construction and safe to share across threads.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhash/gf.hpp"

namespace qhash {

/// Enumeration cap exceeded; callers should fall back to sampled mode.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact nonnegative rational, kept in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  bool operator==(const Ratio&) const = default;
};

enum class FamilyKind { linear, freivalds, rs, code, custom };

const char* to_string(FamilyKind kind);

struct HashFamilyDescriptor {
  FamilyKind kind = FamilyKind::custom;
  std::uint64_t N = 0;  ///< number of functions
  std::uint64_t K = 0;  ///< domain size
  std::uint64_t M = 0;  ///< range size
  Ratio epsilon_claimed;
};

/// An explicit [n,k,d]_q block code, evaluable coordinate-wise.
struct BlockCode {
  std::int64_t q = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  std::string name;
  std::function<std::vector<std::int64_t>(const Word&)> encode;
};

/// Binary simplex code [2^m - 1, m, 2^(m-1)]_2: coordinate a (1-based) of
/// the codeword is <a, w> mod 2 over the bit expansions.
BlockCode simplex_code(int m);

/// Repetition code [n, 1, n]_q.
BlockCode repetition_code(int n, std::int64_t q);

/// Reed-Solomon code [n, k, n-(k-1)]_q over the given evaluation points
/// (defaults to 1..n, i.e. the first n nonzero field elements).
BlockCode rs_code(std::int64_t q, int k, int n,
                  std::optional<std::vector<std::int64_t>> points = std::nullopt);

class HashFamily {
 public:
  /// (1/q)-universal family of N = q^k linear forms over domain
  /// (F_q)^k \ {0}, K = q^k - 1.
  static HashFamily linear(std::int64_t q, int k);

  /// (1/c)-universal Freivalds fingerprints: reductions of the word, read
  /// as the little-endian integer w_0 + 2 w_1 + ..., modulo each prime
  /// <= M = ceil(c k ln k). N = pi(M), K = 2^k.
  static HashFamily freivalds(int k, int c);

  /// ((k-1)/n)-universal Reed-Solomon evaluation family. N = n functions,
  /// K = q^k.
  static HashFamily reed_solomon(std::int64_t q, int k, int n,
                                 std::optional<std::vector<std::int64_t>> points = std::nullopt);

  /// (1 - d/n)-universal family of coordinate functions of a block code.
  static HashFamily from_code(BlockCode code);

  const HashFamilyDescriptor& descriptor() const { return desc_; }

  /// Value of function fn_index on w, in [0, M).
  std::int64_t evaluate(std::uint64_t fn_index, const Word& w) const;

  /// index-th domain word; words are ordered as base-q integers with the
  /// most significant element last (the linear family skips the zero word).
  Word word_at(std::uint64_t index) const;

  std::uint64_t domain_size() const { return desc_.K; }

  std::int64_t q() const { return q_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int c() const { return c_; }
  const std::vector<std::int64_t>& points() const { return points_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  const BlockCode& code() const { return code_; }

  nlohmann::ordered_json to_json() const;

 private:
  HashFamily() = default;

  HashFamilyDescriptor desc_;
  std::int64_t q_ = 0;  // field modulus of domain words (2 for freivalds)
  int k_ = 0;
  int n_ = 0;
  int c_ = 0;
  std::vector<std::int64_t> points_;
  std::vector<std::int64_t> primes_;
  BlockCode code_;
};

enum class CensusMode { exhaustive, sampled };

const char* to_string(CensusMode mode);

/// Result of a collision census over a hash family.
struct EpsilonReport {
  std::uint64_t max_collisions = 0;  ///< worst-case collision count over examined pairs
  std::uint64_t N = 0;
  Word worst_w;
  Word worst_w_prime;
  std::uint64_t pairs_evaluated = 0;
  CensusMode mode = CensusMode::exhaustive;
  std::uint64_t seed = 0;

  /// Measured epsilon = max_collisions / N. Exact in exhaustive mode, a
  /// lower estimate in sampled mode.
  double epsilon() const { return static_cast<double>(max_collisions) / static_cast<double>(N); }
  Ratio epsilon_ratio() const { return Ratio::of(static_cast<std::int64_t>(max_collisions), static_cast<std::int64_t>(N)); }
};

/// Exact census over all K(K-1)/2 distinct pairs. Throws budget_error when
/// pairs * N exceeds `eval_cap` pair-function evaluations.
EpsilonReport measure_epsilon_exhaustive(const HashFamily& family,
                                         std::uint64_t eval_cap = 10'000'000);

/// Census over `pairs` uniformly seeded pairs (with replacement).
EpsilonReport measure_epsilon_sampled(const HashFamily& family,
                                      std::uint64_t pairs, std::uint64_t seed);

}  // namespace qhash
