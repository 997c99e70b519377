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
 * @file gf.hpp
 * Exact arithmetic in prime fields F_q and fixed-length words over them.
 *
 * Prime fields only: composite moduli are rejected with a diagnostic.
 * Moduli are limited to q < 2^31 so every product fits in a signed 64-bit
 * integer; all arithmetic is exact (no floating point anywhere in this
 * module).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhash {

/// Deterministic primality test for n < 2^31 (trial division).
bool is_prime(std::int64_t n);

/// Throws std::invalid_argument unless q is a prime in [2, 2^31).
void require_prime_modulus(std::int64_t q);

/// An element of F_q, q prime. Value is kept reduced to [0, q).
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  bool operator==(const FieldElement& other) const = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

FieldElement fp_add(const FieldElement& a, const FieldElement& b);
FieldElement fp_sub(const FieldElement& a, const FieldElement& b);
FieldElement fp_mul(const FieldElement& a, const FieldElement& b);

/// Multiplicative inverse; throws std::invalid_argument for a = 0.
FieldElement fp_inv(const FieldElement& a);

/// a^e with the polynomial-evaluation convention 0^0 = 1.
FieldElement fp_pow(const FieldElement& a, std::uint64_t e);

/// Ascending list of all primes <= M; empty for M < 2. Its length is pi(M).
std::vector<std::int64_t> primes_up_to(std::int64_t M);

/// Smallest prime >= n.
std::int64_t next_prime(std::int64_t n);

/// A length-k word over F_q. Element order is index 0..k-1, i.e. w_0 first.
class Word {
 public:
  /// Default state is the single-bit zero word (placeholder in reports).
  Word() : modulus_(2), values_{0} {}
  Word(std::int64_t modulus, std::vector<std::int64_t> values);
  explicit Word(const std::vector<FieldElement>& elems);

  /// Word whose little-endian base-q digit expansion equals `index`
  /// (w_0 is the least significant digit). Throws if index >= q^k.
  static Word from_index(std::int64_t modulus, int k, std::uint64_t index);

  /// The integer w_0 + w_1 q + ... + w_{k-1} q^{k-1}. Throws on overflow.
  std::uint64_t to_index() const;

  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t value(std::size_t i) const { return values_[i]; }
  FieldElement at(std::size_t i) const { return {values_[i], modulus_}; }
  const std::vector<std::int64_t>& values() const { return values_; }

  bool operator==(const Word& other) const = default;

  /// Comma-separated rendering, e.g. "2,1".
  std::string to_string() const;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> values_;
};

}  // namespace qhash
