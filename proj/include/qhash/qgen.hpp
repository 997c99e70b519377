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
 * @file qgen.hpp
 * Quantum hash generators: families of functions whose induced
 * superposition state hashes a classical word into a few qubits.
 *
 * Three constructions:
 *
 *   binary_fingerprint  psi(w) = 1/sqrt(n) sum_i |i>|E_i(w)> for a binary
 *                       (n,k,d) code E; pairwise overlap is (agreeing
 *                       coordinates)/n <= 1 - d/n.
 *   hdq                 psi(w) = 1/sqrt(T) sum_j |j>(cos(2 pi b_j w / q)|0>
 *                       + sin(2 pi b_j w / q)|1>) over a set
 *                       B = {b_0..b_{T-1}} of multipliers in F_q.
 *   composed            psi(w) = 1/sqrt(N) sum_i |i> (x) psi_inner(f_i(w))
 *                       for an epsilon-universal outer family {f_i} feeding
 *                       an inner generator; overlap <= epsilon + delta.
 *
 * Index-register layout: basis index = (branch << ell_bits_of_target) |
 * target. Branch labels are 0-based; a family's j-th function (1-based in
 * common notation) occupies branch j-1. When a register size is not a
 * power of two it is rounded up to the next qubit and the unused branches
 * carry amplitude 0; the normalization constant still runs over the used
 * branches only, so all inner products are unchanged.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "json.hpp"
#include "qhash/qstate.hpp"
#include "qhash/uhash.hpp"

namespace qhash {

enum class GeneratorKind { binary_fingerprint, hdq, composed };

const char* to_string(GeneratorKind kind);

/// ceil(log2 x) for x >= 1; the number of qubits indexing x branches.
int ceil_log2(std::uint64_t x);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::hdq;
  std::uint64_t D = 0;      ///< number of functions in the family
  int ell = 1;              ///< target-register qubits
  int d_qubits = 0;         ///< index-register qubits (per-register ceilings)
  int s = 0;                ///< total qubits, d_qubits + ell
  std::uint64_t K = 0;      ///< domain size
  double delta_claimed = 0.0;
};

/// A set B = {b_0, ..., b_{T-1}} of distinct multipliers in F_q.
/// Canonically stored in ascending order.
struct BSet {
  std::int64_t q = 0;
  std::vector<std::int64_t> elements;

  BSet() = default;
  BSet(std::int64_t q, std::vector<std::int64_t> elements);
  int T() const { return static_cast<int>(elements.size()); }
};

/// State of the multiplicative-rotation generator on ceil(log2 T)+1 qubits.
QuantumState hdq_state(const BSet& b, std::int64_t w);

/// Closed form (1/T) sum_j cos(2 pi b_j (w - w') / q) for the inner product
/// of two hdq states; agrees with the state-vector route to 1e-9 and
/// depends on (w, w') only through (w - w') mod q.
double hdq_inner_product_analytic(const BSet& b, std::int64_t w, std::int64_t w_prime);

/// Exact resistance of an hdq generator: max over the q-1 nonzero
/// differences of |hdq_inner_product_analytic|. O(qT).
double hdq_exact_resistance(const BSet& b);

class QuantumHashGenerator {
 public:
  /// Generator from a binary (n,k,d) code: D = n branches, one target
  /// qubit holding the code bit, delta claim 1 - d/n.
  static QuantumHashGenerator binary_fingerprint(BlockCode code);

  /// Multiplicative-rotation generator over B. The delta claim is the
  /// exact resistance, computed at construction via the analytic form.
  static QuantumHashGenerator hdq(BSet b);

  /// Composition: outer family values select the inner generator's domain
  /// word (via the inner domain enumeration). Requires the outer range to
  /// fit the inner domain. Delta claim is epsilon_outer + delta_inner,
  /// clamped to 1.
  static QuantumHashGenerator compose(HashFamily outer, QuantumHashGenerator inner);

  const GeneratorSpec& spec() const { return spec_; }
  GeneratorKind kind() const { return spec_.kind; }

  QuantumState state(const Word& w) const;

  std::uint64_t domain_size() const { return spec_.K; }
  Word word_at(std::uint64_t index) const;

  const BSet& bset() const;                      ///< hdq only
  const BlockCode& code() const;                 ///< binary_fingerprint only
  const HashFamily& outer_family() const;        ///< composed only
  const QuantumHashGenerator& inner() const;     ///< composed only

  /// Composed only: whether log2 K > log2 N + log2 T + ell held at
  /// construction (recorded, not enforced; a violation is reported as a
  /// warning by the CLI).
  bool side_condition_satisfied() const;

  nlohmann::ordered_json to_json() const;

 private:
  QuantumHashGenerator() = default;

  GeneratorSpec spec_;
  BlockCode code_;
  BSet bset_;
  std::optional<HashFamily> outer_;
  std::shared_ptr<const QuantumHashGenerator> inner_;
  bool side_condition_ok_ = true;
};

/// Total qubit count of the generator's states (== spec().s):
/// ceil(log2 N) + ceil(log2 T) + ell for compositions,
/// ceil(log2 D) + ell otherwise.
int generator_qubits(const QuantumHashGenerator& g);

}  // namespace qhash
