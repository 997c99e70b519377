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
 * @file qstate.hpp
 * Exact complex state vectors over s qubits, inner products, tensor
 * products, and SWAP-test acceptance statistics.
 *
 * Only pure states and acceptance probabilities are modeled; there is no
 * gate-level circuit simulation, no density matrices, and no measurement
 * collapse. States are immutable values and all operations are pure;
 * sampling takes an explicit seed (no global RNG state).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qhash {

/// Normalization tolerance: every state must satisfy |sum |a_i|^2 - 1| <= 1e-9.
inline constexpr double kNormTolerance = 1e-9;

class QuantumState {
 public:
  /// Takes ownership of the amplitude vector; length must be a power of
  /// two and the norm must be 1 within kNormTolerance.
  explicit QuantumState(std::vector<std::complex<double>> amplitudes);

  /// The 0-qubit scalar state (single amplitude 1); tensor identity.
  static QuantumState scalar_one();

  /// Computational basis state |index> on `qubits` qubits.
  static QuantumState basis(int qubits, std::uint64_t index);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<std::complex<double>> amplitudes_;
  int qubits_;
};

/// <a|b> = sum_i conj(a_i) b_i. Throws on qubit-count mismatch.
std::complex<double> inner_product(const QuantumState& a, const QuantumState& b);

/// Kronecker product |a> (x) |b>; qubit counts add, norm is preserved.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// SWAP-test acceptance probability (1 + |<a|b>|^2) / 2, in [1/2, 1].
double swap_test_accept_prob(const QuantumState& a, const QuantumState& b);

/// Fraction of accepting outcomes over `shots` seeded Bernoulli trials of
/// the SWAP test. Deterministic given (a, b, shots, seed).
double swap_test_sample(const QuantumState& a, const QuantumState& b,
                        std::uint64_t shots, std::uint64_t seed);

/// Nonzero entries (|amp| > 1e-12) as "index: re+imi" lines for inspection.
std::string format_nonzero(const QuantumState& state);

}  // namespace qhash
