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

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qhash/rng.hpp"

namespace qhash {

QuantumState::QuantumState(std::vector<std::complex<double>> amplitudes)
    : amplitudes_(std::move(amplitudes)), qubits_(0) {
  const std::size_t dim = amplitudes_.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("state dimension must be a power of two");
  }
  qubits_ = std::bit_width(dim) - 1;
  double norm_sq = 0.0;
  for (const auto& a : amplitudes_) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized: sum |a|^2 = " +
                                std::to_string(norm_sq));
  }
}

QuantumState QuantumState::scalar_one() {
  return QuantumState({std::complex<double>(1.0, 0.0)});
}

QuantumState QuantumState::basis(int qubits, std::uint64_t index) {
  if (qubits < 0 || qubits > 30) throw std::invalid_argument("qubit count out of range");
  std::size_t dim = std::size_t{1} << qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<std::complex<double>> amps(dim);
  amps[index] = 1.0;
  return QuantumState(std::move(amps));
}

namespace {

void require_equal_qubits(const QuantumState& a, const QuantumState& b) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("qubit counts differ: " + std::to_string(a.qubits()) +
                                " vs " + std::to_string(b.qubits()));
  }
}

}  // namespace

std::complex<double> inner_product(const QuantumState& a, const QuantumState& b) {
  require_equal_qubits(a, b);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return acc;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  std::vector<std::complex<double>> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
    }
  }
  return QuantumState(std::move(out));
}

double swap_test_accept_prob(const QuantumState& a, const QuantumState& b) {
  double overlap = std::abs(inner_product(a, b));
  return (1.0 + overlap * overlap) / 2.0;
}

double swap_test_sample(const QuantumState& a, const QuantumState& b,
                        std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const double p = swap_test_accept_prob(a, b);
  SplitMix64 rng(seed);
  std::uint64_t accepted = 0;
  for (std::uint64_t t = 0; t < shots; ++t) {
    if (rng.next_double() < p) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(shots);
}

std::string format_nonzero(const QuantumState& state) {
  std::ostringstream os;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto a = state.amplitude(i);
    if (std::abs(a) <= 1e-12) continue;
    os << i << ": " << a.real();
    if (a.imag() != 0.0) os << (a.imag() < 0 ? "" : "+") << a.imag() << "i";
    os << "\n";
  }
  return os.str();
}

}  // namespace qhash
