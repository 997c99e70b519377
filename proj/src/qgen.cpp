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

#include "qhash/qgen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qhash {

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::binary_fingerprint: return "binary_fingerprint";
    case GeneratorKind::hdq: return "hdq";
    case GeneratorKind::composed: return "composed";
  }
  return "?";
}

int ceil_log2(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("ceil_log2 needs x >= 1");
  return x == 1 ? 0 : std::bit_width(x - 1);
}

BSet::BSet(std::int64_t q, std::vector<std::int64_t> elements)
    : q(q), elements(std::move(elements)) {
  require_prime_modulus(q);
  if (this->elements.empty()) throw std::invalid_argument("B must be nonempty");
  std::sort(this->elements.begin(), this->elements.end());
  for (std::size_t i = 0; i < this->elements.size(); ++i) {
    std::int64_t b = this->elements[i];
    if (b < 0 || b >= q) throw std::invalid_argument("B elements must lie in F_q");
    if (i > 0 && b == this->elements[i - 1]) {
      throw std::invalid_argument("B elements must be distinct");
    }
  }
}

namespace {

// angle 2*pi*((b*w) mod q)/q; reducing mod q first keeps the argument in
// [0, 2*pi) so cos/sin lose no precision for large b*w
double rotation_angle(std::int64_t b, std::int64_t w, std::int64_t q) {
  std::int64_t h = b % q * (w % q) % q;
  if (h < 0) h += q;
  return 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(q);
}

}  // namespace

QuantumState hdq_state(const BSet& b, std::int64_t w) {
  const int T = b.T();
  const int qubits = ceil_log2(static_cast<std::uint64_t>(T)) + 1;
  if (qubits > 24) {
    throw std::invalid_argument("state on " + std::to_string(qubits) +
                                " qubits is past the simulable range (s <= 24)");
  }
  std::vector<std::complex<double>> amps(std::size_t{1} << qubits);
  const double scale = 1.0 / std::sqrt(static_cast<double>(T));
  for (int j = 0; j < T; ++j) {
    const double angle = rotation_angle(b.elements[j], w, b.q);
    amps[static_cast<std::size_t>(j) << 1] = scale * std::cos(angle);
    amps[(static_cast<std::size_t>(j) << 1) | 1] = scale * std::sin(angle);
  }
  return QuantumState(std::move(amps));
}

double hdq_inner_product_analytic(const BSet& b, std::int64_t w, std::int64_t w_prime) {
  std::int64_t diff = (w - w_prime) % b.q;
  if (diff < 0) diff += b.q;
  double acc = 0.0;
  for (std::int64_t elem : b.elements) {
    acc += std::cos(rotation_angle(elem, diff, b.q));
  }
  return acc / static_cast<double>(b.T());
}

double hdq_exact_resistance(const BSet& b) {
  double worst = 0.0;
  for (std::int64_t d = 1; d < b.q; ++d) {
    worst = std::max(worst, std::abs(hdq_inner_product_analytic(b, d, 0)));
  }
  return worst;
}

QuantumHashGenerator QuantumHashGenerator::binary_fingerprint(BlockCode code) {
  if (code.q != 2) {
    throw std::invalid_argument("binary fingerprint needs a binary code (q = 2)");
  }
  if (code.n < 1 || code.k < 1 || code.k > 62 || !code.encode) {
    throw std::invalid_argument("binary fingerprint needs an evaluable (n,k,d) code, k <= 62");
  }
  QuantumHashGenerator g;
  g.spec_.kind = GeneratorKind::binary_fingerprint;
  g.spec_.D = static_cast<std::uint64_t>(code.n);
  g.spec_.ell = 1;
  g.spec_.d_qubits = ceil_log2(g.spec_.D);
  g.spec_.s = g.spec_.d_qubits + 1;
  g.spec_.K = std::uint64_t{1} << code.k;
  g.spec_.delta_claimed =
      1.0 - static_cast<double>(code.d) / static_cast<double>(code.n);
  g.code_ = std::move(code);
  return g;
}

QuantumHashGenerator QuantumHashGenerator::hdq(BSet b) {
  QuantumHashGenerator g;
  g.spec_.kind = GeneratorKind::hdq;
  g.spec_.D = static_cast<std::uint64_t>(b.T());
  g.spec_.ell = 1;
  g.spec_.d_qubits = ceil_log2(g.spec_.D);
  g.spec_.s = g.spec_.d_qubits + 1;
  g.spec_.K = static_cast<std::uint64_t>(b.q);
  g.spec_.delta_claimed = hdq_exact_resistance(b);
  g.bset_ = std::move(b);
  return g;
}

QuantumHashGenerator QuantumHashGenerator::compose(HashFamily outer,
                                                   QuantumHashGenerator inner) {
  if (inner.domain_size() < outer.descriptor().M) {
    throw std::invalid_argument(
        "outer family range (" + std::to_string(outer.descriptor().M) +
        ") does not fit the inner generator's domain (" +
        std::to_string(inner.domain_size()) + ")");
  }
  if (outer.descriptor().N > UINT64_MAX / inner.spec().D) {
    throw std::invalid_argument("composed family size N*T overflows");
  }
  QuantumHashGenerator g;
  g.spec_.kind = GeneratorKind::composed;
  g.spec_.D = outer.descriptor().N * inner.spec().D;
  g.spec_.ell = inner.spec().ell;
  g.spec_.d_qubits = ceil_log2(outer.descriptor().N) + inner.spec().d_qubits;
  g.spec_.s = g.spec_.d_qubits + g.spec_.ell;
  g.spec_.K = outer.descriptor().K;
  g.spec_.delta_claimed = std::min(
      1.0, outer.descriptor().epsilon_claimed.value() + inner.spec().delta_claimed);
  g.side_condition_ok_ =
      std::log2(static_cast<double>(g.spec_.K)) >
      std::log2(static_cast<double>(outer.descriptor().N)) +
          std::log2(static_cast<double>(inner.spec().D)) + g.spec_.ell;
  g.outer_ = std::move(outer);
  g.inner_ = std::make_shared<const QuantumHashGenerator>(std::move(inner));
  return g;
}

QuantumState QuantumHashGenerator::state(const Word& w) const {
  if (spec_.s > 24) {
    throw std::invalid_argument("state on " + std::to_string(spec_.s) +
                                " qubits is past the simulable range (s <= 24)");
  }
  switch (spec_.kind) {
    case GeneratorKind::binary_fingerprint: {
      const auto bits = code_.encode(w);
      std::vector<std::complex<double>> amps(std::size_t{1} << spec_.s);
      const double scale = 1.0 / std::sqrt(static_cast<double>(code_.n));
      for (int i = 0; i < code_.n; ++i) {
        // the cos/sin target reduces exactly to |E_i(w)> for bits in {0,1}
        amps[(static_cast<std::size_t>(i) << 1) |
             static_cast<std::size_t>(bits[static_cast<std::size_t>(i)])] = scale;
      }
      return QuantumState(std::move(amps));
    }
    case GeneratorKind::hdq: {
      if (w.modulus() != bset_.q || w.size() != 1) {
        throw std::invalid_argument("hdq expects single-element words over F_q");
      }
      return hdq_state(bset_, w.value(0));
    }
    case GeneratorKind::composed: {
      const auto& outer = *outer_;
      const std::uint64_t N = outer.descriptor().N;
      const QuantumHashGenerator& in = *inner_;
      const std::size_t inner_dim = std::size_t{1} << in.spec().s;
      std::vector<std::complex<double>> amps(std::size_t{1} << spec_.s);
      const double scale = 1.0 / std::sqrt(static_cast<double>(N));
      for (std::uint64_t i = 0; i < N; ++i) {
        const std::int64_t v = outer.evaluate(i, w);
        const QuantumState branch = in.state(in.word_at(static_cast<std::uint64_t>(v)));
        const std::size_t base = static_cast<std::size_t>(i) * inner_dim;
        for (std::size_t t = 0; t < inner_dim; ++t) {
          amps[base + t] = scale * branch.amplitude(t);
        }
      }
      return QuantumState(std::move(amps));
    }
  }
  throw std::logic_error("unreachable generator kind");
}

Word QuantumHashGenerator::word_at(std::uint64_t index) const {
  switch (spec_.kind) {
    case GeneratorKind::binary_fingerprint:
      if (index >= spec_.K) throw std::invalid_argument("domain index out of range");
      return Word::from_index(2, code_.k, index);
    case GeneratorKind::hdq:
      if (index >= spec_.K) throw std::invalid_argument("domain index out of range");
      return Word::from_index(bset_.q, 1, index);
    case GeneratorKind::composed:
      return outer_->word_at(index);
  }
  throw std::logic_error("unreachable generator kind");
}

const BSet& QuantumHashGenerator::bset() const {
  if (spec_.kind != GeneratorKind::hdq) {
    throw std::logic_error("bset() is only available on hdq generators");
  }
  return bset_;
}

const BlockCode& QuantumHashGenerator::code() const {
  if (spec_.kind != GeneratorKind::binary_fingerprint) {
    throw std::logic_error("code() is only available on fingerprint generators");
  }
  return code_;
}

const HashFamily& QuantumHashGenerator::outer_family() const {
  if (!outer_) throw std::logic_error("outer_family() is only available on compositions");
  return *outer_;
}

const QuantumHashGenerator& QuantumHashGenerator::inner() const {
  if (!inner_) throw std::logic_error("inner() is only available on compositions");
  return *inner_;
}

bool QuantumHashGenerator::side_condition_satisfied() const {
  if (spec_.kind != GeneratorKind::composed) {
    throw std::logic_error("side condition applies to compositions only");
  }
  return side_condition_ok_;
}

nlohmann::ordered_json QuantumHashGenerator::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(spec_.kind);
  switch (spec_.kind) {
    case GeneratorKind::binary_fingerprint:
      j["q"] = 2;
      j["k"] = code_.k;
      j["n"] = code_.n;
      j["N"] = nullptr;
      j["T"] = nullptr;
      break;
    case GeneratorKind::hdq:
      j["q"] = bset_.q;
      j["k"] = 1;
      j["n"] = nullptr;
      j["N"] = nullptr;
      j["T"] = bset_.T();
      break;
    case GeneratorKind::composed:
      j["q"] = inner_->spec_.kind == GeneratorKind::hdq ? nlohmann::ordered_json(inner_->bset_.q)
                                                        : nlohmann::ordered_json(nullptr);
      j["k"] = outer_->k();
      j["n"] = outer_->n() > 0 ? nlohmann::ordered_json(outer_->n())
                               : nlohmann::ordered_json(nullptr);
      j["N"] = outer_->descriptor().N;
      j["T"] = inner_->spec_.D;
      break;
  }
  j["ell"] = spec_.ell;
  j["d_qubits"] = spec_.d_qubits;
  j["s"] = spec_.s;
  j["K"] = spec_.K;
  j["delta_claimed"] = spec_.delta_claimed;
  if (spec_.kind == GeneratorKind::hdq) {
    j["B"] = bset_.elements;
  } else {
    j["B"] = nullptr;
  }
  if (spec_.kind == GeneratorKind::binary_fingerprint) {
    j["code"] = {{"name", code_.name}, {"n", code_.n}, {"k", code_.k}, {"d", code_.d}};
  } else {
    j["code"] = nullptr;
  }
  if (spec_.kind == GeneratorKind::composed) {
    j["family"] = outer_->to_json();
    j["inner"] = inner_->to_json();
    j["side_condition_satisfied"] = side_condition_ok_;
  } else {
    j["family"] = nullptr;
  }
  return j;
}

int generator_qubits(const QuantumHashGenerator& g) { return g.spec().s; }

}  // namespace qhash
