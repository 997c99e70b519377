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

#include "qhash/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace qhash {

namespace {

constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

std::int64_t mod_reduce(std::int64_t v, std::int64_t q) {
  std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void require_prime_modulus(std::int64_t q) {
  // Memoize the last verified modulus: elements of the same field are
  // constructed in bulk inside census loops.
  thread_local std::int64_t verified = 0;
  if (q == verified) return;
  if (q < 2 || q > kMaxModulus) {
    throw std::invalid_argument("field modulus must be in [2, 2^31): got " +
                                std::to_string(q));
  }
  if (!is_prime(q)) {
    throw std::invalid_argument(
        "field modulus must be prime (prime fields only): got " +
        std::to_string(q));
  }
  verified = q;
}

FieldElement::FieldElement(std::int64_t value, std::int64_t modulus)
    : value_(0), modulus_(modulus) {
  require_prime_modulus(modulus);
  value_ = mod_reduce(value, modulus);
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("field modulus mismatch: " +
                                std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
  }
}

}  // namespace

FieldElement fp_add(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return {a.value() + b.value(), a.modulus()};
}

FieldElement fp_sub(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return {a.value() - b.value(), a.modulus()};
}

FieldElement fp_mul(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  // values < 2^31, so the product fits in int64 without overflow
  return {a.value() * b.value(), a.modulus()};
}

FieldElement fp_inv(const FieldElement& a) {
  if (a.value() == 0) {
    throw std::invalid_argument("0 has no multiplicative inverse");
  }
  // extended Euclid on (a, q); q prime guarantees gcd = 1
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = a.modulus(), new_r = a.value();
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return {t, a.modulus()};
}

FieldElement fp_pow(const FieldElement& a, std::uint64_t e) {
  std::int64_t base = a.value();
  std::int64_t q = a.modulus();
  std::int64_t acc = 1 % q;  // 0^0 = 1 by convention
  while (e > 0) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return {acc, q};
}

std::vector<std::int64_t> primes_up_to(std::int64_t M) {
  std::vector<std::int64_t> out;
  if (M < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(M) + 1, false);
  for (std::int64_t p = 2; p * p <= M; ++p) {
    if (composite[p]) continue;
    for (std::int64_t m = p * p; m <= M; m += p) composite[m] = true;
  }
  for (std::int64_t n = 2; n <= M; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

std::int64_t next_prime(std::int64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

Word::Word(std::int64_t modulus, std::vector<std::int64_t> values)
    : modulus_(modulus), values_(std::move(values)) {
  require_prime_modulus(modulus_);
  if (values_.empty()) {
    throw std::invalid_argument("word length must be at least 1");
  }
  for (auto& v : values_) v = mod_reduce(v, modulus_);
}

Word::Word(const std::vector<FieldElement>& elems)
    : modulus_(elems.empty() ? 0 : elems.front().modulus()) {
  if (elems.empty()) {
    throw std::invalid_argument("word length must be at least 1");
  }
  values_.reserve(elems.size());
  for (const auto& e : elems) {
    if (e.modulus() != modulus_) {
      throw std::invalid_argument("word elements must share one modulus");
    }
    values_.push_back(e.value());
  }
}

Word Word::from_index(std::int64_t modulus, int k, std::uint64_t index) {
  require_prime_modulus(modulus);
  if (k < 1) throw std::invalid_argument("word length must be at least 1");
  std::vector<std::int64_t> vals(static_cast<std::size_t>(k));
  std::uint64_t rest = index;
  for (int i = 0; i < k; ++i) {
    vals[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(modulus));
    rest /= static_cast<std::uint64_t>(modulus);
  }
  if (rest != 0) {
    throw std::invalid_argument("word index " + std::to_string(index) +
                                " out of range for q^k");
  }
  return {modulus, std::move(vals)};
}

std::uint64_t Word::to_index() const {
  unsigned __int128 acc = 0;
  for (std::size_t i = values_.size(); i-- > 0;) {
    acc = acc * static_cast<unsigned __int128>(modulus_) +
          static_cast<unsigned __int128>(values_[i]);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw std::overflow_error("word value does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  return os.str();
}

}  // namespace qhash
