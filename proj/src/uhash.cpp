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

#include "qhash/uhash.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qhash/rng.hpp"

namespace qhash {

namespace {

constexpr std::uint64_t kDomainLimit = std::uint64_t{1} << 62;

// q^k, or nullopt past 2^62.
std::optional<std::uint64_t> checked_pow(std::int64_t q, int k) {
  std::uint64_t acc = 1;
  for (int i = 0; i < k; ++i) {
    if (acc > kDomainLimit / static_cast<std::uint64_t>(q)) return std::nullopt;
    acc *= static_cast<std::uint64_t>(q);
  }
  return acc;
}

std::uint64_t domain_pow_or_throw(std::int64_t q, int k, const char* what) {
  auto v = checked_pow(q, k);
  if (!v) {
    throw std::invalid_argument(std::string(what) +
                                ": domain size q^k overflows the 2^62 guard");
  }
  return *v;
}

void require_domain_word(const Word& w, std::int64_t q, int k) {
  if (w.modulus() != q || static_cast<int>(w.size()) != k) {
    throw std::invalid_argument("word does not match family domain (expected k=" +
                                std::to_string(k) + " over F_" + std::to_string(q) + ")");
  }
}

}  // namespace

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("ratio must be nonnegative");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

std::string Ratio::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::linear: return "linear";
    case FamilyKind::freivalds: return "freivalds";
    case FamilyKind::rs: return "rs";
    case FamilyKind::code: return "code";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

const char* to_string(CensusMode mode) {
  return mode == CensusMode::exhaustive ? "exhaustive" : "sampled";
}

BlockCode simplex_code(int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("simplex code needs 1 <= m <= 20");
  BlockCode code;
  code.q = 2;
  code.n = (1 << m) - 1;
  code.k = m;
  code.d = 1 << (m - 1);
  code.name = "simplex";
  code.encode = [m](const Word& w) {
    require_domain_word(w, 2, m);
    std::vector<std::int64_t> out;
    out.reserve((1u << m) - 1);
    for (int a = 1; a < (1 << m); ++a) {
      std::int64_t bit = 0;
      for (int i = 0; i < m; ++i) {
        if (a >> i & 1) bit ^= w.value(i);
      }
      out.push_back(bit);
    }
    return out;
  };
  return code;
}

BlockCode repetition_code(int n, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("repetition code needs n >= 1");
  require_prime_modulus(q);
  BlockCode code;
  code.q = q;
  code.n = n;
  code.k = 1;
  code.d = n;
  code.name = "repetition";
  code.encode = [n, q](const Word& w) {
    require_domain_word(w, q, 1);
    return std::vector<std::int64_t>(static_cast<std::size_t>(n), w.value(0));
  };
  return code;
}

BlockCode rs_code(std::int64_t q, int k, int n,
                  std::optional<std::vector<std::int64_t>> points) {
  HashFamily family = HashFamily::reed_solomon(q, k, n, std::move(points));
  BlockCode code;
  code.q = q;
  code.n = n;
  code.k = k;
  code.d = n - (k - 1);
  code.name = "rs";
  code.encode = [family](const Word& w) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(family.n()));
    for (int i = 0; i < family.n(); ++i) {
      out.push_back(family.evaluate(static_cast<std::uint64_t>(i), w));
    }
    return out;
  };
  return code;
}

HashFamily HashFamily::linear(std::int64_t q, int k) {
  require_prime_modulus(q);
  if (k < 1) throw std::invalid_argument("linear family needs k >= 1");
  std::uint64_t qk = domain_pow_or_throw(q, k, "linear family");
  HashFamily f;
  f.desc_.kind = FamilyKind::linear;
  f.desc_.N = qk;          // one function per coefficient vector, zero included
  f.desc_.K = qk - 1;      // domain excludes the all-zero word
  f.desc_.M = static_cast<std::uint64_t>(q);
  f.desc_.epsilon_claimed = Ratio::of(1, q);
  f.q_ = q;
  f.k_ = k;
  return f;
}

HashFamily HashFamily::freivalds(int k, int c) {
  if (k < 2) throw std::invalid_argument("freivalds family needs k >= 2");
  if (c <= 1) throw std::invalid_argument("freivalds family needs c > 1");
  if (k > 62) throw std::invalid_argument("freivalds family needs k <= 62 (word read as int64)");
  auto M = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(c) * k * std::log(static_cast<double>(k))));
  if (M < 2) throw std::invalid_argument("freivalds range bound M < 2");
  HashFamily f;
  f.primes_ = primes_up_to(M);
  f.desc_.kind = FamilyKind::freivalds;
  f.desc_.N = f.primes_.size();
  f.desc_.K = std::uint64_t{1} << k;
  f.desc_.M = static_cast<std::uint64_t>(M);
  f.desc_.epsilon_claimed = Ratio::of(1, c);
  f.q_ = 2;
  f.k_ = k;
  f.c_ = c;
  return f;
}

HashFamily HashFamily::reed_solomon(std::int64_t q, int k, int n,
                                    std::optional<std::vector<std::int64_t>> points) {
  require_prime_modulus(q);
  if (k < 1 || k > n) throw std::invalid_argument("reed-solomon needs 1 <= k <= n");
  if (n > q) throw std::invalid_argument("reed-solomon needs n <= q");
  std::vector<std::int64_t> pts;
  if (points) {
    pts = std::move(*points);
    if (static_cast<int>(pts.size()) != n) {
      throw std::invalid_argument("reed-solomon needs exactly n evaluation points");
    }
    std::set<std::int64_t> seen;
    for (auto p : pts) {
      if (p < 0 || p >= q) throw std::invalid_argument("evaluation point outside F_q");
      if (!seen.insert(p).second) {
        throw std::invalid_argument("evaluation points must be distinct");
      }
    }
  } else {
    // first n nonzero field elements; n = q-1 gives the full F_q \ {0}
    if (n > q - 1) {
      throw std::invalid_argument(
          "default evaluation points are nonzero field elements; n = q needs "
          "explicit points");
    }
    pts.resize(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), std::int64_t{1});
  }
  HashFamily f;
  f.desc_.kind = FamilyKind::rs;
  f.desc_.N = static_cast<std::uint64_t>(n);
  f.desc_.K = domain_pow_or_throw(q, k, "reed-solomon family");
  f.desc_.M = static_cast<std::uint64_t>(q);
  f.desc_.epsilon_claimed = Ratio::of(k - 1, n);  // 1 - d/n with d = n-(k-1)
  f.q_ = q;
  f.k_ = k;
  f.n_ = n;
  f.points_ = std::move(pts);
  return f;
}

HashFamily HashFamily::from_code(BlockCode code) {
  require_prime_modulus(code.q);
  if (code.n < 1 || code.k < 1 || code.d < 0 || code.d > code.n) {
    throw std::invalid_argument("code parameters [n,k,d]_q out of range");
  }
  if (!code.encode) throw std::invalid_argument("code must be evaluable");
  HashFamily f;
  f.desc_.kind = FamilyKind::code;
  f.desc_.N = static_cast<std::uint64_t>(code.n);
  f.desc_.K = domain_pow_or_throw(code.q, code.k, "code family");
  f.desc_.M = static_cast<std::uint64_t>(code.q);
  f.desc_.epsilon_claimed = Ratio::of(code.n - code.d, code.n);
  f.q_ = code.q;
  f.k_ = code.k;
  f.n_ = code.n;
  f.code_ = std::move(code);
  return f;
}

std::int64_t HashFamily::evaluate(std::uint64_t fn_index, const Word& w) const {
  if (fn_index >= desc_.N) {
    throw std::invalid_argument("function index out of range");
  }
  switch (desc_.kind) {
    case FamilyKind::linear: {
      require_domain_word(w, q_, k_);
      // coefficient vector a = base-q digits of fn_index, w_0 digit first
      std::int64_t acc = 0;
      std::uint64_t rest = fn_index;
      for (int i = 0; i < k_; ++i) {
        auto a_i = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(q_));
        rest /= static_cast<std::uint64_t>(q_);
        acc = (acc + a_i * w.value(i)) % q_;
      }
      return acc;
    }
    case FamilyKind::freivalds: {
      require_domain_word(w, 2, k_);
      auto value = static_cast<std::int64_t>(w.to_index());
      return value % primes_[fn_index];
    }
    case FamilyKind::rs: {
      require_domain_word(w, q_, k_);
      // Horner on P_w(x) = w_0 + w_1 x + ... + w_{k-1} x^{k-1}
      std::int64_t x = points_[fn_index];
      std::int64_t acc = 0;
      for (int i = k_; i-- > 0;) {
        acc = (acc * x + w.value(i)) % q_;
      }
      return acc;
    }
    case FamilyKind::code:
      require_domain_word(w, q_, k_);
      return code_.encode(w)[fn_index];
    case FamilyKind::custom:
      break;
  }
  throw std::logic_error("unreachable family kind");
}

Word HashFamily::word_at(std::uint64_t index) const {
  if (index >= desc_.K) throw std::invalid_argument("domain index out of range");
  // the linear family's domain skips the all-zero word at integer 0
  std::uint64_t shifted = desc_.kind == FamilyKind::linear ? index + 1 : index;
  return Word::from_index(q_, k_, shifted);
}

nlohmann::ordered_json HashFamily::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(desc_.kind);
  if (desc_.kind == FamilyKind::freivalds) {
    j["q"] = nullptr;  // range {0..M-1} is not a field
  } else {
    j["q"] = q_;
  }
  j["k"] = k_;
  if (desc_.kind == FamilyKind::rs || desc_.kind == FamilyKind::code) {
    j["n"] = n_;
  } else {
    j["n"] = nullptr;
  }
  j["N"] = desc_.N;
  j["K"] = desc_.K;
  j["M"] = desc_.M;
  j["epsilon_claimed"] = desc_.epsilon_claimed.value();
  j["epsilon_claimed_ratio"] = desc_.epsilon_claimed.to_string();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  switch (desc_.kind) {
    case FamilyKind::rs:
      params["points"] = points_;
      break;
    case FamilyKind::freivalds:
      params["c"] = c_;
      params["primes"] = primes_;
      break;
    case FamilyKind::code:
      params["code_name"] = code_.name;
      params["d"] = code_.d;
      break;
    default:
      break;
  }
  j["params"] = params;
  return j;
}

namespace {

std::uint64_t pair_count_or_throw(std::uint64_t K, std::uint64_t N,
                                  std::uint64_t eval_cap) {
  if (K < 2) throw std::invalid_argument("census needs a domain with at least 2 words");
  unsigned __int128 pairs = static_cast<unsigned __int128>(K) * (K - 1) / 2;
  unsigned __int128 evals = pairs * N;
  if (evals > eval_cap) {
    std::string evals_str =
        evals <= static_cast<unsigned __int128>(UINT64_MAX)
            ? std::to_string(static_cast<std::uint64_t>(evals))
            : "more than 1.8e19";
    throw budget_error("exhaustive census needs " + evals_str +
                       " pair-function evaluations (cap " +
                       std::to_string(eval_cap) + "); use sampled mode");
  }
  return static_cast<std::uint64_t>(pairs);
}

std::uint64_t collisions(const HashFamily& family, const Word& w, const Word& w2) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < family.descriptor().N; ++i) {
    if (family.evaluate(i, w) == family.evaluate(i, w2)) ++count;
  }
  return count;
}

}  // namespace

EpsilonReport measure_epsilon_exhaustive(const HashFamily& family,
                                         std::uint64_t eval_cap) {
  const std::uint64_t K = family.domain_size();
  const std::uint64_t N = family.descriptor().N;
  EpsilonReport report;
  report.N = N;
  report.mode = CensusMode::exhaustive;
  report.pairs_evaluated = pair_count_or_throw(K, N, eval_cap);

  std::vector<Word> words;
  words.reserve(K);
  for (std::uint64_t u = 0; u < K; ++u) words.push_back(family.word_at(u));

  std::uint64_t best = 0;
  bool have = false;
  for (std::uint64_t u = 0; u < K; ++u) {
    for (std::uint64_t v = u + 1; v < K; ++v) {
      std::uint64_t count = collisions(family, words[u], words[v]);
      if (!have || count > best) {
        best = count;
        report.worst_w = words[u];
        report.worst_w_prime = words[v];
        have = true;
      }
    }
  }
  report.max_collisions = best;
  return report;
}

EpsilonReport measure_epsilon_sampled(const HashFamily& family,
                                      std::uint64_t pairs, std::uint64_t seed) {
  const std::uint64_t K = family.domain_size();
  if (K < 2) throw std::invalid_argument("census needs a domain with at least 2 words");
  if (pairs < 1) throw std::invalid_argument("sampled census needs pairs >= 1");
  EpsilonReport report;
  report.N = family.descriptor().N;
  report.mode = CensusMode::sampled;
  report.seed = seed;
  report.pairs_evaluated = pairs;

  std::uint64_t best = 0;
  bool have = false;
  for (std::uint64_t t = 0; t < pairs; ++t) {
    SplitMix64 rng(derive_seed(seed, t));
    std::uint64_t u = rng.next_below(K);
    std::uint64_t v = rng.next_below(K - 1);
    if (v >= u) ++v;
    Word wu = family.word_at(u);
    Word wv = family.word_at(v);
    std::uint64_t count = collisions(family, wu, wv);
    if (!have || count > best) {
      best = count;
      report.worst_w = wu;
      report.worst_w_prime = wv;
      have = true;
    }
  }
  report.max_collisions = best;
  return report;
}

}  // namespace qhash
