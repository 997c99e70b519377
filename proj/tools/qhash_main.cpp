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

// Command-line front end: build hash families and quantum hash generators,
// measure resistance, search B-sets, evaluate bounds, run SWAP-test
// experiments, and sweep parameter grids. JSON is the canonical output;
// text mode renders the same object; CSV is for sweeps.
//
// Exit codes: 0 success, 1 usage/validation error, 2 search target not
// achieved, 3 enumeration budget exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhash/analysis.hpp"
#include "qhash/qgen.hpp"
#include "qhash/qstate.hpp"
#include "qhash/uhash.hpp"

using json = nlohmann::ordered_json;
using namespace qhash;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotAchieved = 2;
constexpr int kExitBudget = 3;

// ---------------------------------------------------------------------------
// output

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    }
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit_raw(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << body;
  }
}

void emit(const json& j, const std::string& format, const std::string& out_path) {
  std::ostringstream body;
  if (format == "json") {
    body << j.dump(2) << "\n";
  } else if (format == "text") {
    render_text(j, "", body);
  } else {
    throw std::invalid_argument("--format " + format + " is not available for this command");
  }
  emit_raw(body.str(), out_path);
}

// ---------------------------------------------------------------------------
// parsing

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + csv);
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// words are comma-separated field elements ("2,1") or 0/1 strings for q=2,
// w_0 first in both spellings
Word parse_word(const std::string& text, std::int64_t q, int k) {
  std::vector<std::int64_t> values;
  if (text.find(',') != std::string::npos) {
    values = parse_int_list(text);
  } else if (q == 2 && !text.empty() &&
             text.find_first_not_of("01") == std::string::npos) {
    for (char c : text) values.push_back(c - '0');
  } else {
    values.push_back(std::stoll(text));
  }
  if (static_cast<int>(values.size()) != k) {
    throw std::invalid_argument("word '" + text + "' has " + std::to_string(values.size()) +
                                " elements; domain expects k = " + std::to_string(k));
  }
  for (auto v : values) {
    if (v < 0 || v >= q) {
      throw std::invalid_argument("word element " + std::to_string(v) + " outside F_" +
                                  std::to_string(q));
    }
  }
  return {q, values};
}

// ---------------------------------------------------------------------------
// generator construction shared by generator/resist/swaptest

struct GeneratorOptions {
  std::string kind;              // fingerprint | hdq | composed
  std::string code = "simplex";  // fingerprint code: simplex | repetition | identity
  int m = 4;                     // simplex message bits
  std::int64_t q = 0;
  int k = 2;
  int n = 0;
  int c = 2;
  std::string family;      // composed outer: linear | rs | freivalds
  std::string points_csv;  // rs evaluation points
  std::string b_csv;       // explicit B elements
  double bdelta = std::numeric_limits<double>::quiet_NaN();
  int T = 0;  // 0 = derive from bdelta via the T formula
  std::uint64_t bseed = 0;
  int brestarts = 50;
  bool bexhaustive = false;
  bool bgreedy = false;
  int workers = 1;
};

void add_generator_flags(CLI::App* cmd, GeneratorOptions& opt) {
  cmd->add_option("--kind", opt.kind, "generator kind: fingerprint | hdq | composed")
      ->required();
  cmd->add_option("--code", opt.code, "fingerprint code: simplex | repetition | identity");
  cmd->add_option("--m", opt.m, "simplex message bits (code length 2^m - 1)");
  cmd->add_option("--q", opt.q, "field modulus (prime)");
  cmd->add_option("--k", opt.k, "word length / code dimension");
  cmd->add_option("--n", opt.n, "evaluation point count / code length");
  cmd->add_option("--c", opt.c, "freivalds constant c > 1");
  cmd->add_option("--family", opt.family, "composed outer family: linear | rs | freivalds");
  cmd->add_option("--points", opt.points_csv, "rs evaluation points (comma-separated)");
  cmd->add_option("--B", opt.b_csv, "explicit B elements (comma-separated)");
  cmd->add_option("--bdelta", opt.bdelta, "target resistance for the B search");
  cmd->add_option("--T", opt.T, "B size (default: T formula from --bdelta, capped at q)");
  cmd->add_option("--bseed", opt.bseed, "seed for the B search");
  cmd->add_option("--brestarts", opt.brestarts, "restarts for the B search");
  cmd->add_flag("--bexhaustive", opt.bexhaustive, "enumerate all size-T subsets for B");
  cmd->add_flag("--bgreedy", opt.bgreedy, "polish the searched B with greedy swaps");
  cmd->add_option("--workers", opt.workers, "worker threads (results are worker-independent)");
}

BSet resolve_bset(std::int64_t q, const GeneratorOptions& opt) {
  if (!opt.b_csv.empty()) return {q, parse_int_list(opt.b_csv)};
  int T = opt.T;
  if (T == 0) {
    if (std::isnan(opt.bdelta)) {
      throw std::invalid_argument("hdq needs --B, or --T, or --bdelta to derive T");
    }
    const std::int64_t raw = sufficient_bset_size(q, opt.bdelta);
    T = static_cast<int>(std::min<std::int64_t>(raw, q));
    if (raw > q) {
      std::cerr << "warning: T formula gives " << raw << " > q; capping T at " << q
                << " (B is a subset of F_q)\n";
    }
  }
  if (opt.bexhaustive) {
    auto result = search_bset_exhaustive(
        q, T, std::isnan(opt.bdelta) ? std::nullopt : std::optional<double>(opt.bdelta));
    return result.bset;
  }
  const double target = std::isnan(opt.bdelta) ? -1.0 : opt.bdelta;  // -1: keep best of all
  auto result = search_bset(q, target, T, opt.brestarts, opt.bseed, opt.bgreedy, opt.workers);
  return result.bset;
}

QuantumHashGenerator build_generator(const GeneratorOptions& opt) {
  if (opt.kind == "fingerprint") {
    if (opt.code == "simplex") {
      return QuantumHashGenerator::binary_fingerprint(simplex_code(opt.m));
    }
    if (opt.code == "repetition") {
      if (opt.n < 1) throw std::invalid_argument("repetition code needs --n >= 1");
      return QuantumHashGenerator::binary_fingerprint(repetition_code(opt.n, 2));
    }
    if (opt.code == "identity") {
      BlockCode identity;
      identity.q = 2;
      identity.n = 1;
      identity.k = 1;
      identity.d = 1;
      identity.name = "identity";
      identity.encode = [](const Word& w) { return std::vector<std::int64_t>{w.value(0)}; };
      return QuantumHashGenerator::binary_fingerprint(identity);
    }
    throw std::invalid_argument("unknown fingerprint code '" + opt.code + "'");
  }
  if (opt.kind == "hdq") {
    if (opt.q == 0) throw std::invalid_argument("hdq needs --q");
    return QuantumHashGenerator::hdq(resolve_bset(opt.q, opt));
  }
  if (opt.kind == "composed") {
    HashFamily outer = [&] {
      if (opt.family == "linear") return HashFamily::linear(opt.q, opt.k);
      if (opt.family == "rs") {
        if (opt.n < 1) throw std::invalid_argument("rs family needs --n");
        std::optional<std::vector<std::int64_t>> points;
        if (!opt.points_csv.empty()) points = parse_int_list(opt.points_csv);
        return HashFamily::reed_solomon(opt.q, opt.k, opt.n, std::move(points));
      }
      if (opt.family == "freivalds") return HashFamily::freivalds(opt.k, opt.c);
      throw std::invalid_argument("composed needs --family linear | rs | freivalds");
    }();
    std::int64_t inner_q = opt.q;
    if (outer.descriptor().kind == FamilyKind::freivalds) {
      // map the {0..M-1} range into F_q for the smallest prime q in [M, 2M]
      inner_q = next_prime(static_cast<std::int64_t>(outer.descriptor().M));
    }
    auto g = QuantumHashGenerator::compose(
        outer, QuantumHashGenerator::hdq(resolve_bset(inner_q, opt)));
    if (!g.side_condition_satisfied()) {
      std::cerr << "warning: composition side condition log2 K > log2 N + log2 T + ell "
                   "is violated (construction is still well-defined)\n";
    }
    return g;
  }
  throw std::invalid_argument("unknown generator kind '" + opt.kind +
                              "' (fingerprint | hdq | composed)");
}

// domain parameters (q, k) a CLI word must match
std::pair<std::int64_t, int> generator_domain(const QuantumHashGenerator& g) {
  switch (g.kind()) {
    case GeneratorKind::binary_fingerprint: return {2, g.code().k};
    case GeneratorKind::hdq: return {g.bset().q, 1};
    case GeneratorKind::composed: return {g.outer_family().q(), g.outer_family().k()};
  }
  throw std::logic_error("unreachable");
}

ResistanceMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return ResistanceMode::exhaustive;
  if (mode == "sampled") return ResistanceMode::sampled;
  if (mode == "difference") return ResistanceMode::difference;
  throw std::invalid_argument("unknown mode '" + mode +
                              "' (exhaustive | sampled | difference)");
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_family(const std::string& kind, std::int64_t q, int k, int n, int c,
               const std::string& points_csv, const std::string& measure,
               std::uint64_t pairs, std::uint64_t seed, const std::string& format,
               const std::string& out) {
  HashFamily family = [&] {
    if (kind == "linear") return HashFamily::linear(q, k);
    if (kind == "freivalds") return HashFamily::freivalds(k, c);
    if (kind == "rs") {
      std::optional<std::vector<std::int64_t>> points;
      if (!points_csv.empty()) points = parse_int_list(points_csv);
      return HashFamily::reed_solomon(q, k, n, std::move(points));
    }
    throw std::invalid_argument("unknown family kind '" + kind +
                                "' (linear | freivalds | rs)");
  }();
  json j = family.to_json();
  if (!measure.empty()) {
    EpsilonReport report = [&] {
      if (measure == "exhaustive") return measure_epsilon_exhaustive(family);
      if (measure == "sampled") return measure_epsilon_sampled(family, pairs, seed);
      throw std::invalid_argument("unknown census mode '" + measure +
                                  "' (exhaustive | sampled)");
    }();
    json m;
    m["epsilon_measured"] = report.epsilon();
    m["epsilon_measured_ratio"] = report.epsilon_ratio().to_string();
    m["max_collisions"] = report.max_collisions;
    m["worst_pair"] = {{"w", report.worst_w.values()},
                       {"w_prime", report.worst_w_prime.values()}};
    m["pairs_evaluated"] = report.pairs_evaluated;
    m["mode"] = to_string(report.mode);
    m["seed"] = report.seed;
    j["measured"] = m;
  }
  emit(j, format, out);
  return kExitOk;
}

int cmd_generator(const GeneratorOptions& opt, const std::string& state_word,
                  const std::string& format, const std::string& out) {
  auto g = build_generator(opt);
  if (!state_word.empty()) {
    auto [q, k] = generator_domain(g);
    emit_raw(format_nonzero(g.state(parse_word(state_word, q, k))), out);
    return kExitOk;
  }
  emit(g.to_json(), format, out);
  return kExitOk;
}

int cmd_resist(const GeneratorOptions& opt, const std::string& mode, std::uint64_t budget,
               std::uint64_t seed, const std::string& format, const std::string& out) {
  auto g = build_generator(opt);
  auto report = measure_resistance(g, parse_mode(mode), budget, seed, opt.workers);
  json j;
  j["generator"] = g.to_json();
  j.update(to_json(report));
  emit(j, format, out);
  return kExitOk;
}

int cmd_bsearch(std::int64_t q, double delta, int T, int restarts, std::uint64_t seed,
                bool exhaustive, bool greedy, int workers, const std::string& format,
                const std::string& out) {
  require_prime_modulus(q);
  bool capped = false;
  if (T == 0) {
    const std::int64_t raw = sufficient_bset_size(q, delta);
    T = static_cast<int>(std::min<std::int64_t>(raw, q));
    capped = raw > q;
    if (capped) {
      std::cerr << "warning: T formula gives " << raw << " > q; capping T at " << q << "\n";
    }
  }
  BSearchResult result = exhaustive
                             ? search_bset_exhaustive(q, T, delta)
                             : search_bset(q, delta, T, restarts, seed, greedy, workers);
  result.t_capped = capped;
  emit(to_json(result), format, out);
  return result.achieved ? kExitOk : kExitNotAchieved;
}

int cmd_bounds(std::uint64_t K, double log2K, double delta, double epsilon, std::int64_t q,
               const std::string& format, const std::string& out) {
  if (K == 0 && log2K == 0.0) throw std::invalid_argument("bounds needs --K or --log2K");
  const double log2_domain = K != 0 ? std::log2(static_cast<double>(K)) : log2K;
  json j;
  if (K != 0) {
    j["K"] = K;
  } else {
    j["log2_K"] = log2K;
  }
  j["delta"] = delta;
  j["s_lower_bound"] = qubit_lower_bound_log2(log2_domain, delta);
  if (q != 0) j["sufficient_bset_size"] = sufficient_bset_size(q, delta);
  if (!std::isnan(epsilon)) j["delta_bound"] = theoretical_delta(epsilon, delta);
  emit(j, format, out);
  return kExitOk;
}

int cmd_swaptest(const GeneratorOptions& opt, const std::string& word,
                 const std::string& word2, std::uint64_t shots, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
  auto g = build_generator(opt);
  auto [q, k] = generator_domain(g);
  Word w = parse_word(word, q, k);
  Word w2 = parse_word(word2, q, k);
  auto a = g.state(w);
  auto b = g.state(w2);
  json j;
  j["generator"] = g.to_json();
  j["w"] = w.values();
  j["w_prime"] = w2.values();
  j["overlap_abs"] = std::abs(inner_product(a, b));
  j["exact_p"] = swap_test_accept_prob(a, b);
  j["shots"] = shots;
  j["seed"] = seed;
  j["frequency"] = swap_test_sample(a, b, shots, seed);
  emit(j, format, out);
  return kExitOk;
}

int cmd_sweep(const std::string& q_csv, int k, int n, const std::string& delta_csv,
              const std::string& seeds_csv, int restarts, std::uint64_t budget, int workers,
              const std::string& format, const std::string& out) {
  const auto qs = parse_int_list(q_csv);
  const auto deltas = parse_double_list(delta_csv);
  const auto seeds = parse_int_list(seeds_csv);

  std::vector<SweepRow> rows;
  for (std::int64_t q : qs) {
    require_prime_modulus(q);
    const int n_q = n > 0 ? n : static_cast<int>(q) - 1;
    for (double delta : deltas) {
      for (std::int64_t seed_raw : seeds) {
        const auto seed = static_cast<std::uint64_t>(seed_raw);
        const std::int64_t raw_T = sufficient_bset_size(q, delta);
        const int T = static_cast<int>(std::min<std::int64_t>(raw_T, q));
        auto search = search_bset(q, delta, T, restarts, seed, false, workers);
        auto g = QuantumHashGenerator::compose(HashFamily::reed_solomon(q, k, n_q),
                                               QuantumHashGenerator::hdq(search.bset));
        const std::uint64_t K = g.domain_size();
        const bool fits = static_cast<unsigned __int128>(K) * (K - 1) / 2 <= budget;
        auto report = measure_resistance(
            g, fits ? ResistanceMode::exhaustive : ResistanceMode::sampled, budget, seed,
            workers);
        rows.push_back(SweepRow{q, k, n_q, delta, T, seed, report.delta_measured,
                                report.delta_bound, report.s_qubits, report.s_lower_bound});
      }
    }
  }

  if (format == "csv") {
    std::ostringstream body;
    body << sweep_csv_header() << "\n";
    for (const auto& row : rows) body << to_csv_row(row) << "\n";
    emit_raw(body.str(), out);
  } else {
    json j = json::array();
    for (const auto& row : rows) j.push_back(to_json(row));
    emit(j, format, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and desk-scale verification of quantum hash functions"};
  app.require_subcommand(1);

  std::string format;
  std::string out;
  app.add_option("--format", format, "output format: json | text | csv (sweep only)");
  app.add_option("--out", out, "write output to this path instead of stdout");

  // family
  auto* family = app.add_subcommand("family", "build a classical hash family descriptor");
  std::string family_kind;
  std::int64_t family_q = 0;
  int family_k = 2, family_n = 0, family_c = 2;
  std::string family_points;
  std::string family_measure;
  std::uint64_t family_pairs = 1000, family_seed = 0;
  family->add_option("--kind", family_kind, "linear | freivalds | rs")->required();
  family->add_option("--q", family_q, "field modulus (prime)");
  family->add_option("--k", family_k, "word length");
  family->add_option("--n", family_n, "rs evaluation point count");
  family->add_option("--c", family_c, "freivalds constant");
  family->add_option("--points", family_points, "rs evaluation points (comma-separated)");
  family->add_option("--measure", family_measure,
                     "append a collision census: exhaustive | sampled");
  family->add_option("--pairs", family_pairs, "pair count for the sampled census")
      ->capture_default_str();
  family->add_option("--seed", family_seed, "seed for the sampled census")
      ->capture_default_str();

  // generator
  auto* generator =
      app.add_subcommand("generator", "build a quantum hash generator descriptor");
  GeneratorOptions gen_opt;
  add_generator_flags(generator, gen_opt);
  std::string gen_state;
  generator->add_option("--state", gen_state,
                        "print the state of this word as index:amplitude pairs");

  // resist
  auto* resist = app.add_subcommand("resist", "measure generator resistance");
  GeneratorOptions resist_opt;
  add_generator_flags(resist, resist_opt);
  std::string resist_mode = "exhaustive";
  std::uint64_t resist_budget = 1'000'000;
  std::uint64_t resist_seed = 0;
  resist->add_option("--mode", resist_mode, "exhaustive | sampled | difference")
      ->capture_default_str();
  resist->add_option("--budget", resist_budget, "pair budget")->capture_default_str();
  resist->add_option("--seed", resist_seed, "seed for sampled mode")->capture_default_str();

  // bsearch
  auto* bsearch =
      app.add_subcommand("bsearch", "search for a B-set meeting a resistance target");
  std::int64_t bs_q = 0;
  double bs_delta = 0.0;
  int bs_T = 0, bs_restarts = 50, bs_workers = 1;
  std::uint64_t bs_seed = 0;
  bool bs_exhaustive = false, bs_greedy = false;
  bsearch->add_option("--q", bs_q, "field modulus (prime)")->required();
  bsearch->add_option("--delta", bs_delta, "target resistance")->required();
  bsearch->add_option("--T", bs_T, "B size (default: T formula, capped at q)");
  bsearch->add_option("--restarts", bs_restarts, "random restarts")->capture_default_str();
  bsearch->add_option("--seed", bs_seed, "search seed")->capture_default_str();
  bsearch->add_flag("--exhaustive", bs_exhaustive, "enumerate all size-T subsets");
  bsearch->add_flag("--greedy", bs_greedy, "polish the best B with greedy swaps");
  bsearch->add_option("--workers", bs_workers, "worker threads");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate qubit and resistance bounds");
  std::uint64_t bounds_K = 0;
  double bounds_log2K = 0.0, bounds_delta = 0.0;
  double bounds_epsilon = std::numeric_limits<double>::quiet_NaN();
  std::int64_t bounds_q = 0;
  bounds->add_option("--K", bounds_K, "domain size");
  bounds->add_option("--log2K", bounds_log2K, "log2 of the domain size (for huge domains)");
  bounds->add_option("--delta", bounds_delta, "resistance")->required();
  bounds->add_option("--epsilon", bounds_epsilon, "outer family epsilon (adds delta_bound)");
  bounds->add_option("--q", bounds_q, "field modulus (adds the T formula value)");

  // swaptest
  auto* swaptest = app.add_subcommand("swaptest", "SWAP-test statistics for a word pair");
  GeneratorOptions swap_opt;
  add_generator_flags(swaptest, swap_opt);
  std::string swap_word, swap_word2;
  std::uint64_t swap_shots = 100'000, swap_seed = 0;
  swaptest->add_option("--word", swap_word, "first word")->required();
  swaptest->add_option("--word2", swap_word2, "second word")->required();
  swaptest->add_option("--shots", swap_shots, "sample count")->capture_default_str();
  swaptest->add_option("--seed", swap_seed, "sampling seed")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "rs-composed-with-hdq parameter sweep");
  std::string sweep_q, sweep_delta, sweep_seeds = "0";
  int sweep_k = 2, sweep_n = 0, sweep_restarts = 20, sweep_workers = 1;
  std::uint64_t sweep_budget = 2'000;
  sweep->add_option("--q", sweep_q, "field moduli (comma-separated primes)")->required();
  sweep->add_option("--k", sweep_k, "word length")->capture_default_str();
  sweep->add_option("--n", sweep_n, "evaluation point count (default q-1)");
  sweep->add_option("--delta", sweep_delta, "target resistances (comma-separated)")
      ->required();
  sweep->add_option("--seeds", sweep_seeds, "seeds (comma-separated)")
      ->capture_default_str();
  sweep->add_option("--restarts", sweep_restarts, "B-search restarts")
      ->capture_default_str();
  sweep->add_option("--budget", sweep_budget, "pair budget per measurement")
      ->capture_default_str();
  sweep->add_option("--workers", sweep_workers, "worker threads");

  // --format/--out may be spelled before or after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (format.empty()) format = sweep->parsed() ? "csv" : "json";

  try {
    if (family->parsed()) {
      return cmd_family(family_kind, family_q, family_k, family_n, family_c, family_points,
                        family_measure, family_pairs, family_seed, format, out);
    }
    if (generator->parsed()) return cmd_generator(gen_opt, gen_state, format, out);
    if (resist->parsed()) {
      return cmd_resist(resist_opt, resist_mode, resist_budget, resist_seed, format, out);
    }
    if (bsearch->parsed()) {
      return cmd_bsearch(bs_q, bs_delta, bs_T, bs_restarts, bs_seed, bs_exhaustive,
                         bs_greedy, bs_workers, format, out);
    }
    if (bounds->parsed()) {
      return cmd_bounds(bounds_K, bounds_log2K, bounds_delta, bounds_epsilon, bounds_q,
                        format, out);
    }
    if (swaptest->parsed()) {
      return cmd_swaptest(swap_opt, swap_word, swap_word2, swap_shots, swap_seed, format,
                          out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_q, sweep_k, sweep_n, sweep_delta, sweep_seeds, sweep_restarts,
                       sweep_budget, sweep_workers, format, out);
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
