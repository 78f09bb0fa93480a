// Copyright 2026 The regeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regeq/tooling.hpp"

#include <cstdio>
#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <string>

#include "json.hpp"
#include "regeq/random.hpp"

namespace regeq {

Dfa random_dfa(std::size_t states, const Alphabet& alphabet, double accept_prob,
               std::uint64_t seed) {
  if (states == 0) throw Error("random_dfa: need at least one state");
  SplitMix64 rng(seed);
  Dfa m;
  m.alphabet = alphabet;
  m.start = "q0";
  for (std::size_t i = 0; i < states; ++i) m.states.push_back("q" + std::to_string(i));
  for (const auto& q : m.states) {
    if (rng.unit() < accept_prob) m.accept.insert(q);
    for (Symbol x : alphabet.symbols()) m.delta[{q, x}] = m.states[rng.below(states)];
  }
  return m;
}

void BenchConfig::validate() const {
  if (cases < 1 || states < 1 || alphabet_size < 1) {
    throw Error("bench: counts must be at least 1");
  }
  if (alphabet_size > 26) throw Error("bench: at most 26 symbols");
  if (!(accept_prob > 0.0 && accept_prob < 1.0)) {
    throw Error("bench: accept probability must lie strictly between 0 and 1");
  }
}

namespace {

Alphabet bench_alphabet(std::size_t n) {
  // x, y, z first, then the rest of a..w.
  std::string symbols = "xyzabcdefghijklmnopqrstuvw";
  return Alphabet(symbols.substr(0, n));
}

std::vector<std::size_t> run_case(const BenchConfig& cfg, std::size_t i) {
  Dfa m = random_dfa(cfg.states, bench_alphabet(cfg.alphabet_size),
                     cfg.accept_prob, cfg.seed + i);
  std::set<Word> accepted;
  for (const Word& w : lang_upto(Regex::star(Regex::alt_of([&] {
                                   std::vector<Regex> syms;
                                   for (Symbol x : m.alphabet.symbols()) {
                                     syms.push_back(Regex::sym(x));
                                   }
                                   return syms;
                                 }())),
                                 cfg.max_oracle_len)) {
    if (dfa_accepts(m, w)) accepted.insert(w);
  }
  std::vector<Strategy> all{Strategy::Default};
  all.insert(all.end(), cfg.strategies.begin(), cfg.strategies.end());
  std::vector<std::size_t> widths;
  for (Strategy s : all) {
    Regex r = dfa_to_regex(m, s);
    if (lang_upto(r, cfg.max_oracle_len) != accepted) {
      throw Error("bench: case " + std::to_string(i) + " under " +
                  strategy_name(s) + " disagrees with the automaton");
    }
    widths.push_back(alphabetic_width(r));
  }
  return widths;
}

}  // namespace

BenchReport bench_compare(const BenchConfig& cfg) {
  cfg.validate();
  BenchReport out;
  out.seed = cfg.seed;
  out.strategies = cfg.strategies;
  out.widths.resize(cfg.cases);
  std::vector<std::exception_ptr> errors(cfg.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cfg.cases;) {
      try {
        out.widths[i] = run_case(cfg, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(n, cfg.cases); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  out.mean_ratio.assign(cfg.strategies.size(), 0.0);
  for (const auto& w : out.widths) {
    for (std::size_t k = 0; k < cfg.strategies.size(); ++k) {
      double d = static_cast<double>(w[0]);
      double s = static_cast<double>(w[k + 1]);
      // Width 0 only arises for empty-language results.
      out.mean_ratio[k] += d == 0 ? (s == 0 ? 1.0 : s) : s / d;
    }
  }
  for (auto& r : out.mean_ratio) r /= static_cast<double>(out.widths.size());
  return out;
}

std::string text_of_report(const BenchReport& r) {
  std::string out = "seed " + std::to_string(r.seed) + ", " +
                    std::to_string(r.widths.size()) + " cases\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-10s %12s\n", "strategy", "mean ratio");
  out += buf;
  for (std::size_t k = 0; k < r.strategies.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%-10s %12.4f\n",
                  strategy_name(r.strategies[k]).c_str(), r.mean_ratio[k]);
    out += buf;
  }
  return out;
}

std::string json_of_report(const BenchReport& r) {
  nlohmann::json doc;
  doc["seed"] = r.seed;
  std::vector<std::string> names;
  for (Strategy s : r.strategies) names.push_back(strategy_name(s));
  doc["strategies"] = names;
  doc["mean_ratio"] = r.mean_ratio;
  doc["widths"] = r.widths;
  return doc.dump();
}

}  // namespace regeq
