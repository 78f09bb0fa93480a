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

#ifndef REGEQ_TOOLING_HPP_
#define REGEQ_TOOLING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "regeq/automata.hpp"
#include "regeq/equations.hpp"

namespace regeq {

// States q0..q{n-1} with start q0. Per state, in order: acceptance with
// probability accept_prob, then one uniform target per symbol.
Dfa random_dfa(std::size_t states, const Alphabet& alphabet, double accept_prob,
               std::uint64_t seed);

struct BenchConfig {
  std::size_t cases = 200;
  std::size_t states = 5;
  std::size_t alphabet_size = 2;
  double accept_prob = 0.5;
  std::uint64_t seed = 1;
  std::vector<Strategy> strategies{Strategy::DelgadoMorais, Strategy::CycleCount};
  std::size_t max_oracle_len = 6;

  // Throws Error when a field is out of range.
  void validate() const;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::vector<Strategy> strategies;
  // Mean of width(strategy) / width(default), aligned with `strategies`.
  std::vector<double> mean_ratio;
  // Per case: the default width followed by one width per strategy.
  std::vector<std::vector<std::size_t>> widths;
};

// Case i uses random_dfa with seed cfg.seed + i. Every produced regex is
// checked against the automaton on all words up to cfg.max_oracle_len;
// a mismatch throws Error.
BenchReport bench_compare(const BenchConfig& cfg);

std::string text_of_report(const BenchReport& r);
std::string json_of_report(const BenchReport& r);

}  // namespace regeq

#endif  // REGEQ_TOOLING_HPP_
