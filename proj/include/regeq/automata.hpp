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

#ifndef REGEQ_AUTOMATA_HPP_
#define REGEQ_AUTOMATA_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regeq/equations.hpp"
#include "regeq/regex.hpp"

namespace regeq {

// Complete deterministic automaton with named states.
struct Dfa {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::string start;
  std::set<std::string> accept;
  std::map<std::pair<std::string, Symbol>, std::string> delta;

  // Throws Error unless states are distinct, start and accepting states
  // are states, and delta is total over states x alphabet.
  void validate() const;
  const std::string& next(const std::string& q, Symbol x) const;
};

struct NfaEdge {
  std::string from;
  // nullopt marks an eps transition.
  std::optional<Symbol> symbol;
  std::string to;
};

struct Nfa {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::string start;
  std::set<std::string> accept;
  std::vector<NfaEdge> delta;

  void validate() const;
};

Nfa nfa_of_dfa(const Dfa& m);

// JSON documents of the form
//   {"states": [...], "alphabet": ["x", "y"], "start": "q0",
//    "accept": [...], "delta": [["q0", "x", "q1"], ...]}
// An NFA row may use "" for eps and rows may repeat. Errors name the
// offending row.
Dfa dfa_of_json(std::string_view text);
Nfa nfa_of_json(std::string_view text);
std::string json_of_dfa(const Dfa& m);

// Throws Error for a symbol outside the alphabet.
bool dfa_accepts(const Dfa& m, const Word& w);

// Subset simulation with eps closure. Throws Error for a symbol outside the
// alphabet.
bool nfa_accepts(const Nfa& m, const Word& w);

// Drops states not reachable from the start state.
Dfa prune(const Dfa& m);

// Equation variable for each state: the start state is R1, the others
// follow in sorted order.
std::map<std::string, std::string> state_vars(const std::vector<std::string>& states,
                                              const std::string& start);

// One equation per state: self terms first, then x.R_{delta(q,x)} in
// alphabet order, then eps for accepting and phi for other states.
EquationSystem characteristic_equations(const Dfa& m);
// One summand per transition, eps.R for eps transitions.
EquationSystem nfa_characteristic_equations(const Nfa& m);

Regex dfa_to_regex(const Dfa& m, Strategy strategy = Strategy::Default);
Regex nfa_to_regex(const Nfa& m, Strategy strategy = Strategy::Default);

}  // namespace regeq

#endif  // REGEQ_AUTOMATA_HPP_
