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

#include "regeq/automata.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "json.hpp"

namespace regeq {

namespace {

void check_states(const std::vector<std::string>& states,
                  const std::string& start,
                  const std::set<std::string>& accept) {
  std::set<std::string> seen;
  for (const auto& q : states) {
    if (q.empty()) throw Error("automaton: empty state name");
    if (!seen.insert(q).second) throw Error("automaton: duplicate state " + q);
  }
  if (!seen.count(start)) throw Error("automaton: start state " + start + " is not a state");
  for (const auto& q : accept) {
    if (!seen.count(q)) throw Error("automaton: accepting state " + q + " is not a state");
  }
}

}  // namespace

void Dfa::validate() const {
  check_states(states, start, accept);
  if (alphabet.empty()) throw Error("dfa: empty alphabet");
  std::set<std::string> names(states.begin(), states.end());
  for (const auto& [key, to] : delta) {
    if (!names.count(key.first) || !names.count(to) ||
        !alphabet.contains(key.second)) {
      throw Error("dfa: transition (" + key.first + ", " + key.second +
                  ", " + to + ") mentions an unknown state or symbol");
    }
  }
  for (const auto& q : states) {
    for (Symbol x : alphabet.symbols()) {
      if (!delta.count({q, x})) {
        throw Error("dfa: no transition from " + q + " on " + x);
      }
    }
  }
}

const std::string& Dfa::next(const std::string& q, Symbol x) const {
  auto it = delta.find({q, x});
  if (it == delta.end()) throw Error("dfa: no transition from " + q + " on " + x);
  return it->second;
}

void Nfa::validate() const {
  check_states(states, start, accept);
  std::set<std::string> names(states.begin(), states.end());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& e = delta[i];
    if (!names.count(e.from) || !names.count(e.to) ||
        (e.symbol && !alphabet.contains(*e.symbol))) {
      throw Error("nfa: transition " + std::to_string(i) +
                  " mentions an unknown state or symbol");
    }
  }
}

Nfa nfa_of_dfa(const Dfa& m) {
  Nfa n{m.states, m.alphabet, m.start, m.accept, {}};
  for (const auto& q : m.states) {
    for (Symbol x : m.alphabet.symbols()) n.delta.push_back({q, x, m.next(q, x)});
  }
  return n;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

struct Common {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::string start;
  std::set<std::string> accept;
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
};

Common read_common(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("automaton: invalid JSON: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
  Common c;
  try {
    if (!doc.is_object()) throw Error("automaton: document is not an object");
    for (const char* key : {"states", "alphabet", "start", "accept", "delta"}) {
      if (!doc.contains(key)) throw Error(std::string("automaton: missing \"") + key + "\"");
    }
    c.states = doc.at("states").get<std::vector<std::string>>();
    std::string symbols;
    for (const auto& s : doc.at("alphabet").get<std::vector<std::string>>()) {
      if (s.size() != 1 || !is_symbol_char(s[0])) {
        throw Error("automaton: invalid symbol \"" + s + "\"");
      }
      symbols += s;
    }
    c.alphabet = Alphabet(symbols);
    c.start = doc.at("start").get<std::string>();
    for (const auto& q : doc.at("accept").get<std::vector<std::string>>()) {
      c.accept.insert(q);
    }
    const auto& delta = doc.at("delta");
    if (!delta.is_array()) throw Error("automaton: \"delta\" is not an array");
    for (std::size_t i = 0; i < delta.size(); ++i) {
      const auto& row = delta[i];
      if (!row.is_array() || row.size() != 3 ||
          !std::all_of(row.begin(), row.end(),
                       [](const json& v) { return v.is_string(); })) {
        throw Error("automaton: delta row " + std::to_string(i) +
                    " is not [state, symbol, state]");
      }
      c.rows.emplace_back(row[0].get<std::string>(), row[1].get<std::string>(),
                          row[2].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw Error(std::string("automaton: ") + e.what());
  }
  return c;
}

std::string row_text(std::size_t i, const std::tuple<std::string, std::string,
                                                     std::string>& r) {
  return "delta row " + std::to_string(i) + " [\"" + std::get<0>(r) +
         "\", \"" + std::get<1>(r) + "\", \"" + std::get<2>(r) + "\"]";
}

void check_row(const Common& c, std::size_t i, bool allow_eps) {
  const auto& r = c.rows[i];
  const auto& sym = std::get<1>(r);
  auto is_state = [&](const std::string& q) {
    return std::find(c.states.begin(), c.states.end(), q) != c.states.end();
  };
  if (!is_state(std::get<0>(r)) || !is_state(std::get<2>(r))) {
    throw Error("automaton: " + row_text(i, r) + " names an unknown state");
  }
  if (sym.empty() ? !allow_eps
                  : (sym.size() != 1 || !c.alphabet.contains(sym[0]))) {
    throw Error("automaton: " + row_text(i, r) + " has an invalid symbol");
  }
}

}  // namespace

Dfa dfa_of_json(std::string_view text) {
  Common c = read_common(text);
  Dfa m{c.states, c.alphabet, c.start, c.accept, {}};
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    check_row(c, i, false);
    const auto& [from, sym, to] = c.rows[i];
    if (!m.delta.emplace(std::make_pair(from, sym[0]), to).second) {
      throw Error("automaton: " + row_text(i, c.rows[i]) +
                  " repeats a transition");
    }
  }
  m.validate();
  return m;
}

Nfa nfa_of_json(std::string_view text) {
  Common c = read_common(text);
  Nfa m{c.states, c.alphabet, c.start, c.accept, {}};
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    check_row(c, i, true);
    const auto& [from, sym, to] = c.rows[i];
    std::optional<Symbol> x;
    if (!sym.empty()) x = sym[0];
    m.delta.push_back({from, x, to});
  }
  m.validate();
  return m;
}

std::string json_of_dfa(const Dfa& m) {
  json doc;
  doc["states"] = m.states;
  std::vector<std::string> symbols;
  for (Symbol x : m.alphabet.symbols()) symbols.emplace_back(1, x);
  doc["alphabet"] = symbols;
  doc["start"] = m.start;
  doc["accept"] = std::vector<std::string>(m.accept.begin(), m.accept.end());
  json rows = json::array();
  for (const auto& q : m.states) {
    for (Symbol x : m.alphabet.symbols()) {
      rows.push_back({q, std::string(1, x), m.next(q, x)});
    }
  }
  doc["delta"] = rows;
  return doc.dump();
}

// ---------------------------------------------------------------------------

bool dfa_accepts(const Dfa& m, const Word& w) {
  std::string q = m.start;
  for (Symbol x : w) {
    if (!m.alphabet.contains(x)) {
      throw Error(std::string("dfa_accepts: symbol ") + x + " is not in the alphabet");
    }
    q = m.next(q, x);
  }
  return m.accept.count(q) > 0;
}

bool nfa_accepts(const Nfa& m, const Word& w) {
  auto close = [&](std::set<std::string> cur) {
    std::vector<std::string> todo(cur.begin(), cur.end());
    while (!todo.empty()) {
      std::string q = std::move(todo.back());
      todo.pop_back();
      for (const NfaEdge& e : m.delta) {
        if (e.from == q && !e.symbol && cur.insert(e.to).second) {
          todo.push_back(e.to);
        }
      }
    }
    return cur;
  };
  std::set<std::string> cur = close({m.start});
  for (Symbol x : w) {
    if (!m.alphabet.contains(x)) {
      throw Error(std::string("nfa_accepts: symbol ") + x + " is not in the alphabet");
    }
    std::set<std::string> next;
    for (const NfaEdge& e : m.delta) {
      if (e.symbol == x && cur.count(e.from)) next.insert(e.to);
    }
    cur = close(std::move(next));
  }
  for (const std::string& q : cur) {
    if (m.accept.count(q)) return true;
  }
  return false;
}

Dfa prune(const Dfa& m) {
  std::set<std::string> seen{m.start};
  std::deque<std::string> queue{m.start};
  while (!queue.empty()) {
    std::string q = queue.front();
    queue.pop_front();
    for (Symbol x : m.alphabet.symbols()) {
      const std::string& to = m.next(q, x);
      if (seen.insert(to).second) queue.push_back(to);
    }
  }
  Dfa out{{}, m.alphabet, m.start, {}, {}};
  for (const auto& q : m.states) {
    if (!seen.count(q)) continue;
    out.states.push_back(q);
    if (m.accept.count(q)) out.accept.insert(q);
    for (Symbol x : m.alphabet.symbols()) out.delta[{q, x}] = m.next(q, x);
  }
  return out;
}

std::map<std::string, std::string> state_vars(
    const std::vector<std::string>& states, const std::string& start) {
  std::vector<std::string> rest;
  for (const auto& q : states) {
    if (q != start) rest.push_back(q);
  }
  std::sort(rest.begin(), rest.end());
  std::map<std::string, std::string> out{{start, "R1"}};
  for (std::size_t i = 0; i < rest.size(); ++i) {
    out[rest[i]] = "R" + std::to_string(i + 2);
  }
  return out;
}

EquationSystem nfa_characteristic_equations(const Nfa& m) {
  m.validate();
  auto vars = state_vars(m.states, m.start);
  auto index = [&](const std::string& q) {
    return std::stoul(vars.at(q).substr(1));
  };
  std::vector<std::string> order(m.states.size());
  for (const auto& q : m.states) order[index(q) - 1] = q;
  EquationSystem sys;
  for (const auto& q : order) {
    // (not self, symbol rank with eps first, target index)
    std::vector<std::tuple<bool, int, unsigned long>> keys;
    for (const auto& e : m.delta) {
      if (e.from != q) continue;
      keys.emplace_back(e.to != q, e.symbol ? 1 + static_cast<int>(*e.symbol) : 0,
                        index(e.to));
    }
    std::stable_sort(keys.begin(), keys.end());
    std::vector<Regex> parts;
    for (const auto& [other, rank, to] : keys) {
      Regex coef = rank == 0 ? Regex::eps() : Regex::sym(static_cast<Symbol>(rank - 1));
      parts.push_back(Regex::seq(coef, Regex::var("R" + std::to_string(to))));
    }
    parts.push_back(m.accept.count(q) ? Regex::eps() : Regex::phi());
    sys.add(vars.at(q), Regex::alt_of(parts));
  }
  return sys;
}

EquationSystem characteristic_equations(const Dfa& m) {
  m.validate();
  return nfa_characteristic_equations(nfa_of_dfa(m));
}

Regex dfa_to_regex(const Dfa& m, Strategy strategy) {
  return solve(characteristic_equations(m), strategy).at("R1");
}

Regex nfa_to_regex(const Nfa& m, Strategy strategy) {
  return solve(nfa_characteristic_equations(m), strategy).at("R1");
}

}  // namespace regeq
