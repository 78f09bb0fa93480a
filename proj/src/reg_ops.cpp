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

#include "regeq/reg_ops.hpp"

#include <deque>
#include <functional>
#include <map>

#include "regeq/derivatives.hpp"

namespace regeq {

std::set<Word> shuffle_words(const Word& v, const Word& w) {
  if (v.empty()) return {w};
  if (w.empty()) return {v};
  std::set<Word> out;
  for (const Word& t : shuffle_words(v.substr(1), w)) out.insert(v[0] + t);
  for (const Word& t : shuffle_words(v, w.substr(1))) out.insert(w[0] + t);
  return out;
}

std::string product_mode_name(ProductMode m) {
  return m == ProductMode::FullProduct ? "product" : "reachable";
}

ProductMode product_mode_of_name(std::string_view name) {
  if (name == "product") return ProductMode::FullProduct;
  if (name == "reachable") return ProductMode::ReachableOnly;
  throw Error("unknown product mode \"" + std::string(name) + "\"");
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

// Summand for symbol j: coefficient symbol and target pair.
struct Edge {
  std::size_t symbol;
  Pair to;
};

using Successors = std::function<std::vector<Edge>(const Pair&)>;
using Tail = std::function<std::optional<Regex>(const Pair&)>;

// Builds the product system. `tail` returns nullopt for pairs whose
// equation is R = phi; otherwise the closed tail of the sum.
ProductSystem build(const DescendantSet& dr, const DescendantSet& ds,
                    ProductMode mode, const Successors& succ,
                    const Tail& tail) {
  std::map<Pair, std::size_t> index;
  std::vector<Pair> order;
  auto visit = [&](const Pair& p) {
    if (index.emplace(p, order.size()).second) order.push_back(p);
  };
  visit({0, 0});
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!tail(order[k])) continue;
    for (const Edge& e : succ(order[k])) visit(e.to);
  }
  if (mode == ProductMode::FullProduct) {
    for (std::size_t i = 0; i < dr.size(); ++i) {
      for (std::size_t j = 0; j < ds.size(); ++j) visit({i, j});
    }
  }
  auto var = [&](const Pair& p) {
    return Regex::var("R" + std::to_string(index.at(p) + 1));
  };
  ProductSystem out;
  const auto& symbols = dr.alphabet().symbols();
  for (const Pair& p : order) {
    out.pairs.emplace_back(dr.members()[p.first], ds.members()[p.second]);
    auto t = tail(p);
    Regex rhs = Regex::phi();
    if (t) {
      std::vector<Regex> parts;
      for (const Edge& e : succ(p)) {
        parts.push_back(Regex::seq(Regex::sym(symbols[e.symbol]), var(e.to)));
      }
      parts.push_back(*t);
      rhs = Regex::alt_of(parts);
    }
    out.system.add(var(p).var_name(), rhs);
  }
  return out;
}

struct Descendants {
  DescendantSet r, s;
};

Descendants both(const Regex& r, const Regex& s, Rules rules) {
  Alphabet sigma = symbols_of(r).merged(symbols_of(s));
  return {descendants(r, rules, sigma), descendants(s, rules, sigma)};
}

Successors lockstep(const Descendants& d) {
  return [&d](const Pair& p) {
    std::vector<Edge> out;
    for (std::size_t j = 0; j < d.r.alphabet().size(); ++j) {
      out.push_back({j, {d.r.successor(p.first, j), d.s.successor(p.second, j)}});
    }
    return out;
  };
}

}  // namespace

ProductSystem subtract_equations(const Regex& r, const Regex& s,
                                 ProductMode mode, Rules rules) {
  Descendants d = both(r, s, rules);
  return build(d.r, d.s, mode, lockstep(d),
               [&](const Pair& p) -> std::optional<Regex> {
                 const Regex& a = d.r.members()[p.first];
                 const Regex& b = d.s.members()[p.second];
                 if (is_empty_lang(a)) return std::nullopt;
                 return nullable(a) && !nullable(b) ? Regex::eps() : Regex::phi();
               });
}

ProductSystem intersect_equations(const Regex& r, const Regex& s,
                                  ProductMode mode, Rules rules) {
  Descendants d = both(r, s, rules);
  return build(d.r, d.s, mode, lockstep(d),
               [&](const Pair& p) -> std::optional<Regex> {
                 const Regex& a = d.r.members()[p.first];
                 const Regex& b = d.s.members()[p.second];
                 if (is_empty_lang(a) || is_empty_lang(b)) return std::nullopt;
                 return nullable(a) && nullable(b) ? Regex::eps() : Regex::phi();
               });
}

ProductSystem shuffle_equations(const Regex& r, const Regex& s,
                                ProductMode mode, Rules rules) {
  Descendants d = both(r, s, rules);
  auto succ = [&d](const Pair& p) {
    std::vector<Edge> out;
    for (std::size_t j = 0; j < d.r.alphabet().size(); ++j) {
      out.push_back({j, {d.r.successor(p.first, j), p.second}});
      out.push_back({j, {p.first, d.s.successor(p.second, j)}});
    }
    return out;
  };
  return build(d.r, d.s, mode, succ,
               [&](const Pair& p) -> std::optional<Regex> {
                 const Regex& a = d.r.members()[p.first];
                 const Regex& b = d.s.members()[p.second];
                 if (is_empty_lang(a) || is_empty_lang(b)) return std::nullopt;
                 Regex t1 = nullable(a) ? b : Regex::phi();
                 Regex t2 = nullable(b) ? a : Regex::phi();
                 return Regex::alt(t1, t2);
               });
}

Regex subtract(const Regex& r, const Regex& s, Strategy strategy,
               ProductMode mode, Rules rules) {
  return solve(subtract_equations(r, s, mode, rules).system, strategy, nullptr,
               NormalMode::Full)
      .at("R1");
}

Regex intersect(const Regex& r, const Regex& s, Strategy strategy,
                ProductMode mode, Rules rules) {
  return solve(intersect_equations(r, s, mode, rules).system, strategy, nullptr,
               NormalMode::Full)
      .at("R1");
}

Regex shuffle(const Regex& r, const Regex& s, Strategy strategy,
              ProductMode mode, Rules rules) {
  return solve(shuffle_equations(r, s, mode, rules).system, strategy, nullptr,
               NormalMode::Full)
      .at("R1");
}

}  // namespace regeq
