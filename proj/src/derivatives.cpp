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

#include "regeq/derivatives.hpp"

#include <deque>
#include <string>

namespace regeq {

Regex deriv(const Regex& r, Symbol x) {
  switch (r.kind()) {
    case Kind::Phi:
    case Kind::Eps:
      return Regex::phi();
    case Kind::Sym:
      return r.symbol() == x ? Regex::eps() : Regex::phi();
    case Kind::Alt:
      return Regex::alt(deriv(r.left(), x), deriv(r.right(), x));
    case Kind::Seq: {
      Regex head = Regex::seq(deriv(r.left(), x), r.right());
      if (!nullable(r.left())) return head;
      return Regex::alt(head, deriv(r.right(), x));
    }
    case Kind::Star:
      return Regex::seq(deriv(r.body(), x), r);
    case Kind::Var:
      break;
  }
  throw Error("deriv: expression contains variable " + r.var_name());
}

Regex deriv_canonical(const Regex& r, Symbol x, Rules rules) {
  return simp(deriv(r, x), rules);
}

std::optional<std::size_t> DescendantSet::index_of(const Regex& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DescendantSet descendants(const Regex& r, Rules rules,
                          const Alphabet& alphabet, std::size_t cap) {
  if (!r.is_closed()) throw Error("descendants: expression contains variables");
  DescendantSet out;
  out.source_ = r;
  out.rules_ = rules;
  out.alphabet_ = alphabet;
  auto add = [&](const Regex& d) {
    auto [it, fresh] = out.index_.emplace(d, out.members_.size());
    if (fresh) {
      if (out.members_.size() >= cap) {
        throw Error("descendants: more than " + std::to_string(cap) +
                    " canonical descendants");
      }
      out.members_.push_back(d);
      out.delta_.emplace_back();
    }
    return it->second;
  };
  add(simp(r, rules));
  for (std::size_t i = 0; i < out.members_.size(); ++i) {
    std::vector<std::size_t> row;
    row.reserve(alphabet.size());
    for (Symbol x : alphabet.symbols()) {
      Regex member = out.members_[i];
      row.push_back(add(deriv_canonical(member, x, rules)));
    }
    out.delta_[i] = std::move(row);
  }
  return out;
}

DescendantSet descendants(const Regex& r, Rules rules) {
  return descendants(r, rules, symbols_of(r));
}

Regex expand(const Regex& r, const Alphabet& alphabet) {
  std::vector<Regex> parts;
  for (Symbol x : alphabet.symbols()) {
    parts.push_back(Regex::seq(Regex::sym(x), deriv(r, x)));
  }
  if (nullable(r)) parts.push_back(Regex::eps());
  return Regex::alt_of(parts);
}

}  // namespace regeq
