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

#ifndef REGEQ_DERIVATIVES_HPP_
#define REGEQ_DERIVATIVES_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "regeq/regex.hpp"

namespace regeq {

// Brzozowski derivative of a closed expression. No simplification.
Regex deriv(const Regex& r, Symbol x);

// simp(deriv(r, x), rules).
Regex deriv_canonical(const Regex& r, Symbol x, Rules rules);

// Canonical descendants of an expression, in breadth-first discovery order
// starting from simp(source) with symbols taken in alphabet order.
class DescendantSet {
 public:
  const Regex& source() const { return source_; }
  Rules rules() const { return rules_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Regex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Regex& r) const { return index_.count(r) != 0; }
  std::optional<std::size_t> index_of(const Regex& r) const;
  // Index of the canonical derivative of member i by the j-th symbol.
  std::size_t successor(std::size_t i, std::size_t j) const {
    return delta_[i][j];
  }

 private:
  friend DescendantSet descendants(const Regex&, Rules, const Alphabet&,
                                   std::size_t);
  Regex source_;
  Rules rules_ = Rules::Full;
  Alphabet alphabet_;
  std::vector<Regex> members_;
  std::unordered_map<Regex, std::size_t, RegexHash> index_;
  std::vector<std::vector<std::size_t>> delta_;
};

inline constexpr std::size_t kDescendantCap = 10000;

// Closure of {simp(r)} under deriv_canonical over `alphabet`. Exceeding `cap`
// members throws Error.
DescendantSet descendants(const Regex& r, Rules rules,
                          const Alphabet& alphabet,
                          std::size_t cap = kDescendantCap);
// Uses the symbols of r as the alphabet.
DescendantSet descendants(const Regex& r, Rules rules);

// x1.deriv(r,x1) + ... + xn.deriv(r,xn) (+ eps if r is nullable), summed
// right-associatively over `alphabet`.
Regex expand(const Regex& r, const Alphabet& alphabet);

}  // namespace regeq

#endif  // REGEQ_DERIVATIVES_HPP_
