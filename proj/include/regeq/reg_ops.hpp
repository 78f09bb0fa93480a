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

#ifndef REGEQ_REG_OPS_HPP_
#define REGEQ_REG_OPS_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regeq/equations.hpp"
#include "regeq/regex.hpp"

namespace regeq {

// All interleavings of v and w.
std::set<Word> shuffle_words(const Word& v, const Word& w);

enum class ProductMode : std::uint8_t {
  // One equation for every pair of descendants.
  FullProduct,
  // Only pairs reachable from the pair of sources.
  ReachableOnly,
};

std::string product_mode_name(ProductMode m);
// "product" or "reachable".
ProductMode product_mode_of_name(std::string_view name);

// Equations over pairs of canonical descendants. pairs[i] is the pair
// denoted by the i-th equation's variable. The source pair is R1, further
// pairs are numbered in breadth-first order; under FullProduct the
// unreachable pairs follow in index order. Descendants are taken over the
// union of the symbols of both inputs.
struct ProductSystem {
  EquationSystem system;
  std::vector<std::pair<Regex, Regex>> pairs;
};

ProductSystem subtract_equations(const Regex& r, const Regex& s,
                                 ProductMode mode = ProductMode::FullProduct,
                                 Rules rules = Rules::Full);
ProductSystem intersect_equations(const Regex& r, const Regex& s,
                                  ProductMode mode = ProductMode::FullProduct,
                                  Rules rules = Rules::Full);
ProductSystem shuffle_equations(const Regex& r, const Regex& s,
                                ProductMode mode = ProductMode::FullProduct,
                                Rules rules = Rules::Full);

// Solution of R1 in the corresponding system, solved in NormalMode::Full.
Regex subtract(const Regex& r, const Regex& s,
               Strategy strategy = Strategy::Default,
               ProductMode mode = ProductMode::FullProduct,
               Rules rules = Rules::Full);
Regex intersect(const Regex& r, const Regex& s,
                Strategy strategy = Strategy::Default,
                ProductMode mode = ProductMode::FullProduct,
                Rules rules = Rules::Full);
Regex shuffle(const Regex& r, const Regex& s,
              Strategy strategy = Strategy::Default,
              ProductMode mode = ProductMode::FullProduct,
              Rules rules = Rules::Full);

}  // namespace regeq

#endif  // REGEQ_REG_OPS_HPP_
