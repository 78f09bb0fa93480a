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

#include <set>

#include "gtest/gtest.h"
#include "regeq/parse_trees.hpp"
#include "test_util.hh"

namespace regeq {
namespace {

using testing::re;

std::set<Word> minus(const std::set<Word>& a, const std::set<Word>& b) {
  std::set<Word> out;
  for (const Word& w : a) {
    if (!b.count(w)) out.insert(w);
  }
  return out;
}

std::set<Word> meet(const std::set<Word>& a, const std::set<Word>& b) {
  std::set<Word> out;
  for (const Word& w : a) {
    if (b.count(w)) out.insert(w);
  }
  return out;
}

std::set<Word> shuffle_upto(const std::set<Word>& a, const std::set<Word>& b,
                            std::size_t len) {
  std::set<Word> out;
  for (const Word& v : a) {
    for (const Word& w : b) {
      if (v.size() + w.size() > len) continue;
      auto s = shuffle_words(v, w);
      out.insert(s.begin(), s.end());
    }
  }
  return out;
}

TEST(ShuffleWords, Examples) {
  EXPECT_EQ(shuffle_words("xy", "z"), (std::set<Word>{"xyz", "xzy", "zxy"}));
  EXPECT_EQ(shuffle_words("", "xy"), (std::set<Word>{"xy"}));
  EXPECT_EQ(shuffle_words("x", "y"), (std::set<Word>{"xy", "yx"}));
  EXPECT_EQ(shuffle_words("xx", "xx").size(), 1u);
  EXPECT_EQ(shuffle_words("xy", "zw").size(), 6u);
}

TEST(Subtract, EquationCounts) {
  auto basic = subtract_equations(re("x* y*"), re("x*"), ProductMode::FullProduct,
                                  Rules::Basic);
  EXPECT_EQ(basic.system.size(), 24u);
  auto full = subtract_equations(re("x* y*"), re("x*"));
  EXPECT_EQ(full.system.size(), 6u);
  EXPECT_EQ(full.pairs[0], std::make_pair(re("x* y*"), re("x*")));
  EXPECT_TRUE(is_non_overlapping(full.system));
  auto reach = subtract_equations(re("x* y*"), re("x*"), ProductMode::ReachableOnly);
  EXPECT_LE(reach.system.size(), full.system.size());
}

TEST(Subtract, Examples) {
  EXPECT_EQ(lang_upto(subtract(re("x* y*"), re("x*")), 8),
            lang_upto(re("(x* y) y*"), 8));
  Regex r1 = re("(x+y)*");
  EXPECT_EQ(lang_upto(subtract(r1, re("(x x)*")), 8),
            lang_upto(re("(x x)* (x y (x+y)* + x + y (x+y)*)"), 8));
  EXPECT_EQ(lang_upto(subtract(re("x y + y"), re("!")), 6),
            lang_upto(re("x y + y"), 6));
  EXPECT_TRUE(lang_upto(subtract(re("x (x+y)*"), re("x (x+y)*")), 6).empty());
  auto empty = subtract_equations(re("!"), re("x"));
  for (const auto& eq : empty.system.equations()) EXPECT_EQ(eq.rhs, re("!"));
}

TEST(Subtract, EvenXsSystemShape) {
  auto ps = subtract_equations(re("(x+y)*"), re("(x x)*"));
  // Pairs: ((x+y)*, (xx)*), ((x+y)*, x(xx)*), ((x+y)*, phi).
  ASSERT_EQ(ps.system.size(), 3u);
  EXPECT_EQ(ps.system[0].rhs, testing::rhs("x R2 + y R3 + !"));
  EXPECT_EQ(ps.system[1].rhs, testing::rhs("x R1 + y R3 + ~"));
  EXPECT_EQ(ps.system[2].rhs, testing::rhs("x R3 + y R3 + ~"));
}

TEST(Intersect, Examples) {
  EXPECT_EQ(lang_upto(intersect(re("(x+y)*"), re("(x x)*")), 8),
            lang_upto(re("(x x)*"), 8));
  EXPECT_TRUE(lang_upto(intersect(re("x y*"), re("!")), 6).empty());
  EXPECT_TRUE(lang_upto(intersect(re("x"), re("y")), 6).empty());
}

TEST(Shuffle, Examples) {
  EXPECT_EQ(lang_upto(shuffle(re("x"), re("y")), 4), lang_upto(re("x y + y x"), 4));
  EXPECT_EQ(lang_upto(shuffle(re("x y* + y"), re("~")), 5),
            lang_upto(re("x y* + y"), 5));
  EXPECT_EQ(lang_upto(shuffle(re("x*"), re("y")), 5),
            shuffle_upto(lang_upto(re("x*"), 5), lang_upto(re("y"), 5), 5));
}

TEST(RegOps, OracleCorpus) {
  SplitMix64 rng(51);
  for (int i = 0; i < 60; ++i) {
    Regex r = testing::random_regex(rng, 1 + static_cast<int>(rng.below(4)), "xy");
    Regex s = testing::random_regex(rng, 1 + static_cast<int>(rng.below(4)), "xy");
    auto lr = lang_upto(r, 6);
    auto ls = lang_upto(s, 6);
    for (ProductMode mode : {ProductMode::FullProduct, ProductMode::ReachableOnly}) {
      auto d = subtract_equations(r, s, mode);
      EXPECT_TRUE(is_non_overlapping(d.system));
      EXPECT_EQ(lang_upto(solve(d.system).at("R1"), 6), minus(lr, ls))
          << text_of_regex(r) << " - " << text_of_regex(s);
      auto n = intersect_equations(r, s, mode);
      EXPECT_TRUE(is_non_overlapping(n.system));
      EXPECT_EQ(lang_upto(solve(n.system).at("R1"), 6), meet(lr, ls))
          << text_of_regex(r) << " & " << text_of_regex(s);
      EXPECT_EQ(lang_upto(shuffle(r, s, Strategy::Default, mode), 6),
                shuffle_upto(lr, ls, 6))
          << text_of_regex(r) << " || " << text_of_regex(s);
    }
  }
}

TEST(RegOps, SubtractAndIntersectAreUnambiguous) {
  SplitMix64 rng(52);
  EquationSystem none;
  for (int i = 0; i < 15; ++i) {
    Regex r = testing::random_regex(rng, 1 + static_cast<int>(rng.below(3)), "xy");
    Regex s = testing::random_regex(rng, 1 + static_cast<int>(rng.below(3)), "xy");
    EXPECT_FALSE(is_ambiguous_bounded(none, subtract(r, s), 4, 20));
    EXPECT_FALSE(is_ambiguous_bounded(none, intersect(r, s), 4, 20));
  }
}

TEST(ProductMode, Names) {
  EXPECT_EQ(product_mode_of_name("reachable"), ProductMode::ReachableOnly);
  EXPECT_EQ(product_mode_name(ProductMode::FullProduct), "product");
  EXPECT_THROW(product_mode_of_name("all"), Error);
}

}  // namespace
}  // namespace regeq
