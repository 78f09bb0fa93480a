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

#include <set>

#include "gtest/gtest.h"
#include "test_util.hh"

namespace regeq {
namespace {

using testing::re;

TEST(Deriv, Examples) {
  EXPECT_EQ(deriv(re("(x+y)*"), 'x'), re("(~ + !) (x+y)*"));
  EXPECT_EQ(deriv(re("!"), 'x'), re("!"));
  EXPECT_EQ(deriv(re("x x*"), 'x'), re("~ x*"));
  EXPECT_EQ(deriv(re("x* y"), 'y'), re("(! x*) y + ~"));
}

TEST(DerivCanonical, Examples) {
  EXPECT_EQ(deriv_canonical(re("(x x)*"), 'x', Rules::Full), re("x (x x)*"));
  EXPECT_EQ(deriv_canonical(re("(x x)*"), 'y', Rules::Full), re("!"));
  EXPECT_EQ(deriv_canonical(re("(x+y)*"), 'y', Rules::Full), re("(x+y)*"));
  EXPECT_EQ(simp(deriv(re("(x+y)*"), 'x'), Rules::Full), re("(x+y)*"));
}

std::set<Regex, bool (*)(const Regex&, const Regex&)> as_set(
    const DescendantSet& d) {
  std::set<Regex, bool (*)(const Regex&, const Regex&)> out(
      [](const Regex& a, const Regex& b) {
        return text_of_regex(a) < text_of_regex(b);
      });
  out.insert(d.members().begin(), d.members().end());
  return out;
}

TEST(Descendants, Examples) {
  auto d1 = descendants(re("(x+y)*"), Rules::Full);
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.members()[0], re("(x+y)*"));

  auto d2 = descendants(re("(x x)*"), Rules::Full, Alphabet("xy"));
  EXPECT_EQ(d2.size(), 3u);
  EXPECT_TRUE(d2.contains(re("(x x)*")));
  EXPECT_TRUE(d2.contains(re("x (x x)*")));
  EXPECT_TRUE(d2.contains(re("!")));

  auto d3 = descendants(re("!"), Rules::Basic);
  ASSERT_EQ(d3.size(), 1u);
  EXPECT_EQ(d3.members()[0], re("!"));
}

TEST(Descendants, BreadthFirstOrder) {
  auto d = descendants(re("x* y*"), Rules::Full, Alphabet("xy"));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.members()[0], re("x* y*"));
  EXPECT_EQ(d.members()[1], re("y*"));
  EXPECT_EQ(d.members()[2], re("!"));
  EXPECT_EQ(d.successor(0, 0), 0u);
  EXPECT_EQ(d.successor(0, 1), 1u);
  EXPECT_EQ(d.successor(1, 0), 2u);
}

TEST(Descendants, RuleSetSizes) {
  Alphabet xy("xy");
  EXPECT_EQ(descendants(re("x* y*"), Rules::Basic, xy).size(), 6u);
  EXPECT_EQ(descendants(re("x*"), Rules::Basic, xy).size(), 4u);
  EXPECT_EQ(descendants(re("x* y*"), Rules::Full, xy).size(), 3u);
  EXPECT_EQ(descendants(re("x*"), Rules::Full, xy).size(), 2u);
}

TEST(Descendants, CapIsAnError) {
  EXPECT_THROW(descendants(re("(x+y)* x (x+y)"), Rules::Basic,
                           Alphabet("xy"), 2),
               Error);
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand(re("~"), Alphabet("x")), re("x ! + ~"));
  EXPECT_EQ(expand(re("x"), Alphabet("x")), re("x ~"));
  Regex e = expand(re("(x+y)*"), Alphabet("xy"));
  EXPECT_EQ(e, re("x ((~ + !) (x+y)*) + y ((! + ~) (x+y)*) + ~"));
  EXPECT_EQ(lang_upto(e, 5), lang_upto(re("(x+y)*"), 5));
}

TEST(Deriv, QuotientLaw) {
  SplitMix64 rng(21);
  for (int i = 0; i < 300; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    std::size_t len = rng.below(6);
    auto full = lang_upto(r, len + 1);
    for (Symbol x : {'x', 'y'}) {
      std::set<Word> expect;
      for (const Word& w : full) {
        if (!w.empty() && w[0] == x) expect.insert(w.substr(1));
      }
      EXPECT_EQ(lang_upto(deriv(r, x), len), expect) << text_of_regex(r);
    }
  }
}

TEST(Expand, PreservesLanguage) {
  SplitMix64 rng(22);
  for (int i = 0; i < 300; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    EXPECT_EQ(lang_upto(expand(r, Alphabet("xy")), 5), lang_upto(r, 5))
        << text_of_regex(r);
  }
}

TEST(Descendants, ClosedAndMonotone) {
  SplitMix64 rng(23);
  Alphabet xy("xy");
  for (int i = 0; i < 150; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(9)), "xy");
    auto basic = descendants(r, Rules::Basic, xy);
    auto full = descendants(r, Rules::Full, xy);
    for (const auto* d : {&basic, &full}) {
      EXPECT_TRUE(d->contains(simp(r, d->rules())));
      for (const Regex& m : d->members()) {
        for (Symbol x : xy.symbols()) {
          EXPECT_TRUE(d->contains(deriv_canonical(m, x, d->rules())))
              << text_of_regex(r);
        }
      }
    }
    EXPECT_LE(full.size(), basic.size()) << text_of_regex(r);
  }
}

}  // namespace
}  // namespace regeq
