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

#include "regeq/regex.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "test_util.hh"

namespace regeq {
namespace {

using testing::re;

TEST(Nullable, Examples) {
  EXPECT_TRUE(nullable(re("~")));
  EXPECT_TRUE(nullable(re("x*")));
  EXPECT_FALSE(nullable(re("x y*")));
  EXPECT_FALSE(nullable(re("!")));
  EXPECT_THROW(nullable(testing::rhs("x R")), Error);
}

TEST(IsEmptyLang, Examples) {
  EXPECT_TRUE(is_empty_lang(re("!")));
  EXPECT_TRUE(is_empty_lang(re("! x + !")));
  EXPECT_FALSE(is_empty_lang(re("!*")));
  EXPECT_FALSE(is_empty_lang(re("x !*")));
}

TEST(AlphabeticWidth, Examples) {
  EXPECT_EQ(alphabetic_width(re("!")), 0u);
  EXPECT_EQ(alphabetic_width(re("x x* + y")), 3u);
  EXPECT_EQ(alphabetic_width(re("(x+y)* (x+y)*")), 4u);
}

TEST(LangUpto, Examples) {
  EXPECT_EQ(lang_upto(re("x*"), 2), (std::set<Word>{"", "x", "xx"}));
  EXPECT_EQ(lang_upto(re("(x+y)*"), 1), (std::set<Word>{"", "x", "y"}));
  EXPECT_EQ(lang_upto(re("x y + x"), 2), (std::set<Word>{"x", "xy"}));
  EXPECT_TRUE(lang_upto(re("!*"), 3) == std::set<Word>{""});
  EXPECT_TRUE(lang_upto(re("x"), 0).empty());
}

TEST(LangUpto, OracleSoundness) {
  SplitMix64 rng(7);
  for (int i = 0; i < 300; ++i) {
    int width = static_cast<int>(rng.below(7));
    Regex r = testing::random_regex(rng, width, "xy");
    Regex s = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    std::size_t len = rng.below(7);
    auto lr = lang_upto(r, len);
    auto ls = lang_upto(s, len);
    auto alt = lang_upto(Regex::alt(r, s), len);
    std::set<Word> uni = lr;
    uni.insert(ls.begin(), ls.end());
    EXPECT_EQ(alt, uni) << text_of_regex(r) << " | " << text_of_regex(s);

    auto star = lang_upto(Regex::star(r), len);
    EXPECT_TRUE(star.count(""));
    for (const Word& a : star) {
      for (const Word& b : star) {
        if (a.size() + b.size() <= len) {
          EXPECT_TRUE(star.count(a + b)) << text_of_regex(r);
        }
      }
    }
    // Every word in the truncated language respects the bound.
    for (const Word& w : lr) EXPECT_LE(w.size(), len);
  }
}

TEST(Nullable, AgreesWithOracle) {
  SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    EXPECT_EQ(nullable(r), lang_upto(r, 0).count("") == 1) << text_of_regex(r);
  }
}

TEST(IsEmptyLang, AgreesWithOracleUpToWidth) {
  SplitMix64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    bool empty = lang_upto(r, alphabetic_width(r) + 1).empty();
    EXPECT_EQ(is_empty_lang(r), empty) << text_of_regex(r);
  }
}

TEST(Simp, Examples) {
  EXPECT_EQ(simp(re("(~ + !) (x+y)*"), Rules::Full), re("(x+y)*"));
  EXPECT_EQ(simp(re("x + x"), Rules::Basic), re("x"));
  // Sorted by alphabet order; the oracle confirms the language is kept.
  Regex sorted = simp(re("y + x"), Rules::Basic);
  EXPECT_EQ(sorted, re("x + y"));
  EXPECT_EQ(lang_upto(sorted, 4), lang_upto(re("y + x"), 4));
}

TEST(Simp, EliminationOnlyWithFullRules) {
  EXPECT_EQ(simp(re("~ x"), Rules::Basic), re("~ x"));
  EXPECT_EQ(simp(re("~ x"), Rules::Full), re("x"));
  EXPECT_EQ(simp(re("! x"), Rules::Full), re("!"));
  EXPECT_EQ(simp(re("x + !"), Rules::Full), re("x"));
  EXPECT_EQ(simp(re("! + !"), Rules::Full), re("!"));
  // No rule removes a trailing eps or phi factor.
  EXPECT_EQ(simp(re("x ~"), Rules::Full), re("x ~"));
  EXPECT_EQ(simp(re("x !"), Rules::Full), re("x !"));
  EXPECT_EQ(simp(re("x ! y"), Rules::Full), re("x !"));
}

TEST(Simp, OrdersPhiBeforeEps) {
  EXPECT_EQ(simp(re("~ x* + ! x*"), Rules::Basic), re("! x* + ~ x*"));
  EXPECT_EQ(simp(re("x + ~"), Rules::Basic), re("~ + x"));
}

void expect_canonical_shape(const Regex& r) {
  switch (r.kind()) {
    case Kind::Seq:
      EXPECT_FALSE(r.left().is(Kind::Seq)) << text_of_regex(r);
      expect_canonical_shape(r.left());
      expect_canonical_shape(r.right());
      break;
    case Kind::Alt: {
      EXPECT_FALSE(r.left().is(Kind::Alt)) << text_of_regex(r);
      std::vector<Regex> parts;
      Regex cur = r;
      while (cur.is(Kind::Alt)) {
        parts.push_back(cur.left());
        cur = cur.right();
      }
      parts.push_back(cur);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        EXPECT_LT(compare_alternatives(parts[i - 1], parts[i]), 0)
            << text_of_regex(r);
      }
      for (const auto& p : parts) expect_canonical_shape(p);
      break;
    }
    case Kind::Star:
      expect_canonical_shape(r.body());
      break;
    default:
      break;
  }
}

TEST(Simp, Properties) {
  SplitMix64 rng(3);
  for (int i = 0; i < 400; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(7)), "xy");
    for (Rules rules : {Rules::Basic, Rules::Full}) {
      Regex s = simp(r, rules);
      EXPECT_EQ(lang_upto(s, 6), lang_upto(r, 6)) << text_of_regex(r);
      EXPECT_EQ(simp(s, rules), s) << text_of_regex(r);
      expect_canonical_shape(s);
    }
  }
}

TEST(Text, Examples) {
  EXPECT_THROW(regex_of_text("x*(yR?)"), SyntaxError);
  try {
    regex_of_text("x*(yR?)");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_EQ(regex_of_text("x y + ~"),
            Regex::alt(Regex::seq(Regex::sym('x'), Regex::sym('y')),
                       Regex::eps()));
  EXPECT_EQ(regex_of_text("!*"), Regex::star(Regex::phi()));
  EXPECT_THROW(regex_of_text(""), SyntaxError);
  EXPECT_THROW(regex_of_text("(x"), SyntaxError);
  EXPECT_THROW(regex_of_text("x)"), SyntaxError);
  EXPECT_THROW(regex_of_text("+x"), SyntaxError);
  EXPECT_THROW(regex_of_text("x+"), SyntaxError);
}

TEST(Text, RightAssociative) {
  EXPECT_EQ(re("x y z"), Regex::seq(Regex::sym('x'),
                                    Regex::seq(Regex::sym('y'),
                                               Regex::sym('z'))));
  EXPECT_EQ(re("x+y+z"), Regex::alt(Regex::sym('x'),
                                    Regex::alt(Regex::sym('y'),
                                               Regex::sym('z'))));
  EXPECT_EQ(re("x**"), Regex::star(Regex::star(Regex::sym('x'))));
}

TEST(Text, RoundTrip) {
  SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Regex r = testing::random_regex(rng, static_cast<int>(rng.below(9)), "xyz");
    EXPECT_EQ(regex_of_text(text_of_regex(r)), r) << text_of_regex(r);
  }
  Regex with_vars = testing::rhs("x R1 + (y + z) Foo2 + ~");
  EXPECT_EQ(regex_of_text(text_of_regex(with_vars), true), with_vars);
}

TEST(Text, EqualModuloSeqAssoc) {
  EXPECT_TRUE(equal_modulo_seq_assoc(re("(x y) z"), re("x (y z)")));
  EXPECT_FALSE(equal_modulo_seq_assoc(re("(x y) z"), re("x (z y)")));
  EXPECT_FALSE(equal_modulo_seq_assoc(re("(x + y) + z"), re("x + (y + z)")));
}

}  // namespace
}  // namespace regeq
