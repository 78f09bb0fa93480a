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
#include <string>

#include "gtest/gtest.h"
#include "regeq/parse_trees.hpp"
#include "regeq/tooling.hpp"
#include "test_util.hh"

namespace regeq {
namespace {

using testing::re;

const char kSwap[] = R"({"states": ["1", "2"], "alphabet": ["x", "y"],
  "start": "1", "accept": ["1", "2"],
  "delta": [["1", "x", "1"], ["1", "y", "2"], ["2", "x", "2"], ["2", "y", "1"]]})";

const char kParity[] = R"({"states": ["even", "odd"], "alphabet": ["x", "y"],
  "start": "even", "accept": ["even"],
  "delta": [["even", "x", "odd"], ["even", "y", "even"],
            ["odd", "x", "even"], ["odd", "y", "odd"]]})";

// Summands of an alternation chain as a sorted list of texts.
std::vector<std::string> summands(const Regex& r) {
  std::vector<std::string> out;
  Regex cur = r;
  while (cur.is(Kind::Alt)) {
    out.push_back(text_of_regex(cur.left()));
    cur = cur.right();
  }
  out.push_back(text_of_regex(cur));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(DfaAccepts, Examples) {
  Dfa all = dfa_of_json(kSwap);
  for (const Word& w : testing::all_words("xy", 4)) EXPECT_TRUE(dfa_accepts(all, w));
  Dfa none = all;
  none.accept.clear();
  for (const Word& w : testing::all_words("xy", 4)) EXPECT_FALSE(dfa_accepts(none, w));
  Dfa parity = dfa_of_json(kParity);
  EXPECT_TRUE(dfa_accepts(parity, "xx"));
  EXPECT_FALSE(dfa_accepts(parity, "x"));
  EXPECT_TRUE(dfa_accepts(parity, "xyx"));
  EXPECT_THROW(dfa_accepts(parity, "xz"), Error);
}

TEST(Json, Validation) {
  EXPECT_THROW(dfa_of_json("{"), SyntaxError);
  EXPECT_THROW(dfa_of_json(R"({"states": ["a"]})"), Error);
  const char missing[] = R"({"states": ["a", "b"], "alphabet": ["x"],
    "start": "a", "accept": [], "delta": [["a", "x", "b"]]})";
  EXPECT_THROW(dfa_of_json(missing), Error);
  const char bad_row[] = R"({"states": ["a"], "alphabet": ["x"],
    "start": "a", "accept": [], "delta": [["a", "x", "a"], ["a", "y", "a"]]})";
  try {
    dfa_of_json(bad_row);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos) << e.what();
  }
  const char dup[] = R"({"states": ["a"], "alphabet": ["x"],
    "start": "a", "accept": [], "delta": [["a", "x", "a"], ["a", "x", "a"]]})";
  EXPECT_THROW(dfa_of_json(dup), Error);
  EXPECT_NO_THROW(nfa_of_json(dup));
  Dfa m = dfa_of_json(kParity);
  Dfa again = dfa_of_json(json_of_dfa(m));
  EXPECT_EQ(again.delta, m.delta);
  EXPECT_EQ(again.accept, m.accept);
}

TEST(CharacteristicEquations, Examples) {
  auto sys = characteristic_equations(dfa_of_json(kSwap));
  auto ex1 = equations_of_text("R1 = x R1 + y R2 + ~\nR2 = y R1 + x R2 + ~");
  ASSERT_EQ(sys.size(), 2u);
  EXPECT_EQ(sys[0].rhs, ex1[0].rhs);
  EXPECT_EQ(summands(sys[1].rhs), summands(ex1[1].rhs));
  EXPECT_EQ(sys[1].rhs, testing::rhs("x R2 + y R1 + ~"));

  Dfa loop = random_dfa(1, Alphabet("xy"), 0.99, 3);
  loop.accept = {"q0"};
  EXPECT_EQ(characteristic_equations(loop)[0].rhs, testing::rhs("x R1 + y R1 + ~"));
  loop.accept.clear();
  EXPECT_EQ(characteristic_equations(loop)[0].rhs, testing::rhs("x R1 + y R1 + !"));
}

TEST(CharacteristicEquations, StartStateIsR1) {
  Dfa m = dfa_of_json(kParity);
  m.start = "odd";
  auto sys = characteristic_equations(m);
  EXPECT_EQ(sys[0].var, "R1");
  EXPECT_EQ(sys[0].rhs, testing::rhs("y R1 + x R2 + !"));
}

TEST(NfaEquations, Examples) {
  const char fork[] = R"({"states": ["q0", "q1", "q2"], "alphabet": ["x"],
    "start": "q0", "accept": ["q1"],
    "delta": [["q0", "x", "q1"], ["q0", "x", "q2"], ["q1", "", "q2"]]})";
  auto sys = nfa_characteristic_equations(nfa_of_json(fork));
  EXPECT_EQ(sys[0].rhs, testing::rhs("x R2 + x R3 + !"));
  EXPECT_EQ(sys[1].rhs, testing::rhs("(~) R3 + ~"));
  EXPECT_EQ(sys[2].rhs, re("!"));
  Regex r = nfa_to_regex(nfa_of_json(fork));
  EXPECT_EQ(lang_upto(r, 3), (std::set<Word>{"x"}));
  EXPECT_TRUE(nfa_accepts(nfa_of_json(fork), "x"));
  EXPECT_FALSE(nfa_accepts(nfa_of_json(fork), "xx"));
  EXPECT_THROW(nfa_accepts(nfa_of_json(fork), "y"), Error);

  SplitMix64 rng(41);
  for (int i = 0; i < 20; ++i) {
    Dfa m = random_dfa(1 + rng.below(4), Alphabet("xy"), 0.5, rng.next());
    EXPECT_EQ(nfa_characteristic_equations(nfa_of_dfa(m)),
              characteristic_equations(m));
    for (const Word& w : testing::all_words("xy", 4)) {
      EXPECT_EQ(nfa_accepts(nfa_of_dfa(m), w), dfa_accepts(m, w));
    }
  }
}

TEST(DfaToRegex, Examples) {
  Regex all = dfa_to_regex(dfa_of_json(kSwap));
  EXPECT_EQ(lang_upto(all, 6), lang_upto(re("(x+y)*"), 6));
  Dfa none = dfa_of_json(kSwap);
  none.accept.clear();
  EXPECT_TRUE(lang_upto(dfa_to_regex(none), 6).empty());
  Dfa parity = dfa_of_json(kParity);
  for (Strategy s : {Strategy::Default, Strategy::DelgadoMorais, Strategy::CycleCount}) {
    auto lang = lang_upto(dfa_to_regex(parity, s), 6);
    for (const Word& w : testing::all_words("xy", 6)) {
      EXPECT_EQ(lang.count(w) == 1, dfa_accepts(parity, w)) << w;
    }
  }
}

TEST(Prune, DropsUnreachable) {
  Dfa m = dfa_of_json(kParity);
  m.states.push_back("dead");
  for (Symbol x : {'x', 'y'}) m.delta[{"dead", x}] = "even";
  m.validate();
  Dfa p = prune(m);
  EXPECT_EQ(p.states, (std::vector<std::string>{"even", "odd"}));
  EXPECT_EQ(characteristic_equations(m).size(), 3u);
  EXPECT_EQ(lang_upto(dfa_to_regex(p), 5), lang_upto(dfa_to_regex(m), 5));
}

TEST(DfaToRegex, LanguageAgreement) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Dfa m = random_dfa(1 + seed % 5, Alphabet("xy"), 0.5, seed);
    auto sys = characteristic_equations(m);
    EXPECT_TRUE(is_non_overlapping(sys));
    for (Strategy s : {Strategy::Default, Strategy::DelgadoMorais, Strategy::CycleCount}) {
      auto lang = lang_upto(dfa_to_regex(m, s), 6);
      for (const Word& w : testing::all_words("xy", 6)) {
        ASSERT_EQ(lang.count(w) == 1, dfa_accepts(m, w)) << seed << " " << w;
      }
    }
  }
}

TEST(DfaToRegex, Unambiguous) {
  EquationSystem none;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Dfa m = random_dfa(1 + seed % 4, Alphabet("xy"), 0.5, seed);
    Regex r = dfa_to_regex(m);
    EXPECT_FALSE(is_ambiguous_bounded(none, r, 5, 20)) << text_of_regex(r);
  }
}

}  // namespace
}  // namespace regeq
