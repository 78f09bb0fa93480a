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

#include "regeq/tooling.hpp"

#include "gtest/gtest.h"

namespace regeq {
namespace {

TEST(RandomDfa, Deterministic) {
  Dfa a = random_dfa(5, Alphabet("xy"), 0.5, 42);
  Dfa b = random_dfa(5, Alphabet("xy"), 0.5, 42);
  EXPECT_EQ(a.states, b.states);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.accept, b.accept);
  EXPECT_NO_THROW(a.validate());
  Dfa c = random_dfa(5, Alphabet("xy"), 0.5, 43);
  EXPECT_FALSE(c.delta == a.delta && c.accept == a.accept);
}

TEST(RandomDfa, SingleState) {
  Dfa m = random_dfa(1, Alphabet("xyz"), 0.5, 7);
  for (const auto& [key, to] : m.delta) EXPECT_EQ(to, "q0");
  EXPECT_THROW(random_dfa(0, Alphabet("x"), 0.5, 1), Error);
}

TEST(Bench, SingleStateRatiosAreOne) {
  BenchConfig cfg;
  cfg.cases = 10;
  cfg.states = 1;
  BenchReport r = bench_compare(cfg);
  ASSERT_EQ(r.mean_ratio.size(), 2u);
  EXPECT_DOUBLE_EQ(r.mean_ratio[0], 1.0);
  EXPECT_DOUBLE_EQ(r.mean_ratio[1], 1.0);
  EXPECT_EQ(r.widths.size(), 10u);
}

TEST(Bench, DeterministicReport) {
  BenchConfig cfg;
  cfg.cases = 12;
  cfg.states = 3;
  cfg.seed = 9;
  EXPECT_EQ(json_of_report(bench_compare(cfg)), json_of_report(bench_compare(cfg)));
  EXPECT_NE(text_of_report(bench_compare(cfg)).find("delgado"), std::string::npos);
}

TEST(Bench, ConfigValidation) {
  BenchConfig cfg;
  cfg.accept_prob = 1.0;
  EXPECT_THROW(bench_compare(cfg), Error);
  cfg.accept_prob = 0.5;
  cfg.cases = 0;
  EXPECT_THROW(bench_compare(cfg), Error);
}

}  // namespace
}  // namespace regeq
