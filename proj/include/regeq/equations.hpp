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

#ifndef REGEQ_EQUATIONS_HPP_
#define REGEQ_EQUATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regeq/regex.hpp"

namespace regeq {

// A right-hand side is a Regex that may contain Var leaves. Well-formed
// right-hand sides follow  a ::= r.R | r | a + a  with r closed.
struct Equation {
  std::string var;
  Regex rhs;
};

// Ordered set of equations. The position of an equation in the sequence is
// its variable index; the default solving order follows it.
class EquationSystem {
 public:
  EquationSystem() = default;
  explicit EquationSystem(std::vector<Equation> equations);

  const std::vector<Equation>& equations() const { return equations_; }
  std::size_t size() const { return equations_.size(); }
  bool empty() const { return equations_.empty(); }
  const Equation& operator[](std::size_t i) const { return equations_[i]; }

  // Index of `var`, if it has an equation.
  std::optional<std::size_t> index_of(std::string_view var) const;
  bool contains(std::string_view var) const { return index_of(var).has_value(); }
  // Right-hand side of `var`; throws Error when absent.
  const Regex& rhs(std::string_view var) const;

  void add(std::string var, Regex rhs);
  void set_rhs(std::size_t i, Regex rhs) { equations_[i].rhs = std::move(rhs); }
  void erase(std::size_t i);

  // Symbols of all right-hand sides.
  Alphabet alphabet() const;

  // Checks that left-hand sides are distinct, every variable used on a
  // right-hand side has an equation, and every right-hand side is
  // well-formed. Throws Error naming the offending equation.
  void validate() const;

  friend bool operator==(const EquationSystem& a, const EquationSystem& b);

 private:
  std::vector<Equation> equations_;
};

// Parses one equation per line:  VAR = SUMMAND ('+' SUMMAND)*  where a
// summand is a regex optionally followed by a VAR. A lone VAR stands for
// eps.VAR. Blank lines and lines starting with '#' are skipped. Throws
// SyntaxError with a character offset into `text`.
EquationSystem equations_of_text(std::string_view text);
std::string text_of_equations(const EquationSystem& sys);

// Variable names are [A-Z][A-Za-z0-9]*.
bool is_var_name(std::string_view name);

// ---------------------------------------------------------------------------
// Equivalence derivations.

enum class EquivRule : std::uint8_t { E1, E2, E3, E4, E5 };

// One rewrite g => g' under a context of sums. `path` lists the branches
// (false = left, true = right) taken through Alt nodes from the root to
// the rewritten subterm. Forward applies the rule left to right:
//   E1  a.(b + c)   => a.b + a.c
//   E2  a.(b.c)     => (a.b).c
//   E3  a + (b + c) => (a + b) + c
//   E4  b.a + c.a   => (b + c).a
//   E5  a + b       => b + a
struct Rewrite {
  EquivRule rule;
  bool forward = true;
  std::vector<bool> path;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

struct EquivDerivation {
  Regex source;
  Regex target;
  std::vector<Rewrite> steps;
};

// Applies one rewrite; throws Error when the pattern does not match.
Regex apply_rewrite(const Regex& g, const Rewrite& step);
// Applies all steps in order to `source`.
Regex replay(const std::vector<Rewrite>& steps, const Regex& source);

std::string rule_name(EquivRule rule);

// ---------------------------------------------------------------------------
// Normal form.

// Right-hand side with respect to its own variable: an optional self term
// coef.self placed first, followed by the remaining summands. Summands not
// mentioning the self variable keep their original shape.
struct NormalRhs {
  std::string self;
  std::optional<Regex> self_coef;
  std::vector<Regex> rest;

  // Sum of `rest`, right-associated; phi when empty.
  Regex rest_sum() const;
  // coef.self + rest, rendered right-associated. Without a self term this is
  // the rest sum.
  Regex render() const;
};

// Lazy touches only summands mentioning the self variable. Full distributes
// every summand that mentions a variable and merges equal variables, so each
// variable occurs at most once.
enum class NormalMode : std::uint8_t { Lazy, Full };

std::string normal_mode_name(NormalMode m);
NormalMode normal_mode_of_name(std::string_view name);

// Brings `rhs` into normal form for `self`. The derivation rewrites `rhs`
// into `render()` of the result.
std::pair<NormalRhs, EquivDerivation> normalize(
    const Regex& rhs, const std::string& self,
    NormalMode mode = NormalMode::Lazy);

// Fully distributed view: coefficients grouped per variable in order of
// first occurrence, plus the sum of the variable-free summands.
struct FlatRhs {
  std::vector<std::pair<std::string, Regex>> terms;
  std::optional<Regex> tail;

  const Regex* coef(std::string_view var) const;
};
FlatRhs flat_view(const Regex& rhs);

// ---------------------------------------------------------------------------
// Solving.

using Solution = std::map<std::string, Regex>;

enum class Strategy : std::uint8_t { Default, DelgadoMorais, CycleCount };

std::string strategy_name(Strategy s);
Strategy strategy_of_name(std::string_view name);

// Arden's lemma on a normal form with a self term: coef* . rest_sum().
Regex arden_step(const NormalRhs& rhs);

struct ArdenRecord {
  std::string var;
  Regex before;
  EquivDerivation norm;
  Regex coef;
  Regex alpha;
  Regex after;
};

struct EquationUpdate {
  std::string var;
  Regex before;
  Regex substituted;
  EquivDerivation norm;
  Regex after;
};

struct SolutionUpdate {
  std::string var;
  Regex before;
  Regex after;
};

struct SubstRecord {
  std::string var;
  Regex alpha;
  std::vector<EquationUpdate> equations;
  std::vector<SolutionUpdate> solution;
};

struct SolveStep {
  std::optional<ArdenRecord> arden;
  SubstRecord subst;
};

struct SolveTrace {
  std::vector<SolveStep> steps;
};

// Removes the equation of `var`, whose right-hand side must not mention
// `var`. Its right-hand side is substituted into the accumulated solution
// and into every remaining equation; changed equations are re-normalized.
SubstRecord subst_step(EquationSystem& sys, Solution& acc,
                       const std::string& var,
                       NormalMode mode = NormalMode::Lazy);
std::pair<EquationSystem, Solution> subst_step(
    const EquationSystem& sys, const Solution& acc, const std::string& var,
    NormalMode mode = NormalMode::Lazy);

// Picks the next equation to solve. Ties go to the lower index.
std::string next_equation(const EquationSystem& sys, Strategy strategy);

// Solves the system. The result maps every variable to a closed regex.
Solution solve(const EquationSystem& sys, Strategy strategy = Strategy::Default,
               SolveTrace* trace = nullptr, NormalMode mode = NormalMode::Lazy);

// Applies `rules` similarity to every entry. Breaks parse-tree transport.
Solution simplify_solution(const Solution& sol, Rules rules);

// Checks sol(R) and sol(rhs(R)) agree on all words up to `max_len`.
bool check_solution(const EquationSystem& sys, const Solution& sol,
                    std::size_t max_len);

// Delgado-Morais weight of `var` in the current system.
long long delgado_weight(const EquationSystem& sys, const std::string& var);

// Number of simple cycles through `var` in the dependency graph. Counting
// stops at `cap`.
std::size_t cycle_count(const EquationSystem& sys, const std::string& var,
                        std::size_t cap = 1000000);

}  // namespace regeq

#endif  // REGEQ_EQUATIONS_HPP_
