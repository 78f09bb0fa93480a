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

#ifndef REGEQ_COERCIONS_HPP_
#define REGEQ_COERCIONS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "regeq/equations.hpp"
#include "regeq/parse_trees.hpp"
#include "regeq/regex.hpp"

namespace regeq {

// Constructors available in patterns and constructor terms. Nil and Cons
// view a list tree as empty or as head and tail.
enum class ConKind : std::uint8_t { Eps, Sym, Seq, Inl, Inr, Fold, Nil, Cons };

class Pattern {
 public:
  static Pattern var(std::string name);
  // A Sym pattern matches only the symbol `sym`.
  static Pattern con(ConKind kind, std::vector<Pattern> args = {},
                     Symbol sym = 0);

  bool is_var() const { return node_->is_var; }
  const std::string& name() const { return node_->name; }
  ConKind con_kind() const { return node_->con; }
  Symbol symbol() const { return node_->sym; }
  const std::vector<Pattern>& args() const { return node_->args; }

  // Names bound by the pattern, left to right.
  std::vector<std::string> bound() const;

 private:
  struct Node {
    bool is_var = false;
    std::string name;
    ConKind con = ConKind::Eps;
    Symbol sym = 0;
    std::vector<Pattern> args;
  };
  explicit Pattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// True when some tree matches both patterns.
bool patterns_overlap(const Pattern& p, const Pattern& q);

enum class TermKind : std::uint8_t { Value, Var, Lam, App, Rec, Case, Con };

// First-order coercion terms.
class CoercionTerm {
 public:
  using Branch = std::pair<Pattern, CoercionTerm>;

  static CoercionTerm value(ParseTree v);
  static CoercionTerm var(std::string name);
  static CoercionTerm lam(std::string name, CoercionTerm body);
  static CoercionTerm app(CoercionTerm f, CoercionTerm arg);
  static CoercionTerm rec(std::string name, CoercionTerm body);
  // Throws Error when a pattern is not linear or two patterns overlap.
  static CoercionTerm case_of(CoercionTerm scrutinee,
                              std::vector<Branch> branches);
  static CoercionTerm con(ConKind kind, std::vector<CoercionTerm> args = {},
                          Symbol sym = 0);

  TermKind kind() const { return node_->kind; }
  bool is(TermKind k) const { return kind() == k; }
  const ParseTree& tree() const { return node_->tree; }
  // Variable name, or the binder of Lam and Rec.
  const std::string& name() const { return node_->name; }
  ConKind con_kind() const { return node_->con; }
  Symbol symbol() const { return node_->sym; }
  // Lam/Rec body is args()[0]; App is (function, argument); Case has the
  // scrutinee first; Con holds its arguments.
  const std::vector<CoercionTerm>& args() const { return node_->args; }
  const std::vector<Pattern>& patterns() const { return node_->patterns; }

  // Replaces free occurrences of the named variables by closed terms.
  CoercionTerm subst(
      const std::vector<std::pair<std::string, CoercionTerm>>& env) const;

 private:
  struct Node {
    TermKind kind = TermKind::Value;
    ParseTree tree;
    std::string name;
    ConKind con = ConKind::Eps;
    Symbol sym = 0;
    std::vector<CoercionTerm> args;
    std::vector<Pattern> patterns;
  };
  explicit CoercionTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string sexpr_of_pattern(const Pattern& p);
// (val T) | name | (lam v T) | (app T T) | (rec f T) | (case T (pat T) ...)
// | (con K T ...)
std::string sexpr_of_term(const CoercionTerm& c);

// Big-step evaluation of a closed term to a value or a function.
CoercionTerm eval_term(const CoercionTerm& c);
// Evaluates c applied to v. Throws Error on match failure, unbound
// variables or when the result is not a tree.
ParseTree eval(const CoercionTerm& c, const ParseTree& v);

struct BijectivePair {
  CoercionTerm forward;
  CoercionTerm inverse;
  Regex domain;
  Regex codomain;
};

CoercionTerm identity_coercion();
// x => g (f x)
CoercionTerm compose(const CoercionTerm& f, const CoercionTerm& g);

// Trees of R under R = s.R + alpha (Fold at the root) to trees of
// s* . alpha, and back.
BijectivePair arden_coercion(const Regex& s, const Regex& alpha,
                             const std::string& var = "R");
// Same for the rendered normal form; without remaining summands the
// equation is R = s.R.
BijectivePair arden_coercion(const NormalRhs& nf);

// Coercion for one rewrite applied in its direction at its path.
CoercionTerm rewrite_coercion(const Rewrite& step);
BijectivePair equiv_coercion(const EquivDerivation& d);

// Trees of g to trees of g with every Var `var` leaf replaced by alpha:
// the Fold at each such leaf is dropped. The inverse restores it. Throws
// Error when `var` occurs under a star.
BijectivePair subst_coercion(const Regex& g, const std::string& var,
                             const Regex& alpha);

struct CoerciveResult {
  Solution solution;
  std::map<std::string, ParseTree> trees;
};

// Solves `sys` and transports each tree of trees[R] : R to a tree of the
// solution of R with the same flattening.
CoerciveResult coercive_solve(const EquationSystem& sys,
                              const std::map<std::string, ParseTree>& trees,
                              Strategy strategy = Strategy::Default,
                              NormalMode mode = NormalMode::Lazy);

}  // namespace regeq

#endif  // REGEQ_COERCIONS_HPP_
