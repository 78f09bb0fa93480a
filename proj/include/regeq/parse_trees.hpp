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

#ifndef REGEQ_PARSE_TREES_HPP_
#define REGEQ_PARSE_TREES_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regeq/equations.hpp"
#include "regeq/regex.hpp"

namespace regeq {

// Raised when a word has no parse tree or an empty tree does not exist.
class NoParseError : public Error {
 public:
  using Error::Error;
};

enum class TreeKind : std::uint8_t { Eps, Sym, Seq, Inl, Inr, List, Fold };

// Immutable parse tree value.
class ParseTree {
 public:
  // Defaults to Eps.
  ParseTree();

  static ParseTree eps();
  static ParseTree sym(Symbol x);
  static ParseTree seq(ParseTree a, ParseTree b);
  static ParseTree inl(ParseTree a);
  static ParseTree inr(ParseTree a);
  static ParseTree list(std::vector<ParseTree> items);
  static ParseTree fold(ParseTree a);
  // x : xs. Requires `xs` to be a list.
  static ParseTree cons(ParseTree x, const ParseTree& xs);

  TreeKind kind() const;
  bool is(TreeKind k) const { return kind() == k; }
  Symbol symbol() const;
  // Seq components; the child of Inl, Inr and Fold is left().
  const ParseTree& left() const;
  const ParseTree& right() const;
  const std::vector<ParseTree>& items() const;

  // Length of the flattened word.
  std::size_t length() const;
  // Constructor count; a list counts one plus its items.
  std::size_t node_count() const;
  std::size_t hash() const;

  friend bool operator==(const ParseTree& a, const ParseTree& b);
  friend bool operator!=(const ParseTree& a, const ParseTree& b) {
    return !(a == b);
  }
  // Orders by s-expression text.
  friend bool operator<(const ParseTree& a, const ParseTree& b);

 private:
  struct Node;
  explicit ParseTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseTreeHash {
  std::size_t operator()(const ParseTree& t) const { return t.hash(); }
};

// eps | (sym x) | (seq T T) | (inl T) | (inr T) | (list T ...) | (fold T)
std::string sexpr_of_tree(const ParseTree& t);
ParseTree tree_of_sexpr(std::string_view text);

Word flatten(const ParseTree& t);

// E |- v : g. Var leaves of g refer to equations of `sys`.
bool typecheck(const EquationSystem& sys, const ParseTree& v, const Regex& g);

// True iff every variable occurrence is preceded by a non-nullable prefix.
bool is_guarded(const EquationSystem& sys);

// Nullability where variables take their least-fixpoint value in `sys`.
bool nullable_in(const EquationSystem& sys, const Regex& g);

// Empty parse tree; prefers the left alternative. Throws NoParseError when
// g is not nullable and Error when construction revisits a variable.
ParseTree mk_empty(const EquationSystem& sys, const Regex& g);

// Derivative with variables unfolded through their equations. Throws Error
// when the system is not guarded.
Regex deriv_rhs(const EquationSystem& sys, const Regex& g, Symbol x);

// Maps a tree of deriv_rhs(sys, g, x) to a tree of g for x . flatten(v).
ParseTree inj(const EquationSystem& sys, const Regex& g, Symbol x,
              const ParseTree& v);

// A parse tree of `w` against g; throws NoParseError if w is not in the
// language.
ParseTree parse(const EquationSystem& sys, const Regex& g, const Word& w);

// All trees of g with flattened length <= max_len and node count <=
// max_nodes, sorted by s-expression.
std::vector<ParseTree> enum_trees(const EquationSystem& sys, const Regex& g,
                                  std::size_t max_len, std::size_t max_nodes);

// Two distinct enumerated trees with the same flattening exist. A false
// result only means no witness within the bounds.
bool is_ambiguous_bounded(const EquationSystem& sys, const Regex& g,
                          std::size_t max_len, std::size_t max_nodes);

// Every equation has the shape x1.R1 + ... + xn.Rn + t with distinct
// symbols xi and t one of eps, phi, or a symbol distinct from the xi (read
// as y.S with S = eps).
bool is_non_overlapping(const EquationSystem& sys);

}  // namespace regeq

#endif  // REGEQ_PARSE_TREES_HPP_
