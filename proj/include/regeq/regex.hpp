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

#ifndef REGEQ_REGEX_HPP_
#define REGEQ_REGEX_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regeq {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Symbol = char;
using Word = std::string;

// Symbols are single characters from [a-z0-9].
bool is_symbol_char(char c);

// A totally ordered, nonempty set of symbols. Order is character order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool contains(Symbol x) const;
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Alphabet merged(const Alphabet& other) const;
  std::string str() const { return {symbols_.begin(), symbols_.end()}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Symbol> symbols_;
};

enum class Kind : std::uint8_t { Phi, Eps, Sym, Var, Alt, Seq, Star };

// Immutable regular expression tree. Besides the six regular operators a
// tree may contain `Var` leaves naming equation variables; such trees are
// right-hand sides of regular equations. Operations on plain regular
// expressions require `is_closed()`.
//
// Construction never simplifies: the tree is exactly what was built.
class Regex {
 public:
  // Defaults to phi.
  Regex();

  static Regex phi();
  static Regex eps();
  static Regex sym(Symbol x);
  static Regex var(std::string name);
  static Regex alt(Regex l, Regex r);
  static Regex seq(Regex l, Regex r);
  static Regex star(Regex r);

  // Right-associated sum / concatenation of the given parts. Empty input
  // yields phi for sums and eps for concatenations.
  static Regex alt_of(const std::vector<Regex>& parts);
  static Regex seq_of(const std::vector<Regex>& parts);

  Kind kind() const;
  Symbol symbol() const;
  const std::string& var_name() const;
  const Regex& left() const;
  const Regex& right() const;
  // The body of a Star.
  const Regex& body() const { return left(); }

  bool is(Kind k) const { return kind() == k; }
  // No Var leaves.
  bool is_closed() const;
  bool mentions(std::string_view var) const;
  std::size_t hash() const;
  // Number of tree nodes.
  std::size_t size() const;

  friend bool operator==(const Regex& a, const Regex& b);
  friend bool operator!=(const Regex& a, const Regex& b) { return !(a == b); }

  // Identity of the underlying node; used for memo tables.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct RegexHash {
  std::size_t operator()(const Regex& r) const { return r.hash(); }
};

// True iff eps is in L(r). Requires a closed expression.
bool nullable(const Regex& r);

// True iff L(r) is empty. Requires a closed expression.
bool is_empty_lang(const Regex& r);

// Number of symbol leaves.
std::size_t alphabetic_width(const Regex& r);

// Symbols occurring in r.
Alphabet symbols_of(const Regex& r);

// Names of the variables occurring in r, in first-occurrence order.
std::vector<std::string> vars_of(const Regex& r);

// Replaces every Var leaf for which `lookup` returns an expression.
Regex substitute(const Regex& r,
                 const std::function<const Regex*(const std::string&)>& lookup);

// L(r) restricted to words of length <= max_len, computed directly from the
// set semantics (union, bounded concatenation, bounded iteration). This is
// the reference oracle and shares no code with derivatives.
std::set<Word> lang_upto(const Regex& r, std::size_t max_len);

// Similarity rule sets for canonical representatives.
enum class Rules : std::uint8_t {
  // Idempotency, commutativity, associativity of +.
  Basic,
  // Basic plus eps.r ~ r, phi.r ~ phi, phi+r ~ r, r+phi ~ r.
  Full,
};

// Canonical representative of r's similarity class: right-associated
// concatenations, alternatives flattened, sorted and deduplicated; with
// Rules::Full the elimination rules are applied exhaustively.
Regex simp(const Regex& r, Rules rules);

// Total order used to sort alternatives: alphabetic width, then leftmost
// symbol (none sorts first), then canonical text.
int compare_alternatives(const Regex& a, const Regex& b);

// Textual syntax:
//   expr   := term ('+' term)*          right-associative
//   term   := factor+                   juxtaposition, right-associative
//   factor := base '*'*
//   base   := [a-z0-9] | '~' (eps) | '!' (phi) | '(' expr ')'
// With `allow_vars`, base also accepts [A-Z][A-Za-z0-9]* as a variable.
Regex regex_of_text(std::string_view text, bool allow_vars = false);
std::string text_of_regex(const Regex& r);

// Rendering with explicit '.' for concatenation, for diagnostics.
std::string dotted_text(const Regex& r);

// Compares two expressions ignoring the association of concatenation.
bool equal_modulo_seq_assoc(const Regex& a, const Regex& b);

}  // namespace regeq

#endif  // REGEQ_REGEX_HPP_
