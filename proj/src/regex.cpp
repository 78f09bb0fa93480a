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

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <utility>

namespace regeq {

bool is_symbol_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    if (!is_symbol_char(c)) {
      throw Error(std::string("invalid alphabet symbol '") + c + "'");
    }
    symbols_.push_back(c);
  }
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

bool Alphabet::contains(Symbol x) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), x);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return Alphabet(str() + other.str());
}

// ---------------------------------------------------------------------------
// Nodes

struct Regex::Node {
  Kind kind = Kind::Phi;
  Symbol sym = 0;
  std::string var;
  Regex left = Regex(std::shared_ptr<const Node>());
  Regex right = Regex(std::shared_ptr<const Node>());
  std::size_t hash = 0;
  std::size_t size = 1;
  bool closed = true;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Regex::Regex() : node_(phi().node_) {}

Regex Regex::phi() {
  static const std::shared_ptr<const Node> kNode = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Phi;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Phi));
    return std::shared_ptr<const Node>(n);
  }();
  return Regex(kNode);
}

Regex Regex::eps() {
  static const std::shared_ptr<const Node> kNode = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Eps;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Eps));
    return std::shared_ptr<const Node>(n);
  }();
  return Regex(kNode);
}

Regex Regex::sym(Symbol x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sym;
  n->sym = x;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Sym)),
                static_cast<unsigned char>(x));
  return Regex(std::move(n));
}

Regex Regex::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Var)),
                std::hash<std::string>{}(name));
  n->var = std::move(name);
  n->closed = false;
  return Regex(std::move(n));
}

namespace {

template <typename NodeT>
void set_binary(NodeT& n, Kind kind) {
  n.kind = kind;
  n.hash = mix(mix(mix(0, static_cast<std::size_t>(kind)), n.left.hash()),
               n.right.hash());
  n.size = 1 + n.left.size() + n.right.size();
  n.closed = n.left.is_closed() && n.right.is_closed();
}

}  // namespace

Regex Regex::alt(Regex l, Regex r) {
  auto n = std::make_shared<Node>();
  n->left = std::move(l);
  n->right = std::move(r);
  set_binary(*n, Kind::Alt);
  return Regex(std::move(n));
}

Regex Regex::seq(Regex l, Regex r) {
  auto n = std::make_shared<Node>();
  n->left = std::move(l);
  n->right = std::move(r);
  set_binary(*n, Kind::Seq);
  return Regex(std::move(n));
}

Regex Regex::star(Regex r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Star;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Star)), r.hash());
  n->size = 1 + r.size();
  n->closed = r.is_closed();
  n->left = std::move(r);
  return Regex(std::move(n));
}

Regex Regex::alt_of(const std::vector<Regex>& parts) {
  if (parts.empty()) return phi();
  Regex out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    out = alt(*it, out);
  }
  return out;
}

Regex Regex::seq_of(const std::vector<Regex>& parts) {
  if (parts.empty()) return eps();
  Regex out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    out = seq(*it, out);
  }
  return out;
}

Kind Regex::kind() const { return node_->kind; }
Symbol Regex::symbol() const { return node_->sym; }
const std::string& Regex::var_name() const { return node_->var; }
const Regex& Regex::left() const { return node_->left; }
const Regex& Regex::right() const { return node_->right; }
bool Regex::is_closed() const { return node_->closed; }
std::size_t Regex::hash() const { return node_->hash; }
std::size_t Regex::size() const { return node_->size; }

bool Regex::mentions(std::string_view var) const {
  if (is_closed()) return false;
  switch (kind()) {
    case Kind::Var:
      return var_name() == var;
    case Kind::Alt:
    case Kind::Seq:
      return left().mentions(var) || right().mentions(var);
    case Kind::Star:
      return body().mentions(var);
    default:
      return false;
  }
}

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) {
    return false;
  }
  switch (a.kind()) {
    case Kind::Phi:
    case Kind::Eps:
      return true;
    case Kind::Sym:
      return a.symbol() == b.symbol();
    case Kind::Var:
      return a.var_name() == b.var_name();
    case Kind::Alt:
    case Kind::Seq:
      return a.left() == b.left() && a.right() == b.right();
    case Kind::Star:
      return a.body() == b.body();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

bool nullable_rec(const Regex& r) {
  switch (r.kind()) {
    case Kind::Phi:
    case Kind::Sym:
      return false;
    case Kind::Eps:
    case Kind::Star:
      return true;
    case Kind::Alt:
      return nullable_rec(r.left()) || nullable_rec(r.right());
    case Kind::Seq:
      return nullable_rec(r.left()) && nullable_rec(r.right());
    case Kind::Var:
      break;
  }
  throw Error("nullable: expression contains variables");
}

bool empty_rec(const Regex& r) {
  switch (r.kind()) {
    case Kind::Phi:
      return true;
    case Kind::Eps:
    case Kind::Sym:
    case Kind::Star:
      return false;
    case Kind::Alt:
      return empty_rec(r.left()) && empty_rec(r.right());
    case Kind::Seq:
      return empty_rec(r.left()) || empty_rec(r.right());
    case Kind::Var:
      break;
  }
  throw Error("is_empty_lang: expression contains variables");
}

}  // namespace

bool nullable(const Regex& r) {
  if (!r.is_closed()) throw Error("nullable: expression contains variables");
  return nullable_rec(r);
}

bool is_empty_lang(const Regex& r) {
  if (!r.is_closed()) {
    throw Error("is_empty_lang: expression contains variables");
  }
  return empty_rec(r);
}

std::size_t alphabetic_width(const Regex& r) {
  switch (r.kind()) {
    case Kind::Sym:
      return 1;
    case Kind::Alt:
    case Kind::Seq:
      return alphabetic_width(r.left()) + alphabetic_width(r.right());
    case Kind::Star:
      return alphabetic_width(r.body());
    default:
      return 0;
  }
}

namespace {

void collect_symbols(const Regex& r, std::string& out) {
  switch (r.kind()) {
    case Kind::Sym:
      out.push_back(r.symbol());
      break;
    case Kind::Alt:
    case Kind::Seq:
      collect_symbols(r.left(), out);
      collect_symbols(r.right(), out);
      break;
    case Kind::Star:
      collect_symbols(r.body(), out);
      break;
    default:
      break;
  }
}

void collect_vars(const Regex& r, std::vector<std::string>& out) {
  if (r.is_closed()) return;
  switch (r.kind()) {
    case Kind::Var:
      if (std::find(out.begin(), out.end(), r.var_name()) == out.end()) {
        out.push_back(r.var_name());
      }
      break;
    case Kind::Alt:
    case Kind::Seq:
      collect_vars(r.left(), out);
      collect_vars(r.right(), out);
      break;
    case Kind::Star:
      collect_vars(r.body(), out);
      break;
    default:
      break;
  }
}

}  // namespace

Alphabet symbols_of(const Regex& r) {
  std::string s;
  collect_symbols(r, s);
  return Alphabet(s);
}

std::vector<std::string> vars_of(const Regex& r) {
  std::vector<std::string> out;
  collect_vars(r, out);
  return out;
}

Regex substitute(
    const Regex& r,
    const std::function<const Regex*(const std::string&)>& lookup) {
  if (r.is_closed()) return r;
  switch (r.kind()) {
    case Kind::Var: {
      const Regex* repl = lookup(r.var_name());
      return repl ? *repl : r;
    }
    case Kind::Alt:
      return Regex::alt(substitute(r.left(), lookup),
                        substitute(r.right(), lookup));
    case Kind::Seq:
      return Regex::seq(substitute(r.left(), lookup),
                        substitute(r.right(), lookup));
    case Kind::Star:
      return Regex::star(substitute(r.body(), lookup));
    default:
      return r;
  }
}

// ---------------------------------------------------------------------------
// Language oracle

namespace {

using WordSet = std::set<Word>;

class LangOracle {
 public:
  explicit LangOracle(std::size_t max_len) : max_len_(max_len) {}

  const WordSet& run(const Regex& r) {
    auto it = memo_.find(r.id());
    if (it != memo_.end()) return it->second;
    WordSet out;
    switch (r.kind()) {
      case Kind::Phi:
        break;
      case Kind::Eps:
        out.insert(Word());
        break;
      case Kind::Sym:
        if (max_len_ >= 1) out.insert(Word(1, r.symbol()));
        break;
      case Kind::Alt: {
        out = run(r.left());
        const WordSet& rs = run(r.right());
        out.insert(rs.begin(), rs.end());
        break;
      }
      case Kind::Seq:
        out = concat(run(r.left()), run(r.right()));
        break;
      case Kind::Star: {
        WordSet base = run(r.body());
        base.erase(Word());
        out.insert(Word());
        // Iterate out := {eps} u base.out until nothing new fits.
        WordSet frontier = out;
        while (!frontier.empty()) {
          WordSet next;
          for (const Word& b : base) {
            for (const Word& w : frontier) {
              if (b.size() + w.size() > max_len_) continue;
              Word bw = b + w;
              if (!out.count(bw)) next.insert(std::move(bw));
            }
          }
          out.insert(next.begin(), next.end());
          frontier = std::move(next);
        }
        break;
      }
      case Kind::Var:
        throw Error("lang_upto: expression contains variables");
    }
    return memo_.emplace(r.id(), std::move(out)).first->second;
  }

 private:
  WordSet concat(const WordSet& a, const WordSet& b) const {
    WordSet out;
    for (const Word& u : a) {
      for (const Word& v : b) {
        if (u.size() + v.size() <= max_len_) out.insert(u + v);
      }
    }
    return out;
  }

  std::size_t max_len_;
  // Keyed by node identity; the root keeps all nodes alive.
  std::unordered_map<const void*, WordSet> memo_;
};

}  // namespace

std::set<Word> lang_upto(const Regex& r, std::size_t max_len) {
  LangOracle oracle(max_len);
  return oracle.run(r);
}

// ---------------------------------------------------------------------------
// Canonical representatives

namespace {

std::optional<Symbol> leftmost_symbol(const Regex& r) {
  switch (r.kind()) {
    case Kind::Sym:
      return r.symbol();
    case Kind::Alt:
    case Kind::Seq: {
      auto l = leftmost_symbol(r.left());
      return l ? l : leftmost_symbol(r.right());
    }
    case Kind::Star:
      return leftmost_symbol(r.body());
    default:
      return std::nullopt;
  }
}

struct AltKey {
  std::size_t width;
  std::optional<Symbol> first;
  std::string text;
};

AltKey alt_key(const Regex& r) {
  return {alphabetic_width(r), leftmost_symbol(r), text_of_regex(r)};
}

int compare_keys(const AltKey& a, const AltKey& b) {
  if (a.width != b.width) return a.width < b.width ? -1 : 1;
  if (a.first != b.first) return a.first < b.first ? -1 : 1;
  int c = a.text.compare(b.text);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

class Canonicalizer {
 public:
  explicit Canonicalizer(Rules rules) : full_(rules == Rules::Full) {}

  Regex run(const Regex& r) {
    auto it = memo_.find(r.id());
    if (it != memo_.end()) return it->second;
    Regex out = r;
    switch (r.kind()) {
      case Kind::Alt:
        out = canonical_alt(r);
        break;
      case Kind::Seq:
        out = canonical_seq(r);
        break;
      case Kind::Star:
        out = Regex::star(run(r.body()));
        break;
      default:
        break;
    }
    memo_.emplace(r.id(), out);
    return out;
  }

 private:
  static void summands(const Regex& r, std::vector<Regex>& out) {
    if (r.is(Kind::Alt)) {
      summands(r.left(), out);
      summands(r.right(), out);
    } else {
      out.push_back(r);
    }
  }

  static void factors(const Regex& r, std::vector<Regex>& out) {
    if (r.is(Kind::Seq)) {
      factors(r.left(), out);
      factors(r.right(), out);
    } else {
      out.push_back(r);
    }
  }

  Regex canonical_alt(const Regex& r) {
    std::vector<Regex> parts;
    summands(run(r.left()), parts);
    summands(run(r.right()), parts);
    if (full_) {
      std::erase_if(parts, [](const Regex& p) { return p.is(Kind::Phi); });
      if (parts.empty()) return Regex::phi();
    }
    std::vector<std::pair<AltKey, Regex>> keyed;
    keyed.reserve(parts.size());
    for (auto& p : parts) keyed.emplace_back(alt_key(p), p);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return compare_keys(a.first, b.first) < 0;
    });
    std::vector<Regex> unique;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first.text == keyed[i - 1].first.text &&
          keyed[i].second == keyed[i - 1].second) {
        continue;
      }
      unique.push_back(keyed[i].second);
    }
    return Regex::alt_of(unique);
  }

  Regex canonical_seq(const Regex& r) {
    std::vector<Regex> parts;
    factors(run(r.left()), parts);
    factors(run(r.right()), parts);
    if (full_) {
      std::vector<Regex> kept;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        bool last = i + 1 == parts.size();
        if (!last && parts[i].is(Kind::Eps)) continue;  // eps.r ~ r
        if (!last && parts[i].is(Kind::Phi)) {          // phi.r ~ phi
          kept.push_back(parts[i]);
          break;
        }
        kept.push_back(parts[i]);
      }
      parts = std::move(kept);
    }
    return Regex::seq_of(parts);
  }

  bool full_;
  std::unordered_map<const void*, Regex> memo_;
};

}  // namespace

int compare_alternatives(const Regex& a, const Regex& b) {
  return compare_keys(alt_key(a), alt_key(b));
}

Regex simp(const Regex& r, Rules rules) {
  Canonicalizer c(rules);
  return c.run(r);
}

// ---------------------------------------------------------------------------
// Text

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, bool allow_vars)
      : text_(text), allow_vars_(allow_vars) {}

  Regex parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    Regex r = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool starts_base() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_symbol_char(c) || c == '~' || c == '!' || c == '(' ||
           (allow_vars_ && c >= 'A' && c <= 'Z');
  }

  Regex expr() {
    Regex t = term();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      return Regex::alt(t, expr());
    }
    return t;
  }

  Regex term() {
    std::vector<Regex> fs;
    while (starts_base()) fs.push_back(factor());
    if (fs.empty()) {
      if (pos_ >= text_.size()) {
        throw SyntaxError("unexpected end of input", pos_);
      }
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return Regex::seq_of(fs);
  }

  Regex factor() {
    Regex b = base();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        b = Regex::star(b);
      } else {
        return b;
      }
    }
  }

  Regex base() {
    skip_ws();
    char c = text_[pos_];
    if (is_symbol_char(c)) {
      ++pos_;
      return Regex::sym(c);
    }
    if (c == '~') {
      ++pos_;
      return Regex::eps();
    }
    if (c == '!') {
      ++pos_;
      return Regex::phi();
    }
    if (c == '(') {
      std::size_t open = pos_++;
      skip_ws();
      if (pos_ >= text_.size()) throw SyntaxError("unclosed '('", open);
      Regex r = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw SyntaxError("expected ')'", pos_);
      }
      ++pos_;
      return r;
    }
    // Variable.
    std::size_t start = pos_++;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return Regex::var(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  bool allow_vars_;
  std::size_t pos_ = 0;
};

void print(const Regex& r, std::string& out, const char* seq_sep) {
  auto wrapped = [&](const Regex& sub, bool parens) {
    if (parens) out.push_back('(');
    print(sub, out, seq_sep);
    if (parens) out.push_back(')');
  };
  switch (r.kind()) {
    case Kind::Phi:
      out.push_back('!');
      break;
    case Kind::Eps:
      out.push_back('~');
      break;
    case Kind::Sym:
      out.push_back(r.symbol());
      break;
    case Kind::Var:
      out += r.var_name();
      break;
    case Kind::Alt:
      wrapped(r.left(), r.left().is(Kind::Alt));
      out += " + ";
      wrapped(r.right(), false);
      break;
    case Kind::Seq:
      wrapped(r.left(), r.left().is(Kind::Alt) || r.left().is(Kind::Seq));
      out += seq_sep;
      wrapped(r.right(), r.right().is(Kind::Alt));
      break;
    case Kind::Star:
      wrapped(r.body(), r.body().is(Kind::Alt) || r.body().is(Kind::Seq));
      out.push_back('*');
      break;
  }
}

void seq_factors(const Regex& r, std::vector<Regex>& out) {
  if (r.is(Kind::Seq)) {
    seq_factors(r.left(), out);
    seq_factors(r.right(), out);
  } else {
    out.push_back(r);
  }
}

}  // namespace

Regex regex_of_text(std::string_view text, bool allow_vars) {
  return RegexParser(text, allow_vars).parse();
}

std::string text_of_regex(const Regex& r) {
  std::string out;
  print(r, out, " ");
  return out;
}

std::string dotted_text(const Regex& r) {
  std::string out;
  print(r, out, ".");
  return out;
}

bool equal_modulo_seq_assoc(const Regex& a, const Regex& b) {
  if (a.is(Kind::Seq) || b.is(Kind::Seq)) {
    if (!a.is(Kind::Seq) || !b.is(Kind::Seq)) return false;
    std::vector<Regex> fa, fb;
    seq_factors(a, fa);
    seq_factors(b, fb);
    if (fa.size() != fb.size()) return false;
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (!equal_modulo_seq_assoc(fa[i], fb[i])) return false;
    }
    return true;
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Alt:
      return equal_modulo_seq_assoc(a.left(), b.left()) &&
             equal_modulo_seq_assoc(a.right(), b.right());
    case Kind::Star:
      return equal_modulo_seq_assoc(a.body(), b.body());
    default:
      return a == b;
  }
}

}  // namespace regeq
