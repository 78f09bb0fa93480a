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

#include "regeq/parse_trees.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace regeq {

// ---------------------------------------------------------------------------
// ParseTree

struct ParseTree::Node {
  TreeKind kind = TreeKind::Eps;
  Symbol sym = 0;
  std::vector<ParseTree> kids;
  std::size_t length = 0;
  std::size_t nodes = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

ParseTree::ParseTree() : ParseTree(eps()) {}

ParseTree ParseTree::eps() {
  static const ParseTree e = [] {
    auto n = std::make_shared<Node>();
    n->hash = mix(0, 1);
    return ParseTree(std::move(n));
  }();
  return e;
}

ParseTree ParseTree::sym(Symbol x) {
  auto n = std::make_shared<Node>();
  n->kind = TreeKind::Sym;
  n->sym = x;
  n->length = 1;
  n->hash = mix(mix(0, 2), static_cast<unsigned char>(x));
  return ParseTree(std::move(n));
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> with_kids(TreeKind kind, std::vector<ParseTree> kids) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->hash = mix(0, 3 + static_cast<std::size_t>(kind));
  for (const auto& k : kids) {
    n->length += k.length();
    n->nodes += k.node_count();
    n->hash = mix(n->hash, k.hash());
  }
  n->kids = std::move(kids);
  return n;
}

}  // namespace

ParseTree ParseTree::seq(ParseTree a, ParseTree b) {
  return ParseTree(with_kids<Node>(TreeKind::Seq, {std::move(a), std::move(b)}));
}

ParseTree ParseTree::inl(ParseTree a) {
  return ParseTree(with_kids<Node>(TreeKind::Inl, {std::move(a)}));
}

ParseTree ParseTree::inr(ParseTree a) {
  return ParseTree(with_kids<Node>(TreeKind::Inr, {std::move(a)}));
}

ParseTree ParseTree::list(std::vector<ParseTree> items) {
  return ParseTree(with_kids<Node>(TreeKind::List, std::move(items)));
}

ParseTree ParseTree::fold(ParseTree a) {
  return ParseTree(with_kids<Node>(TreeKind::Fold, {std::move(a)}));
}

ParseTree ParseTree::cons(ParseTree x, const ParseTree& xs) {
  if (!xs.is(TreeKind::List)) throw Error("cons: tail is not a list");
  std::vector<ParseTree> items;
  items.reserve(xs.items().size() + 1);
  items.push_back(std::move(x));
  items.insert(items.end(), xs.items().begin(), xs.items().end());
  return list(std::move(items));
}

TreeKind ParseTree::kind() const { return node_->kind; }
Symbol ParseTree::symbol() const { return node_->sym; }
const ParseTree& ParseTree::left() const { return node_->kids.at(0); }
const ParseTree& ParseTree::right() const { return node_->kids.at(1); }
const std::vector<ParseTree>& ParseTree::items() const { return node_->kids; }
std::size_t ParseTree::length() const { return node_->length; }
std::size_t ParseTree::node_count() const { return node_->nodes; }
std::size_t ParseTree::hash() const { return node_->hash; }

bool operator==(const ParseTree& a, const ParseTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() ||
      a.symbol() != b.symbol() || a.items().size() != b.items().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.items().size(); ++i) {
    if (a.items()[i] != b.items()[i]) return false;
  }
  return true;
}

bool operator<(const ParseTree& a, const ParseTree& b) {
  return sexpr_of_tree(a) < sexpr_of_tree(b);
}

namespace {

void print_tree(const ParseTree& t, std::string& out) {
  switch (t.kind()) {
    case TreeKind::Eps:
      out += "eps";
      return;
    case TreeKind::Sym:
      out += "(sym ";
      out += t.symbol();
      out += ')';
      return;
    case TreeKind::Seq:
      out += "(seq";
      break;
    case TreeKind::Inl:
      out += "(inl";
      break;
    case TreeKind::Inr:
      out += "(inr";
      break;
    case TreeKind::List:
      out += "(list";
      break;
    case TreeKind::Fold:
      out += "(fold";
      break;
  }
  for (const auto& k : t.items()) {
    out += ' ';
    print_tree(k, out);
  }
  out += ')';
}

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  ParseTree parse() {
    ParseTree t = tree();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw SyntaxError("expected an atom", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  ParseTree tree() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] != '(') {
      if (atom() == "eps") return ParseTree::eps();
      throw SyntaxError("unknown tree", start);
    }
    expect('(');
    std::string head = atom();
    ParseTree out;
    if (head == "sym") {
      std::string s = atom();
      if (s.size() != 1 || !is_symbol_char(s[0])) {
        throw SyntaxError("invalid symbol", start);
      }
      out = ParseTree::sym(s[0]);
    } else if (head == "seq") {
      ParseTree a = tree();
      out = ParseTree::seq(a, tree());
    } else if (head == "inl") {
      out = ParseTree::inl(tree());
    } else if (head == "inr") {
      out = ParseTree::inr(tree());
    } else if (head == "fold") {
      out = ParseTree::fold(tree());
    } else if (head == "list") {
      std::vector<ParseTree> items;
      for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) {
        items.push_back(tree());
      }
      out = ParseTree::list(std::move(items));
    } else {
      throw SyntaxError("unknown constructor " + head, start);
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string sexpr_of_tree(const ParseTree& t) {
  std::string out;
  print_tree(t, out);
  return out;
}

ParseTree tree_of_sexpr(std::string_view text) {
  return SexprParser(text).parse();
}

namespace {

void flatten_into(const ParseTree& t, Word& out) {
  if (t.is(TreeKind::Sym)) {
    out += t.symbol();
    return;
  }
  for (const auto& k : t.items()) flatten_into(k, out);
}

}  // namespace

Word flatten(const ParseTree& t) {
  Word out;
  out.reserve(t.length());
  flatten_into(t, out);
  return out;
}

bool typecheck(const EquationSystem& sys, const ParseTree& v, const Regex& g) {
  switch (v.kind()) {
    case TreeKind::Eps:
      return g.is(Kind::Eps);
    case TreeKind::Sym:
      return g.is(Kind::Sym) && g.symbol() == v.symbol();
    case TreeKind::Seq:
      return g.is(Kind::Seq) && typecheck(sys, v.left(), g.left()) &&
             typecheck(sys, v.right(), g.right());
    case TreeKind::Inl:
      return g.is(Kind::Alt) && typecheck(sys, v.left(), g.left());
    case TreeKind::Inr:
      return g.is(Kind::Alt) && typecheck(sys, v.left(), g.right());
    case TreeKind::List:
      return g.is(Kind::Star) &&
             std::all_of(v.items().begin(), v.items().end(),
                         [&](const ParseTree& k) {
                           return typecheck(sys, k, g.body());
                         });
    case TreeKind::Fold: {
      if (!g.is(Kind::Var)) return false;
      auto i = sys.index_of(g.var_name());
      return i && typecheck(sys, v.left(), sys[*i].rhs);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Grammar {
 public:
  explicit Grammar(const EquationSystem& sys) : sys_(sys) {
    for (const auto& eq : sys.equations()) var_null_[eq.var] = false;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& eq : sys.equations()) {
        memo_null_.clear();
        if (!var_null_[eq.var] && nullable(eq.rhs)) {
          var_null_[eq.var] = true;
          changed = true;
        }
      }
    }
    memo_null_.clear();
  }

  const Regex& rhs(const std::string& var) const {
    auto i = sys_.index_of(var);
    if (!i) throw Error("no equation for variable " + var);
    return sys_[*i].rhs;
  }

  bool nullable(const Regex& g) {
    auto it = memo_null_.find(g.id());
    if (it != memo_null_.end()) return it->second;
    bool out = false;
    switch (g.kind()) {
      case Kind::Phi:
      case Kind::Sym:
        out = false;
        break;
      case Kind::Eps:
      case Kind::Star:
        out = true;
        break;
      case Kind::Alt:
        out = nullable(g.left()) || nullable(g.right());
        break;
      case Kind::Seq:
        out = nullable(g.left()) && nullable(g.right());
        break;
      case Kind::Var: {
        auto v = var_null_.find(g.var_name());
        if (v == var_null_.end()) {
          throw Error("no equation for variable " + g.var_name());
        }
        out = v->second;
        break;
      }
    }
    memo_null_.emplace(g.id(), out);
    return out;
  }

  ParseTree mk_empty(const Regex& g) {
    std::set<std::string> visiting;
    return mk_empty(g, visiting);
  }

  Regex deriv(const Regex& g, Symbol x) {
    switch (g.kind()) {
      case Kind::Phi:
      case Kind::Eps:
        return Regex::phi();
      case Kind::Sym:
        return g.symbol() == x ? Regex::eps() : Regex::phi();
      case Kind::Alt:
        return Regex::alt(deriv(g.left(), x), deriv(g.right(), x));
      case Kind::Seq: {
        Regex head = Regex::seq(deriv(g.left(), x), g.right());
        if (!nullable(g.left())) return head;
        return Regex::alt(head, deriv(g.right(), x));
      }
      case Kind::Star:
        return Regex::seq(deriv(g.body(), x), g);
      case Kind::Var:
        return deriv(rhs(g.var_name()), x);
    }
    return Regex::phi();
  }

  ParseTree inj(const Regex& g, Symbol x, const ParseTree& v) {
    auto bad = [&]() -> ParseTree {
      throw Error("inj: tree " + sexpr_of_tree(v) +
                  " does not match the derivative of " + text_of_regex(g));
    };
    switch (g.kind()) {
      case Kind::Sym:
        if (g.symbol() == x && v.is(TreeKind::Eps)) return ParseTree::sym(x);
        return bad();
      case Kind::Alt:
        if (v.is(TreeKind::Inl)) {
          return ParseTree::inl(inj(g.left(), x, v.left()));
        }
        if (v.is(TreeKind::Inr)) {
          return ParseTree::inr(inj(g.right(), x, v.left()));
        }
        return bad();
      case Kind::Seq:
        if (!nullable(g.left())) {
          if (!v.is(TreeKind::Seq)) return bad();
          return ParseTree::seq(inj(g.left(), x, v.left()), v.right());
        }
        if (v.is(TreeKind::Inl) && v.left().is(TreeKind::Seq)) {
          return ParseTree::seq(inj(g.left(), x, v.left().left()),
                                v.left().right());
        }
        if (v.is(TreeKind::Inr)) {
          return ParseTree::seq(mk_empty(g.left()),
                                inj(g.right(), x, v.left()));
        }
        return bad();
      case Kind::Star:
        if (!v.is(TreeKind::Seq) || !v.right().is(TreeKind::List)) return bad();
        return ParseTree::cons(inj(g.body(), x, v.left()), v.right());
      case Kind::Var:
        return ParseTree::fold(inj(rhs(g.var_name()), x, v));
      default:
        return bad();
    }
  }

 private:
  ParseTree mk_empty(const Regex& g, std::set<std::string>& visiting) {
    switch (g.kind()) {
      case Kind::Eps:
        return ParseTree::eps();
      case Kind::Star:
        return ParseTree::list({});
      case Kind::Seq: {
        ParseTree a = mk_empty(g.left(), visiting);
        return ParseTree::seq(a, mk_empty(g.right(), visiting));
      }
      case Kind::Alt:
        if (nullable(g.left())) {
          return ParseTree::inl(mk_empty(g.left(), visiting));
        }
        return ParseTree::inr(mk_empty(g.right(), visiting));
      case Kind::Var: {
        const std::string& v = g.var_name();
        if (!visiting.insert(v).second) {
          throw Error("mk_empty: empty tree construction revisits " + v);
        }
        ParseTree t = ParseTree::fold(mk_empty(rhs(v), visiting));
        visiting.erase(v);
        return t;
      }
      default:
        throw NoParseError("mk_empty: " + text_of_regex(g) +
                           " does not match the empty word");
    }
  }

  const EquationSystem& sys_;
  std::map<std::string, bool> var_null_;
  std::unordered_map<const void*, bool> memo_null_;
};

bool guarded(Grammar& gr, const Regex& g, bool prefix_nullable) {
  switch (g.kind()) {
    case Kind::Var:
      return !prefix_nullable;
    case Kind::Alt:
      return guarded(gr, g.left(), prefix_nullable) &&
             guarded(gr, g.right(), prefix_nullable);
    case Kind::Seq:
      return guarded(gr, g.left(), prefix_nullable) &&
             guarded(gr, g.right(), prefix_nullable && gr.nullable(g.left()));
    case Kind::Star:
      return guarded(gr, g.body(), prefix_nullable);
    default:
      return true;
  }
}

void require_guarded(const EquationSystem& sys) {
  if (!is_guarded(sys)) {
    throw Error("equation system is not guarded: a variable is reachable "
                "through a nullable prefix");
  }
}

}  // namespace

bool is_guarded(const EquationSystem& sys) {
  Grammar gr(sys);
  for (const auto& eq : sys.equations()) {
    if (!guarded(gr, eq.rhs, true)) return false;
  }
  return true;
}

bool nullable_in(const EquationSystem& sys, const Regex& g) {
  return Grammar(sys).nullable(g);
}

ParseTree mk_empty(const EquationSystem& sys, const Regex& g) {
  Grammar gr(sys);
  return gr.mk_empty(g);
}

Regex deriv_rhs(const EquationSystem& sys, const Regex& g, Symbol x) {
  require_guarded(sys);
  return Grammar(sys).deriv(g, x);
}

ParseTree inj(const EquationSystem& sys, const Regex& g, Symbol x,
              const ParseTree& v) {
  return Grammar(sys).inj(g, x, v);
}

ParseTree parse(const EquationSystem& sys, const Regex& g, const Word& w) {
  require_guarded(sys);
  Grammar gr(sys);
  std::vector<Regex> ds{g};
  ds.reserve(w.size() + 1);
  for (Symbol x : w) ds.push_back(gr.deriv(ds.back(), x));
  if (!gr.nullable(ds.back())) {
    throw NoParseError("no parse for \"" + w + "\"");
  }
  ParseTree v = gr.mk_empty(ds.back());
  for (std::size_t i = w.size(); i-- > 0;) v = gr.inj(ds[i], w[i], v);
  return v;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

class Enumerator {
 public:
  explicit Enumerator(const EquationSystem& sys) : sys_(sys) {
    for (const auto& eq : sys.equations()) var_min_[eq.var] = kInf;
    for (bool changed = true; changed;) {
      changed = false;
      min_memo_.clear();
      for (const auto& eq : sys.equations()) {
        std::size_t m = std::min(kInf, 1 + min_nodes(eq.rhs));
        if (m < var_min_[eq.var]) {
          var_min_[eq.var] = m;
          changed = true;
        }
      }
    }
    min_memo_.clear();
  }

  const std::vector<ParseTree>& gen(const Regex& g, std::size_t l,
                                    std::size_t n) {
    Key key{g.id(), l, n};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<ParseTree> out;
    if (n >= min_nodes(g)) fill(g, l, n, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  struct Key {
    const void* id;
    std::size_t l, n;
    bool operator==(const Key& o) const {
      return id == o.id && l == o.l && n == o.n;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return mix(mix(std::hash<const void*>()(k.id), k.l), k.n);
    }
  };

  std::size_t min_nodes(const Regex& g) {
    auto it = min_memo_.find(g.id());
    if (it != min_memo_.end()) return it->second;
    std::size_t out = kInf;
    switch (g.kind()) {
      case Kind::Phi:
        break;
      case Kind::Eps:
      case Kind::Sym:
      case Kind::Star:
        out = 1;
        break;
      case Kind::Alt:
        out = std::min(kInf, 1 + std::min(min_nodes(g.left()),
                                          min_nodes(g.right())));
        break;
      case Kind::Seq:
        out = std::min(kInf, 1 + min_nodes(g.left()) + min_nodes(g.right()));
        break;
      case Kind::Var: {
        auto v = var_min_.find(g.var_name());
        if (v == var_min_.end()) {
          throw Error("no equation for variable " + g.var_name());
        }
        out = v->second;
        break;
      }
    }
    min_memo_.emplace(g.id(), out);
    return out;
  }

  void fill(const Regex& g, std::size_t l, std::size_t n,
            std::vector<ParseTree>& out) {
    switch (g.kind()) {
      case Kind::Phi:
        return;
      case Kind::Eps:
        if (l == 0 && n == 1) out.push_back(ParseTree::eps());
        return;
      case Kind::Sym:
        if (l == 1 && n == 1) out.push_back(ParseTree::sym(g.symbol()));
        return;
      case Kind::Alt:
        for (const auto& t : gen(g.left(), l, n - 1)) {
          out.push_back(ParseTree::inl(t));
        }
        for (const auto& t : gen(g.right(), l, n - 1)) {
          out.push_back(ParseTree::inr(t));
        }
        return;
      case Kind::Seq:
        for (std::size_t la = 0; la <= l; ++la) {
          for (std::size_t na = 1; na + 2 <= n; ++na) {
            const auto& as = gen(g.left(), la, na);
            if (as.empty()) continue;
            const auto& bs = gen(g.right(), l - la, n - 1 - na);
            for (const auto& a : as) {
              for (const auto& b : bs) out.push_back(ParseTree::seq(a, b));
            }
          }
        }
        return;
      case Kind::Star:
        for (const auto& items : lists(g.body(), l, n - 1)) {
          out.push_back(ParseTree::list(items));
        }
        return;
      case Kind::Var: {
        auto i = sys_.index_of(g.var_name());
        for (const auto& t : gen(sys_[*i].rhs, l, n - 1)) {
          out.push_back(ParseTree::fold(t));
        }
        return;
      }
    }
  }

  // Item sequences of total length l and total node count n.
  const std::vector<std::vector<ParseTree>>& lists(const Regex& body,
                                                   std::size_t l,
                                                   std::size_t n) {
    Key key{body.id(), l, n};
    auto it = list_memo_.find(key);
    if (it != list_memo_.end()) return it->second;
    std::vector<std::vector<ParseTree>> out;
    if (l == 0 && n == 0) {
      out.emplace_back();
    } else {
      for (std::size_t la = 0; la <= l; ++la) {
        for (std::size_t na = 1; na <= n; ++na) {
          const auto& heads = gen(body, la, na);
          if (heads.empty()) continue;
          const auto& tails = lists(body, l - la, n - na);
          for (const auto& h : heads) {
            for (const auto& t : tails) {
              std::vector<ParseTree> items{h};
              items.insert(items.end(), t.begin(), t.end());
              out.push_back(std::move(items));
            }
          }
        }
      }
    }
    return list_memo_.emplace(key, std::move(out)).first->second;
  }

  const EquationSystem& sys_;
  std::map<std::string, std::size_t> var_min_;
  std::unordered_map<const void*, std::size_t> min_memo_;
  std::unordered_map<Key, std::vector<ParseTree>, KeyHash> memo_;
  std::unordered_map<Key, std::vector<std::vector<ParseTree>>, KeyHash>
      list_memo_;
};

}  // namespace

std::vector<ParseTree> enum_trees(const EquationSystem& sys, const Regex& g,
                                  std::size_t max_len, std::size_t max_nodes) {
  Enumerator e(sys);
  std::vector<std::pair<std::string, ParseTree>> keyed;
  for (std::size_t l = 0; l <= max_len; ++l) {
    for (std::size_t n = 1; n <= max_nodes; ++n) {
      for (const auto& t : e.gen(g, l, n)) {
        keyed.emplace_back(sexpr_of_tree(t), t);
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ParseTree> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

bool is_ambiguous_bounded(const EquationSystem& sys, const Regex& g,
                          std::size_t max_len, std::size_t max_nodes) {
  Enumerator e(sys);
  std::unordered_set<Word> seen;
  for (std::size_t l = 0; l <= max_len; ++l) {
    for (std::size_t n = 1; n <= max_nodes; ++n) {
      for (const auto& t : e.gen(g, l, n)) {
        if (!seen.insert(flatten(t)).second) return true;
      }
    }
  }
  return false;
}

bool is_non_overlapping(const EquationSystem& sys) {
  for (const auto& eq : sys.equations()) {
    std::vector<Regex> parts;
    std::vector<Regex> stack{eq.rhs};
    while (!stack.empty()) {
      Regex g = stack.back();
      stack.pop_back();
      if (g.is(Kind::Alt)) {
        stack.push_back(g.right());
        stack.push_back(g.left());
      } else {
        parts.push_back(g);
      }
    }
    std::set<Symbol> heads;
    int tails = 0;
    for (const Regex& p : parts) {
      Symbol head = 0;
      if (p.is(Kind::Seq) && p.left().is(Kind::Sym) &&
          p.right().is(Kind::Var)) {
        head = p.left().symbol();
      } else if (p.is(Kind::Eps) || p.is(Kind::Phi)) {
        ++tails;
        continue;
      } else if (p.is(Kind::Sym)) {
        ++tails;
        head = p.symbol();
      } else {
        return false;
      }
      if (!heads.insert(head).second) return false;
    }
    if (tails > 1) return false;
  }
  return true;
}

}  // namespace regeq
