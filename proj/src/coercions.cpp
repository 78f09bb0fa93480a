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

#include "regeq/coercions.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace regeq {

// ---------------------------------------------------------------------------
// Patterns

Pattern Pattern::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->name = std::move(name);
  return Pattern(std::move(n));
}

namespace {

std::size_t arity(ConKind k) {
  switch (k) {
    case ConKind::Eps:
    case ConKind::Sym:
    case ConKind::Nil:
      return 0;
    case ConKind::Inl:
    case ConKind::Inr:
    case ConKind::Fold:
      return 1;
    case ConKind::Seq:
    case ConKind::Cons:
      return 2;
  }
  return 0;
}

const char* con_name(ConKind k) {
  switch (k) {
    case ConKind::Eps: return "Eps";
    case ConKind::Sym: return "Sym";
    case ConKind::Seq: return "Seq";
    case ConKind::Inl: return "Inl";
    case ConKind::Inr: return "Inr";
    case ConKind::Fold: return "Fold";
    case ConKind::Nil: return "Nil";
    case ConKind::Cons: return "Cons";
  }
  return "?";
}

}  // namespace

Pattern Pattern::con(ConKind kind, std::vector<Pattern> args, Symbol sym) {
  if (args.size() != arity(kind)) {
    throw Error(std::string("pattern ") + con_name(kind) +
                ": wrong number of arguments");
  }
  auto n = std::make_shared<Node>();
  n->con = kind;
  n->sym = sym;
  n->args = std::move(args);
  return Pattern(std::move(n));
}

std::vector<std::string> Pattern::bound() const {
  if (is_var()) return {name()};
  std::vector<std::string> out;
  for (const auto& a : args()) {
    auto b = a.bound();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

bool patterns_overlap(const Pattern& p, const Pattern& q) {
  if (p.is_var() || q.is_var()) return true;
  if (p.con_kind() != q.con_kind()) return false;
  if (p.con_kind() == ConKind::Sym && p.symbol() != q.symbol()) return false;
  for (std::size_t i = 0; i < p.args().size(); ++i) {
    if (!patterns_overlap(p.args()[i], q.args()[i])) return false;
  }
  return true;
}

std::string sexpr_of_pattern(const Pattern& p) {
  if (p.is_var()) return p.name();
  if (p.con_kind() == ConKind::Sym) return std::string("(Sym ") + p.symbol() + ")";
  if (p.args().empty()) return con_name(p.con_kind());
  std::string out = std::string("(") + con_name(p.con_kind());
  for (const auto& a : p.args()) out += " " + sexpr_of_pattern(a);
  return out + ")";
}

// ---------------------------------------------------------------------------
// Terms

CoercionTerm CoercionTerm::value(ParseTree v) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Value;
  n->tree = std::move(v);
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::lam(std::string name, CoercionTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->name = std::move(name);
  n->args.push_back(std::move(body));
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::app(CoercionTerm f, CoercionTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->args = {std::move(f), std::move(arg)};
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::rec(std::string name, CoercionTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Rec;
  n->name = std::move(name);
  n->args.push_back(std::move(body));
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::case_of(CoercionTerm scrutinee,
                                   std::vector<Branch> branches) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Case;
  n->args.push_back(std::move(scrutinee));
  for (auto& [p, body] : branches) {
    auto names = p.bound();
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
      throw Error("case: pattern " + sexpr_of_pattern(p) + " is not linear");
    }
    for (const auto& q : n->patterns) {
      if (patterns_overlap(p, q)) {
        throw Error("case: patterns " + sexpr_of_pattern(q) + " and " +
                    sexpr_of_pattern(p) + " overlap");
      }
    }
    n->patterns.push_back(p);
    n->args.push_back(std::move(body));
  }
  return CoercionTerm(std::move(n));
}

CoercionTerm CoercionTerm::con(ConKind kind, std::vector<CoercionTerm> args,
                               Symbol sym) {
  if (args.size() != arity(kind)) {
    throw Error(std::string("term ") + con_name(kind) +
                ": wrong number of arguments");
  }
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Con;
  n->con = kind;
  n->sym = sym;
  n->args = std::move(args);
  return CoercionTerm(std::move(n));
}

namespace {

using Env = std::vector<std::pair<std::string, CoercionTerm>>;

Env without(const Env& env, const std::vector<std::string>& names) {
  Env out;
  for (const auto& b : env) {
    if (std::find(names.begin(), names.end(), b.first) == names.end()) {
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace

CoercionTerm CoercionTerm::subst(const Env& env) const {
  if (env.empty()) return *this;
  switch (kind()) {
    case TermKind::Value:
      return *this;
    case TermKind::Var:
      for (const auto& [k, v] : env) {
        if (k == name()) return v;
      }
      return *this;
    case TermKind::Lam:
    case TermKind::Rec: {
      Env inner = without(env, {name()});
      if (inner.empty()) return *this;
      CoercionTerm body = args()[0].subst(inner);
      return is(TermKind::Lam) ? lam(name(), body) : rec(name(), body);
    }
    case TermKind::App:
    case TermKind::Con:
    case TermKind::Case: {
      auto n = std::make_shared<Node>(*node_);
      bool changed = false;
      for (std::size_t i = 0; i < n->args.size(); ++i) {
        Env inner = (kind() == TermKind::Case && i > 0)
                        ? without(env, patterns()[i - 1].bound())
                        : env;
        CoercionTerm a = n->args[i].subst(inner);
        if (a.node_ != n->args[i].node_) {
          n->args[i] = std::move(a);
          changed = true;
        }
      }
      return changed ? CoercionTerm(std::move(n)) : *this;
    }
  }
  return *this;
}

std::string sexpr_of_term(const CoercionTerm& c) {
  switch (c.kind()) {
    case TermKind::Value:
      return "(val " + sexpr_of_tree(c.tree()) + ")";
    case TermKind::Var:
      return c.name();
    case TermKind::Lam:
      return "(lam " + c.name() + " " + sexpr_of_term(c.args()[0]) + ")";
    case TermKind::Rec:
      return "(rec " + c.name() + " " + sexpr_of_term(c.args()[0]) + ")";
    case TermKind::App:
      return "(app " + sexpr_of_term(c.args()[0]) + " " +
             sexpr_of_term(c.args()[1]) + ")";
    case TermKind::Case: {
      std::string out = "(case " + sexpr_of_term(c.args()[0]);
      for (std::size_t i = 0; i < c.patterns().size(); ++i) {
        out += " (" + sexpr_of_pattern(c.patterns()[i]) + " " +
               sexpr_of_term(c.args()[i + 1]) + ")";
      }
      return out + ")";
    }
    case TermKind::Con: {
      std::string out = std::string("(con ") + con_name(c.con_kind());
      if (c.con_kind() == ConKind::Sym) out += std::string(" ") + c.symbol();
      for (const auto& a : c.args()) out += " " + sexpr_of_term(a);
      return out + ")";
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool match(const Pattern& p, const ParseTree& v, Env& env) {
  if (p.is_var()) {
    env.emplace_back(p.name(), CoercionTerm::value(v));
    return true;
  }
  switch (p.con_kind()) {
    case ConKind::Eps:
      return v.is(TreeKind::Eps);
    case ConKind::Sym:
      return v.is(TreeKind::Sym) && v.symbol() == p.symbol();
    case ConKind::Seq:
      return v.is(TreeKind::Seq) && match(p.args()[0], v.left(), env) &&
             match(p.args()[1], v.right(), env);
    case ConKind::Inl:
      return v.is(TreeKind::Inl) && match(p.args()[0], v.left(), env);
    case ConKind::Inr:
      return v.is(TreeKind::Inr) && match(p.args()[0], v.left(), env);
    case ConKind::Fold:
      return v.is(TreeKind::Fold) && match(p.args()[0], v.left(), env);
    case ConKind::Nil:
      return v.is(TreeKind::List) && v.items().empty();
    case ConKind::Cons: {
      if (!v.is(TreeKind::List) || v.items().empty()) return false;
      ParseTree tail = ParseTree::list(
          std::vector<ParseTree>(v.items().begin() + 1, v.items().end()));
      return match(p.args()[0], v.items()[0], env) &&
             match(p.args()[1], tail, env);
    }
  }
  return false;
}

const ParseTree& as_tree(const CoercionTerm& c) {
  if (!c.is(TermKind::Value)) {
    throw Error("coercion: expected a tree, got " + sexpr_of_term(c));
  }
  return c.tree();
}

ParseTree build(ConKind k, Symbol sym, const std::vector<ParseTree>& a) {
  switch (k) {
    case ConKind::Eps: return ParseTree::eps();
    case ConKind::Sym: return ParseTree::sym(sym);
    case ConKind::Seq: return ParseTree::seq(a[0], a[1]);
    case ConKind::Inl: return ParseTree::inl(a[0]);
    case ConKind::Inr: return ParseTree::inr(a[0]);
    case ConKind::Fold: return ParseTree::fold(a[0]);
    case ConKind::Nil: return ParseTree::list({});
    case ConKind::Cons:
      if (!a[1].is(TreeKind::List)) {
        throw Error("coercion: Cons tail is not a list");
      }
      return ParseTree::cons(a[0], a[1]);
  }
  return ParseTree::eps();
}

CoercionTerm apply(CoercionTerm f, const CoercionTerm& arg) {
  while (f.is(TermKind::Rec)) {
    f = eval_term(f.args()[0].subst({{f.name(), f}}));
  }
  if (!f.is(TermKind::Lam)) {
    throw Error("coercion: applying a non-function " + sexpr_of_term(f));
  }
  return eval_term(f.args()[0].subst({{f.name(), arg}}));
}

}  // namespace

CoercionTerm eval_term(const CoercionTerm& c) {
  switch (c.kind()) {
    case TermKind::Value:
    case TermKind::Lam:
    case TermKind::Rec:
      return c;
    case TermKind::Var:
      throw Error("coercion: unbound variable " + c.name());
    case TermKind::Con: {
      std::vector<ParseTree> vals;
      for (const auto& a : c.args()) vals.push_back(as_tree(eval_term(a)));
      return CoercionTerm::value(build(c.con_kind(), c.symbol(), vals));
    }
    case TermKind::App: {
      CoercionTerm f = eval_term(c.args()[0]);
      CoercionTerm a = eval_term(c.args()[1]);
      as_tree(a);
      return apply(f, a);
    }
    case TermKind::Case: {
      const ParseTree v = as_tree(eval_term(c.args()[0]));
      for (std::size_t i = 0; i < c.patterns().size(); ++i) {
        Env env;
        if (match(c.patterns()[i], v, env)) {
          return eval_term(c.args()[i + 1].subst(env));
        }
      }
      throw Error("coercion: no branch matches " + sexpr_of_tree(v));
    }
  }
  return c;
}

ParseTree eval(const CoercionTerm& c, const ParseTree& v) {
  return as_tree(eval_term(CoercionTerm::app(c, CoercionTerm::value(v))));
}

// ---------------------------------------------------------------------------
// Library

namespace {

using T = CoercionTerm;
using P = Pattern;

P pv(const char* n) { return P::var(n); }
P pc(ConKind k, std::vector<P> a = {}) { return P::con(k, std::move(a)); }
T tv(const char* n) { return T::var(n); }
T tc(ConKind k, std::vector<T> a = {}) { return T::con(k, std::move(a)); }

T term_of_pattern(const P& p) {
  if (p.is_var()) return T::var(p.name());
  std::vector<T> args;
  for (const auto& a : p.args()) args.push_back(term_of_pattern(a));
  return T::con(p.con_kind(), std::move(args), p.symbol());
}

// lam x. case x of lhs_i => rhs_i
T reshape(const std::vector<std::pair<P, P>>& rules, bool forward) {
  std::vector<T::Branch> branches;
  for (const auto& [l, r] : rules) {
    const P& from = forward ? l : r;
    const P& to = forward ? r : l;
    branches.emplace_back(from, term_of_pattern(to));
  }
  return T::lam("x", T::case_of(tv("x"), std::move(branches)));
}

std::vector<std::pair<P, P>> rule_shapes(EquivRule rule) {
  using K = ConKind;
  P u = pv("u"), v = pv("v"), w = pv("w");
  switch (rule) {
    case EquivRule::E1:
      return {{pc(K::Seq, {u, pc(K::Inl, {v})}), pc(K::Inl, {pc(K::Seq, {u, v})})},
              {pc(K::Seq, {u, pc(K::Inr, {v})}), pc(K::Inr, {pc(K::Seq, {u, v})})}};
    case EquivRule::E2:
      return {{pc(K::Seq, {u, pc(K::Seq, {v, w})}),
               pc(K::Seq, {pc(K::Seq, {u, v}), w})}};
    case EquivRule::E3:
      return {{pc(K::Inl, {u}), pc(K::Inl, {pc(K::Inl, {u})})},
              {pc(K::Inr, {pc(K::Inl, {u})}), pc(K::Inl, {pc(K::Inr, {u})})},
              {pc(K::Inr, {pc(K::Inr, {u})}), pc(K::Inr, {u})}};
    case EquivRule::E4:
      return {{pc(K::Inl, {pc(K::Seq, {u, v})}), pc(K::Seq, {pc(K::Inl, {u}), v})},
              {pc(K::Inr, {pc(K::Seq, {u, v})}), pc(K::Seq, {pc(K::Inr, {u}), v})}};
    case EquivRule::E5:
      return {{pc(K::Inl, {u}), pc(K::Inr, {u})},
              {pc(K::Inr, {u}), pc(K::Inl, {u})}};
  }
  return {};
}

// Applies f under the chosen branch of a sum and leaves the other alone.
T under_branch(const T& f, bool right) {
  T here = tc(right ? ConKind::Inr : ConKind::Inl, {T::app(f, tv("u"))});
  T there = tc(right ? ConKind::Inl : ConKind::Inr, {tv("u")});
  P hp = pc(right ? ConKind::Inr : ConKind::Inl, {pv("u")});
  P tp = pc(right ? ConKind::Inl : ConKind::Inr, {pv("u")});
  return T::lam("x", T::case_of(tv("x"), {{hp, here}, {tp, there}}));
}

}  // namespace

CoercionTerm identity_coercion() { return T::lam("x", tv("x")); }

CoercionTerm compose(const CoercionTerm& f, const CoercionTerm& g) {
  return T::lam("x", T::app(g, T::app(f, tv("x"))));
}

BijectivePair arden_coercion(const Regex& s, const Regex& alpha,
                             const std::string& var) {
  NormalRhs nf{var, s, {alpha}};
  return arden_coercion(nf);
}

BijectivePair arden_coercion(const NormalRhs& nf) {
  if (!nf.self_coef) throw Error("arden_coercion: no self term");
  using K = ConKind;
  const bool has_rest = !nf.rest.empty();
  auto wrap = [&](P p) { return has_rest ? pc(K::Inl, {std::move(p)}) : p; };
  auto wrap_t = [&](T t) { return has_rest ? tc(K::Inl, {std::move(t)}) : t; };

  // f (Fold (Inr u)) = ([], u)
  // f (Fold (Inl (u, w))) = case f w of (us, z) => (u : us, z)
  std::vector<T::Branch> fwd;
  if (has_rest) {
    fwd.emplace_back(pc(K::Fold, {pc(K::Inr, {pv("u")})}),
                     tc(K::Seq, {tc(K::Nil), tv("u")}));
  }
  fwd.emplace_back(
      pc(K::Fold, {wrap(pc(K::Seq, {pv("u"), pv("w")}))}),
      T::case_of(T::app(tv("f"), tv("w")),
                 {{pc(K::Seq, {pv("us"), pv("z")}),
                   tc(K::Seq, {tc(K::Cons, {tv("u"), tv("us")}), tv("z")})}}));
  T forward = T::rec("f", T::lam("x", T::case_of(tv("x"), std::move(fwd))));

  std::vector<T::Branch> inv;
  if (has_rest) {
    inv.emplace_back(pc(K::Seq, {pc(K::Nil), pv("u")}),
                     tc(K::Fold, {tc(K::Inr, {tv("u")})}));
  }
  inv.emplace_back(
      pc(K::Seq, {pc(K::Cons, {pv("u"), pv("us")}), pv("z")}),
      tc(K::Fold,
         {wrap_t(tc(K::Seq, {tv("u"), T::app(tv("g"), tc(K::Seq, {tv("us"),
                                                                   tv("z")}))}))}));
  T inverse = T::rec("g", T::lam("x", T::case_of(tv("x"), std::move(inv))));

  return {forward, inverse, Regex::var(nf.self),
          Regex::seq(Regex::star(*nf.self_coef), nf.rest_sum())};
}

CoercionTerm rewrite_coercion(const Rewrite& step) {
  T f = reshape(rule_shapes(step.rule), step.forward);
  for (std::size_t i = step.path.size(); i-- > 0;) {
    f = under_branch(f, step.path[i]);
  }
  return f;
}

BijectivePair equiv_coercion(const EquivDerivation& d) {
  if (d.steps.empty()) {
    return {identity_coercion(), identity_coercion(), d.source, d.target};
  }
  T fwd = tv("x");
  T inv = tv("x");
  for (const auto& s : d.steps) {
    fwd = T::app(rewrite_coercion(s), fwd);
  }
  for (std::size_t i = d.steps.size(); i-- > 0;) {
    Rewrite back = d.steps[i];
    back.forward = !back.forward;
    inv = T::app(rewrite_coercion(back), inv);
  }
  return {T::lam("x", fwd), T::lam("x", inv), d.source, d.target};
}

namespace {

struct CtxPair {
  T forward;
  T inverse;
};

// Coercions for the multi-hole context of `var` in g; nullopt when g does
// not mention `var`.
std::optional<CtxPair> context_coercion(const Regex& g, const std::string& var) {
  using K = ConKind;
  if (!g.mentions(var)) return std::nullopt;
  auto on = [](const std::optional<CtxPair>& c, bool fwd, const char* x) {
    if (!c) return tv(x);
    return T::app(fwd ? c->forward : c->inverse, tv(x));
  };
  switch (g.kind()) {
    case Kind::Var:
      return CtxPair{T::lam("x", T::case_of(tv("x"), {{pc(K::Fold, {pv("v")}),
                                                       tv("v")}})),
                     T::lam("x", tc(K::Fold, {tv("x")}))};
    case Kind::Alt: {
      auto l = context_coercion(g.left(), var);
      auto r = context_coercion(g.right(), var);
      CtxPair out{identity_coercion(), identity_coercion()};
      for (bool fwd : {true, false}) {
        T t = T::lam(
            "x", T::case_of(tv("x"),
                            {{pc(K::Inl, {pv("u")}), tc(K::Inl, {on(l, fwd, "u")})},
                             {pc(K::Inr, {pv("u")}),
                              tc(K::Inr, {on(r, fwd, "u")})}}));
        (fwd ? out.forward : out.inverse) = t;
      }
      return out;
    }
    case Kind::Seq: {
      if (!g.left().mentions(var) && g.right().is(Kind::Var)) {
        // (u, Fold v) => (u, v)
        P folded = pc(K::Seq, {pv("u"), pc(K::Fold, {pv("v")})});
        P open = pc(K::Seq, {pv("u"), pv("v")});
        return CtxPair{reshape({{folded, open}}, true),
                       reshape({{folded, open}}, false)};
      }
      auto l = context_coercion(g.left(), var);
      auto r = context_coercion(g.right(), var);
      CtxPair out{identity_coercion(), identity_coercion()};
      for (bool fwd : {true, false}) {
        T t = T::lam("x", T::case_of(tv("x"), {{pc(K::Seq, {pv("u"), pv("w")}),
                                                tc(K::Seq, {on(l, fwd, "u"),
                                                            on(r, fwd, "w")})}}));
        (fwd ? out.forward : out.inverse) = t;
      }
      return out;
    }
    default:
      throw Error("subst_coercion: variable " + var +
                  " occurs under a star in " + text_of_regex(g));
  }
}

}  // namespace

BijectivePair subst_coercion(const Regex& g, const std::string& var,
                             const Regex& alpha) {
  Regex target = substitute(g, [&](const std::string& v) -> const Regex* {
    return v == var ? &alpha : nullptr;
  });
  auto c = context_coercion(g, var);
  if (!c) return {identity_coercion(), identity_coercion(), g, target};
  return {c->forward, c->inverse, g, target};
}

// ---------------------------------------------------------------------------
// Coercive solving

namespace {

using AtVar =
    std::function<ParseTree(const std::string& var, const ParseTree& folded)>;

// Rebuilds t : g, replacing the tree at each Var leaf of g by at_var.
ParseTree map_vars(const ParseTree& t, const Regex& g, const AtVar& at_var) {
  if (g.is_closed()) return t;
  auto mismatch = [&]() -> ParseTree {
    throw Error("coercive_solve: tree " + sexpr_of_tree(t) +
                " does not fit " + text_of_regex(g));
  };
  switch (g.kind()) {
    case Kind::Var:
      if (!t.is(TreeKind::Fold)) return mismatch();
      return at_var(g.var_name(), t);
    case Kind::Alt:
      if (t.is(TreeKind::Inl)) {
        return ParseTree::inl(map_vars(t.left(), g.left(), at_var));
      }
      if (t.is(TreeKind::Inr)) {
        return ParseTree::inr(map_vars(t.left(), g.right(), at_var));
      }
      return mismatch();
    case Kind::Seq:
      if (!t.is(TreeKind::Seq)) return mismatch();
      return ParseTree::seq(map_vars(t.left(), g.left(), at_var),
                            map_vars(t.right(), g.right(), at_var));
    case Kind::Star: {
      if (!t.is(TreeKind::List)) return mismatch();
      std::vector<ParseTree> items;
      for (const auto& i : t.items()) {
        items.push_back(map_vars(i, g.body(), at_var));
      }
      return ParseTree::list(std::move(items));
    }
    default:
      return mismatch();
  }
}

class Transport {
 public:
  Transport(const EquationSystem& sys,
            const std::map<std::string, ParseTree>& trees)
      : cur_(sys), trees_(trees) {}

  void arden(const ArdenRecord& a) {
    const std::string& v = a.var;
    T f_norm = equiv_coercion(a.norm).forward;
    NormalRhs nf{v, a.coef, {}};
    if (a.norm.target.is(Kind::Alt)) nf.rest.push_back(a.alpha);
    T f_arden = arden_coercion(nf).forward;

    // Bring every Fold of v into the normal form, innermost first.
    AtVar norm = [&](const std::string& r, const ParseTree& t) {
      ParseTree w = map_vars(t.left(), cur_.rhs(r), norm);
      if (r == v) w = eval(f_norm, w);
      return ParseTree::fold(w);
    };
    update_all(norm);
    cur_.set_rhs(*cur_.index_of(v), a.norm.target);

    // Collapse each outermost Fold of v with the Arden coercion, then
    // continue inside the alpha parts.
    AtVar solve = [&](const std::string& r, const ParseTree& t) {
      if (r == v) {
        return ParseTree::fold(map_vars(eval(f_arden, t), a.after, solve));
      }
      return ParseTree::fold(map_vars(t.left(), cur_.rhs(r), solve));
    };
    update_all(solve);
    cur_.set_rhs(*cur_.index_of(v), a.after);
  }

  void subst(const SubstRecord& s) {
    const std::string& v = s.var;
    struct Changed {
      T f_subst;
      T f_norm;
      const EquationUpdate* rec;
    };
    std::map<std::string, Changed> changed;
    for (const auto& e : s.equations) {
      changed.emplace(e.var, Changed{subst_coercion(e.before, v, s.alpha).forward,
                                     equiv_coercion(e.norm).forward, &e});
    }
    AtVar step = [&](const std::string& r, const ParseTree& t) {
      if (r == v) {
        throw Error("coercive_solve: stray tree of removed variable " + v);
      }
      auto it = changed.find(r);
      if (it == changed.end()) {
        return ParseTree::fold(map_vars(t.left(), cur_.rhs(r), step));
      }
      ParseTree w = eval(it->second.f_subst, t.left());
      w = map_vars(w, it->second.rec->substituted, step);
      return ParseTree::fold(eval(it->second.f_norm, w));
    };

    std::map<std::string, const SolutionUpdate*> acc_updates;
    for (const auto& u : s.solution) acc_updates[u.var] = &u;
    for (auto& [r, t] : trees_) {
      if (r == v) {
        t = map_vars(t.left(), s.alpha, step);
      } else if (cur_.contains(r)) {
        t = step(r, t);
      } else if (auto it = acc_updates.find(r); it != acc_updates.end()) {
        ParseTree w =
            eval(subst_coercion(it->second->before, v, s.alpha).forward, t);
        t = map_vars(w, it->second->after, step);
      } else {
        t = map_vars(t, acc_.at(r), step);
      }
    }

    cur_.erase(*cur_.index_of(v));
    for (const auto& e : s.equations) {
      cur_.set_rhs(*cur_.index_of(e.var), e.after);
    }
    for (const auto& u : s.solution) acc_[u.var] = u.after;
    acc_[v] = s.alpha;
  }

  const std::map<std::string, ParseTree>& trees() const { return trees_; }

 private:
  void update_all(const AtVar& f) {
    for (auto& [r, t] : trees_) {
      t = cur_.contains(r) ? f(r, t) : map_vars(t, acc_.at(r), f);
    }
  }

  EquationSystem cur_;
  Solution acc_;
  std::map<std::string, ParseTree> trees_;
};

}  // namespace

CoerciveResult coercive_solve(const EquationSystem& sys,
                              const std::map<std::string, ParseTree>& trees,
                              Strategy strategy, NormalMode mode) {
  for (const auto& [r, t] : trees) {
    if (!sys.contains(r) || !typecheck(sys, t, Regex::var(r))) {
      throw Error("coercive_solve: tree " + sexpr_of_tree(t) +
                  " is not a parse tree of " + r);
    }
  }
  SolveTrace trace;
  CoerciveResult out;
  out.solution = solve(sys, strategy, &trace, mode);
  Transport tr(sys, trees);
  for (const auto& step : trace.steps) {
    if (step.arden) tr.arden(*step.arden);
    tr.subst(step.subst);
  }
  out.trees = tr.trees();
  return out;
}

}  // namespace regeq
