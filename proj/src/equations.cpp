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

#include "regeq/equations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <set>

namespace regeq {

// ---------------------------------------------------------------------------
// EquationSystem

EquationSystem::EquationSystem(std::vector<Equation> equations)
    : equations_(std::move(equations)) {}

std::optional<std::size_t> EquationSystem::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    if (equations_[i].var == var) return i;
  }
  return std::nullopt;
}

const Regex& EquationSystem::rhs(std::string_view var) const {
  auto i = index_of(var);
  if (!i) throw Error("no equation for variable " + std::string(var));
  return equations_[*i].rhs;
}

void EquationSystem::add(std::string var, Regex rhs) {
  equations_.push_back({std::move(var), std::move(rhs)});
}

void EquationSystem::erase(std::size_t i) {
  equations_.erase(equations_.begin() + static_cast<std::ptrdiff_t>(i));
}

Alphabet EquationSystem::alphabet() const {
  std::string syms;
  for (const auto& eq : equations_) syms += symbols_of(eq.rhs).str();
  return Alphabet(syms);
}

namespace {

bool well_formed_rhs(const Regex& g) {
  if (g.is_closed()) return true;
  switch (g.kind()) {
    case Kind::Alt:
      return well_formed_rhs(g.left()) && well_formed_rhs(g.right());
    case Kind::Seq:
      return g.left().is_closed() && g.right().is(Kind::Var);
    default:
      return false;
  }
}

}  // namespace

void EquationSystem::validate() const {
  std::set<std::string> seen;
  for (const auto& eq : equations_) {
    if (!is_var_name(eq.var)) throw Error("invalid variable name " + eq.var);
    if (!seen.insert(eq.var).second) {
      throw Error("duplicate equation for " + eq.var);
    }
  }
  for (const auto& eq : equations_) {
    for (const auto& v : vars_of(eq.rhs)) {
      if (!seen.count(v)) {
        throw Error("equation " + eq.var + ": variable " + v +
                    " has no equation");
      }
    }
    if (!well_formed_rhs(eq.rhs)) {
      throw Error("equation " + eq.var +
                  ": right-hand side is not a sum of r.VAR and r terms");
    }
  }
}

bool operator==(const EquationSystem& a, const EquationSystem& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].var != b[i].var || a[i].rhs != b[i].rhs) return false;
  }
  return true;
}

bool is_var_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

Regex parse_summand(std::string_view text, std::size_t offset) {
  std::size_t end = text.size();
  while (end > 0 && is_space(text[end - 1])) --end;
  std::size_t begin = 0;
  while (begin < end && is_space(text[begin])) ++begin;
  if (begin == end) throw SyntaxError("empty summand", offset + begin);

  std::size_t run = end;
  while (run > begin && std::isalnum(static_cast<unsigned char>(text[run - 1]))) {
    --run;
  }
  std::size_t var_at = end;
  for (std::size_t i = run; i < end; ++i) {
    if (std::isupper(static_cast<unsigned char>(text[i]))) {
      var_at = i;
      break;
    }
  }
  std::string_view coef_text = text.substr(begin, var_at - begin);
  auto parse_coef = [&]() {
    try {
      return regex_of_text(coef_text);
    } catch (const SyntaxError& e) {
      throw SyntaxError("invalid regex", offset + begin + e.position());
    }
  };
  if (var_at == end) return parse_coef();
  Regex var = Regex::var(std::string(text.substr(var_at, end - var_at)));
  bool blank = std::all_of(coef_text.begin(), coef_text.end(), is_space);
  return Regex::seq(blank ? Regex::eps() : parse_coef(), var);
}

}  // namespace

EquationSystem equations_of_text(std::string_view text) {
  EquationSystem sys;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first < line.size() && line[first] != '#') {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw SyntaxError("expected '='", line_start + line.size());
      }
      std::string_view lhs = line.substr(0, eq);
      while (!lhs.empty() && is_space(lhs.back())) lhs.remove_suffix(1);
      lhs.remove_prefix(first);
      if (!is_var_name(lhs)) {
        throw SyntaxError("expected a variable name", line_start + first);
      }
      std::vector<Regex> summands;
      int depth = 0;
      std::size_t seg = eq + 1;
      for (std::size_t i = eq + 1; i <= line.size(); ++i) {
        char c = i < line.size() ? line[i] : '+';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth <= 0) {
          summands.push_back(
              parse_summand(line.substr(seg, i - seg), line_start + seg));
          seg = i + 1;
        }
      }
      if (sys.contains(lhs)) {
        throw SyntaxError("duplicate equation for " + std::string(lhs),
                          line_start + first);
      }
      sys.add(std::string(lhs), Regex::alt_of(summands));
    }
    line_start = line_end + 1;
  }
  sys.validate();
  return sys;
}

std::string text_of_equations(const EquationSystem& sys) {
  std::string out;
  for (const auto& eq : sys.equations()) {
    out += eq.var + " = " + text_of_regex(eq.rhs) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewrites

std::string rule_name(EquivRule rule) {
  return "E" + std::to_string(static_cast<int>(rule) + 1);
}

namespace {

[[noreturn]] void no_match(const Rewrite& step) {
  throw Error("rewrite " + rule_name(step.rule) +
              (step.forward ? "" : " (backward)") + " does not apply");
}

Regex rewrite_here(const Regex& g, const Rewrite& step) {
  auto is = [](const Regex& r, Kind k) { return r.is(k); };
  switch (step.rule) {
    case EquivRule::E1:
      if (step.forward) {
        if (is(g, Kind::Seq) && is(g.right(), Kind::Alt)) {
          return Regex::alt(Regex::seq(g.left(), g.right().left()),
                            Regex::seq(g.left(), g.right().right()));
        }
      } else if (is(g, Kind::Alt) && is(g.left(), Kind::Seq) &&
                 is(g.right(), Kind::Seq) &&
                 g.left().left() == g.right().left()) {
        return Regex::seq(g.left().left(),
                          Regex::alt(g.left().right(), g.right().right()));
      }
      break;
    case EquivRule::E2:
      if (step.forward) {
        if (is(g, Kind::Seq) && is(g.right(), Kind::Seq)) {
          return Regex::seq(Regex::seq(g.left(), g.right().left()),
                            g.right().right());
        }
      } else if (is(g, Kind::Seq) && is(g.left(), Kind::Seq)) {
        return Regex::seq(g.left().left(),
                          Regex::seq(g.left().right(), g.right()));
      }
      break;
    case EquivRule::E3:
      if (step.forward) {
        if (is(g, Kind::Alt) && is(g.right(), Kind::Alt)) {
          return Regex::alt(Regex::alt(g.left(), g.right().left()),
                            g.right().right());
        }
      } else if (is(g, Kind::Alt) && is(g.left(), Kind::Alt)) {
        return Regex::alt(g.left().left(),
                          Regex::alt(g.left().right(), g.right()));
      }
      break;
    case EquivRule::E4:
      if (step.forward) {
        if (is(g, Kind::Alt) && is(g.left(), Kind::Seq) &&
            is(g.right(), Kind::Seq) && g.left().right() == g.right().right()) {
          return Regex::seq(Regex::alt(g.left().left(), g.right().left()),
                            g.left().right());
        }
      } else if (is(g, Kind::Seq) && is(g.left(), Kind::Alt)) {
        return Regex::alt(Regex::seq(g.left().left(), g.right()),
                          Regex::seq(g.left().right(), g.right()));
      }
      break;
    case EquivRule::E5:
      if (is(g, Kind::Alt)) return Regex::alt(g.right(), g.left());
      break;
  }
  no_match(step);
}

Regex rewrite_at(const Regex& g, const Rewrite& step, std::size_t depth) {
  if (depth == step.path.size()) return rewrite_here(g, step);
  if (!g.is(Kind::Alt)) no_match(step);
  if (step.path[depth]) {
    return Regex::alt(g.left(), rewrite_at(g.right(), step, depth + 1));
  }
  return Regex::alt(rewrite_at(g.left(), step, depth + 1), g.right());
}

}  // namespace

Regex apply_rewrite(const Regex& g, const Rewrite& step) {
  return rewrite_at(g, step, 0);
}

Regex replay(const std::vector<Rewrite>& steps, const Regex& source) {
  Regex g = source;
  for (const auto& s : steps) g = apply_rewrite(g, s);
  return g;
}

// ---------------------------------------------------------------------------
// Normal form

Regex NormalRhs::rest_sum() const { return Regex::alt_of(rest); }

Regex NormalRhs::render() const {
  if (!self_coef) return rest_sum();
  Regex head = Regex::seq(*self_coef, Regex::var(self));
  if (rest.empty()) return head;
  return Regex::alt(head, rest_sum());
}

namespace {

// Works on a sum kept as a right-nested chain s0 + (s1 + (... + sn-1)).
class Normalizer {
 public:
  Normalizer(Regex g, std::string self, NormalMode mode)
      : g_(std::move(g)), self_(std::move(self)), full_(mode == NormalMode::Full) {}

  const Regex& current() const { return g_; }
  std::vector<Rewrite>& steps() { return steps_; }

  void run() {
    flatten_from(0);
    for (std::size_t i = 0; i < length();) {
      if (distribute_at(i)) {
        flatten_from(i);
      } else {
        ++i;
      }
    }
    gather();
    merge();
  }

  std::vector<Regex> summands() const {
    std::vector<Regex> out;
    Regex cur = g_;
    while (cur.is(Kind::Alt)) {
      out.push_back(cur.left());
      cur = cur.right();
    }
    out.push_back(cur);
    return out;
  }

  bool is_self_term(const Regex& s) const {
    return is_var_term(s) && s.right().var_name() == self_;
  }

  static bool is_var_term(const Regex& s) {
    return s.is(Kind::Seq) && s.left().is_closed() && s.right().is(Kind::Var);
  }

 private:
  static std::vector<bool> chain_path(std::size_t i) {
    return std::vector<bool>(i, true);
  }

  std::vector<bool> summand_path(std::size_t i) const {
    auto p = chain_path(i);
    if (i + 1 < length()) p.push_back(false);
    return p;
  }

  const Regex& node_at(const std::vector<bool>& path) const {
    const Regex* cur = &g_;
    for (bool right : path) cur = right ? &cur->right() : &cur->left();
    return *cur;
  }

  std::size_t length() const {
    std::size_t n = 1;
    for (const Regex* cur = &g_; cur->is(Kind::Alt); cur = &cur->right()) ++n;
    return n;
  }

  void apply(EquivRule rule, bool forward, std::vector<bool> path) {
    Rewrite step{rule, forward, std::move(path)};
    g_ = apply_rewrite(g_, step);
    steps_.push_back(std::move(step));
  }

  // Re-establishes the chain shape from position i on.
  void flatten_from(std::size_t i) {
    for (;; ++i) {
      auto path = chain_path(i);
      while (node_at(path).is(Kind::Alt) && node_at(path).left().is(Kind::Alt)) {
        apply(EquivRule::E3, false, path);
      }
      if (!node_at(path).is(Kind::Alt)) return;
    }
  }

  // One distribution step on summand i. Returns false when the summand
  // needs no further work.
  bool distribute_at(std::size_t i) {
    auto path = summand_path(i);
    const Regex& s = node_at(path);
    if (full_ ? (s.is_closed() || is_var_term(s))
              : (!s.mentions(self_) || is_self_term(s))) {
      return false;
    }
    if (s.is(Kind::Seq) && s.left().is_closed()) {
      if (s.right().is(Kind::Alt)) {
        apply(EquivRule::E1, true, path);
        return true;
      }
      if (s.right().is(Kind::Seq)) {
        apply(EquivRule::E2, true, path);
        return true;
      }
    }
    throw Error("right-hand side is not well-formed: " + text_of_regex(s));
  }

  // Swaps summands j and j+1.
  void swap_next(std::size_t j) {
    auto path = chain_path(j);
    if (j + 2 == length()) {
      apply(EquivRule::E5, true, path);
      return;
    }
    apply(EquivRule::E3, true, path);
    auto inner = path;
    inner.push_back(false);
    apply(EquivRule::E5, true, inner);
    apply(EquivRule::E3, false, path);
  }

  // Sort key: self terms, then other variable terms grouped by variable in
  // order of first occurrence (full mode only), then everything else.
  std::vector<std::size_t> keys() const {
    std::vector<std::string> seen;
    std::vector<std::size_t> out;
    for (const Regex& p : summands()) {
      if (is_self_term(p)) {
        out.push_back(0);
      } else if (full_ && is_var_term(p)) {
        const std::string& v = p.right().var_name();
        auto it = std::find(seen.begin(), seen.end(), v);
        if (it == seen.end()) it = seen.insert(seen.end(), v);
        out.push_back(1 + static_cast<std::size_t>(it - seen.begin()));
      } else {
        out.push_back(std::numeric_limits<std::size_t>::max());
      }
    }
    return out;
  }

  // Stable insertion sort by key using adjacent swaps.
  void gather() {
    auto key = keys();
    for (std::size_t i = 1; i < key.size(); ++i) {
      for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
        swap_next(j - 1);
        std::swap(key[j - 1], key[j]);
      }
    }
  }

  // Merges summands j and j+1, both c.V for the same V.
  void merge_next(std::size_t j) {
    auto path = chain_path(j);
    if (j + 2 == length()) {
      apply(EquivRule::E4, true, path);
    } else {
      apply(EquivRule::E3, true, path);
      auto inner = path;
      inner.push_back(false);
      apply(EquivRule::E4, true, inner);
    }
  }

  // Merges each run of equal keys below the closed summands, right to left.
  void merge() {
    auto key = keys();
    const std::size_t kOther = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = key.size(); j-- > 1;) {
      if (key[j] != kOther && key[j - 1] == key[j]) merge_next(j - 1);
    }
  }

  Regex g_;
  std::string self_;
  std::vector<Rewrite> steps_;
  bool full_ = false;
};

}  // namespace

std::pair<NormalRhs, EquivDerivation> normalize(const Regex& rhs,
                                                const std::string& self,
                                                NormalMode mode) {
  NormalRhs nf;
  nf.self = self;
  EquivDerivation d{rhs, rhs, {}};
  if (mode == NormalMode::Lazy ? !rhs.mentions(self) : rhs.is_closed()) {
    nf.rest.push_back(rhs);
    return {nf, d};
  }
  Normalizer n(rhs, self, mode);
  n.run();
  auto parts = n.summands();
  std::size_t start = 0;
  if (n.is_self_term(parts[0])) {
    nf.self_coef = parts[0].left();
    start = 1;
  }
  for (std::size_t i = start; i < parts.size(); ++i) {
    if (parts[i].mentions(self)) {
      throw Error("right-hand side is not well-formed: " + text_of_regex(rhs));
    }
    nf.rest.push_back(parts[i]);
  }
  d.target = n.current();
  d.steps = std::move(n.steps());
  return {nf, d};
}

namespace {

struct FlatTerm {
  std::optional<Regex> coef;  // absent for a bare variable
  std::optional<std::string> var;
  Regex pure;
};

void flatten_terms(const Regex& g, std::vector<FlatTerm>& out) {
  if (g.is_closed()) {
    out.push_back({std::nullopt, std::nullopt, g});
    return;
  }
  switch (g.kind()) {
    case Kind::Alt:
      flatten_terms(g.left(), out);
      flatten_terms(g.right(), out);
      return;
    case Kind::Var:
      out.push_back({std::nullopt, g.var_name(), Regex()});
      return;
    case Kind::Seq: {
      if (!g.left().is_closed()) break;
      std::vector<FlatTerm> inner;
      flatten_terms(g.right(), inner);
      for (auto& t : inner) {
        if (t.var) {
          t.coef = t.coef ? Regex::seq(g.left(), *t.coef) : g.left();
        } else {
          t.pure = Regex::seq(g.left(), t.pure);
        }
        out.push_back(std::move(t));
      }
      return;
    }
    default:
      break;
  }
  throw Error("right-hand side is not well-formed: " + text_of_regex(g));
}

}  // namespace

const Regex* FlatRhs::coef(std::string_view var) const {
  for (const auto& [v, c] : terms) {
    if (v == var) return &c;
  }
  return nullptr;
}

FlatRhs flat_view(const Regex& rhs) {
  std::vector<FlatTerm> terms;
  flatten_terms(rhs, terms);
  std::vector<std::pair<std::string, std::vector<Regex>>> groups;
  std::vector<Regex> pures;
  for (const auto& t : terms) {
    if (!t.var) {
      pures.push_back(t.pure);
      continue;
    }
    Regex c = t.coef ? *t.coef : Regex::eps();
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == *t.var; });
    if (it == groups.end()) {
      groups.push_back({*t.var, {c}});
    } else {
      it->second.push_back(c);
    }
  }
  FlatRhs out;
  for (auto& [v, cs] : groups) out.terms.emplace_back(v, Regex::alt_of(cs));
  if (!pures.empty()) out.tail = Regex::alt_of(pures);
  return out;
}

// ---------------------------------------------------------------------------
// Solving

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Default:
      return "default";
    case Strategy::DelgadoMorais:
      return "delgado";
    case Strategy::CycleCount:
      return "cycles";
  }
  return "default";
}

Strategy strategy_of_name(std::string_view name) {
  if (name == "default") return Strategy::Default;
  if (name == "delgado") return Strategy::DelgadoMorais;
  if (name == "cycles") return Strategy::CycleCount;
  throw Error("unknown strategy " + std::string(name));
}

std::string normal_mode_name(NormalMode m) {
  return m == NormalMode::Full ? "full" : "lazy";
}

NormalMode normal_mode_of_name(std::string_view name) {
  if (name == "lazy") return NormalMode::Lazy;
  if (name == "full") return NormalMode::Full;
  throw Error("unknown normal mode " + std::string(name));
}

Regex arden_step(const NormalRhs& rhs) {
  if (!rhs.self_coef) throw Error("arden_step: no self term for " + rhs.self);
  return Regex::seq(Regex::star(*rhs.self_coef), rhs.rest_sum());
}

namespace {

Regex substitute_one(const Regex& g, const std::string& var,
                     const Regex& alpha) {
  return substitute(g, [&](const std::string& v) -> const Regex* {
    return v == var ? &alpha : nullptr;
  });
}

}  // namespace

SubstRecord subst_step(EquationSystem& sys, Solution& acc,
                       const std::string& var, NormalMode mode) {
  auto idx = sys.index_of(var);
  if (!idx) throw Error("subst_step: no equation for " + var);
  Regex alpha = sys[*idx].rhs;
  if (alpha.mentions(var)) {
    throw Error("subst_step: equation for " + var + " still has a self term");
  }
  SubstRecord rec{var, alpha, {}, {}};
  sys.erase(*idx);
  for (auto& [s, gamma] : acc) {
    if (!gamma.mentions(var)) continue;
    Regex after = substitute_one(gamma, var, alpha);
    rec.solution.push_back({s, gamma, after});
    gamma = after;
  }
  acc[var] = alpha;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Equation& eq = sys[i];
    if (!eq.rhs.mentions(var)) continue;
    Regex substituted = substitute_one(eq.rhs, var, alpha);
    auto [nf, d] = normalize(substituted, eq.var, mode);
    Regex after = nf.render();
    rec.equations.push_back({eq.var, eq.rhs, substituted, std::move(d), after});
    sys.set_rhs(i, after);
  }
  return rec;
}

std::pair<EquationSystem, Solution> subst_step(const EquationSystem& sys,
                                               const Solution& acc,
                                               const std::string& var,
                                               NormalMode mode) {
  EquationSystem s = sys;
  Solution a = acc;
  subst_step(s, a, var, mode);
  return {std::move(s), std::move(a)};
}

long long delgado_weight(const EquationSystem& sys, const std::string& var) {
  auto idx = sys.index_of(var);
  if (!idx) throw Error("delgado_weight: no equation for " + var);
  long long in = 0, in_width = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (i == *idx) continue;
    FlatRhs f = flat_view(sys[i].rhs);
    if (const Regex* c = f.coef(var)) {
      ++in;
      in_width += static_cast<long long>(alphabetic_width(*c));
    }
  }
  FlatRhs own = flat_view(sys[*idx].rhs);
  long long out = 0, out_width = 0, loop = 0;
  for (const auto& [v, c] : own.terms) {
    if (v == var) {
      loop = static_cast<long long>(alphabetic_width(c));
    } else {
      ++out;
      out_width += static_cast<long long>(alphabetic_width(c));
    }
  }
  if (own.tail) {
    ++out;
    out_width += static_cast<long long>(alphabetic_width(*own.tail));
  }
  return (in - 1) * out_width + (out - 1) * in_width + (in * out - 1) * loop;
}

std::size_t cycle_count(const EquationSystem& sys, const std::string& var,
                        std::size_t cap) {
  auto start = sys.index_of(var);
  if (!start) throw Error("cycle_count: no equation for " + var);
  std::vector<std::vector<std::size_t>> succ(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (const auto& v : vars_of(sys[i].rhs)) {
      if (auto j = sys.index_of(v)) succ[i].push_back(*j);
    }
  }
  std::vector<bool> on_path(sys.size(), false);
  std::size_t count = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t n) {
    for (std::size_t m : succ[n]) {
      if (count >= cap) return;
      if (m == *start) {
        ++count;
      } else if (!on_path[m]) {
        on_path[m] = true;
        dfs(m);
        on_path[m] = false;
      }
    }
  };
  on_path[*start] = true;
  dfs(*start);
  return count;
}

std::string next_equation(const EquationSystem& sys, Strategy strategy) {
  if (sys.empty()) throw Error("next_equation: empty system");
  if (strategy == Strategy::Default) return sys[0].var;
  std::size_t best = 0;
  long long best_weight = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    long long w = strategy == Strategy::DelgadoMorais
                      ? delgado_weight(sys, sys[i].var)
                      : static_cast<long long>(cycle_count(sys, sys[i].var));
    if (i == 0 || w < best_weight) {
      best = i;
      best_weight = w;
    }
  }
  return sys[best].var;
}

Solution solve(const EquationSystem& sys, Strategy strategy,
               SolveTrace* trace, NormalMode mode) {
  EquationSystem cur = sys;
  Solution acc;
  while (!cur.empty()) {
    std::string var = next_equation(cur, strategy);
    std::size_t idx = *cur.index_of(var);
    SolveStep step;
    const Regex before = cur[idx].rhs;
    if (before.mentions(var)) {
      auto [nf, d] = normalize(before, var, mode);
      Regex after = arden_step(nf);
      step.arden = ArdenRecord{var,         before,         std::move(d),
                               *nf.self_coef, nf.rest_sum(), after};
      cur.set_rhs(idx, after);
    }
    step.subst = subst_step(cur, acc, var, mode);
    if (trace) trace->steps.push_back(std::move(step));
  }
  return acc;
}

Solution simplify_solution(const Solution& sol, Rules rules) {
  Solution out;
  for (const auto& [v, r] : sol) out.emplace(v, simp(r, rules));
  return out;
}

bool check_solution(const EquationSystem& sys, const Solution& sol,
                    std::size_t max_len) {
  auto lookup = [&](const std::string& v) -> const Regex* {
    auto it = sol.find(v);
    return it == sol.end() ? nullptr : &it->second;
  };
  for (const auto& eq : sys.equations()) {
    auto it = sol.find(eq.var);
    if (it == sol.end() || !it->second.is_closed()) return false;
    Regex rhs = substitute(eq.rhs, lookup);
    if (!rhs.is_closed()) return false;
    if (lang_upto(it->second, max_len) != lang_upto(rhs, max_len)) {
      return false;
    }
  }
  return true;
}

}  // namespace regeq
