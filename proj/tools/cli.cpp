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


#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regeq/automata.hpp"
#include "regeq/derivatives.hpp"
#include "regeq/equations.hpp"
#include "regeq/parse_trees.hpp"
#include "regeq/reg_ops.hpp"
#include "regeq/regex.hpp"
#include "regeq/tooling.hpp"

namespace regeq {
namespace {

using json = nlohmann::ordered_json;

class InputError : public Error {
 public:
  using Error::Error;
};

class CheckFailed : public Error {
 public:
  using Error::Error;
};

// Reruns `f`, reporting any library error as bad input.
template <class F>
auto as_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Word word_of_arg(const std::string& s) {
  if (s == "~") return {};
  for (char c : s) {
    if (!is_symbol_char(c)) {
      throw InputError("bad symbol '" + std::string(1, c) + "' in word " + s);
    }
  }
  return s;
}

std::vector<Word> words_upto(const Alphabet& a, std::size_t n) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (Symbol x : a.symbols()) out.push_back(out[i] + x);
  }
  return out;
}

struct Options {
  std::string strategy = "default";
  std::string rules = "full";
  std::string mode = "reachable";
  std::string normal = "lazy";
  bool simplify = false;
  int check = -1;
  std::uint64_t seed = 1;
  bool prune = false;
  bool json = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Strategy strategy() const { return strategy_of_name(o_.strategy); }
  Rules rules() const { return o_.rules == "basic" ? Rules::Basic : Rules::Full; }
  ProductMode mode() const { return product_mode_of_name(o_.mode); }
  NormalMode normal() const { return normal_mode_of_name(o_.normal); }

  Regex finish(const Regex& r) const {
    return o_.simplify ? simp(r, rules()) : r;
  }

  void emit(const Regex& r) {
    if (o_.json) {
      out_ << json{{"regex", text_of_regex(r)}}.dump() << "\n";
    } else {
      out_ << text_of_regex(r) << "\n";
    }
  }

  void verdict(bool ok, const std::string& what) {
    if (!ok) throw CheckFailed("oracle: mismatch for " + what);
    out_ << "oracle: OK\n";
  }

  bool checking() const { return o_.check >= 0; }
  std::size_t check_len() const { return static_cast<std::size_t>(o_.check); }

  void solve_file(const std::string& path) {
    EquationSystem sys = as_input([&] {
      EquationSystem s = equations_of_text(read_file(path));
      s.validate();
      return s;
    });
    Solution sol = solve(sys, strategy(), nullptr, normal());
    if (o_.simplify) sol = simplify_solution(sol, rules());
    if (o_.json) {
      json j = json::object();
      for (std::size_t i = 0; i < sys.size(); ++i) {
        j[sys[i].var] = text_of_regex(sol.at(sys[i].var));
      }
      out_ << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < sys.size(); ++i) {
        out_ << sys[i].var << " = " << text_of_regex(sol.at(sys[i].var))
             << "\n";
      }
    }
    if (checking()) verdict(check_solution(sys, sol, check_len()), path);
  }

  void dfa2re(const std::string& path) {
    Dfa m = as_input([&] { return dfa_of_json(read_file(path)); });
    if (o_.prune) m = prune(m);
    Regex r = finish(dfa_to_regex(m, strategy()));
    emit(r);
    if (checking()) {
      auto lang = lang_upto(r, check_len());
      bool ok = true;
      for (const Word& w : words_upto(m.alphabet, check_len())) {
        ok = ok && dfa_accepts(m, w) == (lang.count(w) > 0);
      }
      verdict(ok, path);
    }
  }

  void nfa2re(const std::string& path) {
    Nfa m = as_input([&] { return nfa_of_json(read_file(path)); });
    Regex r = finish(nfa_to_regex(m, strategy()));
    emit(r);
    if (checking()) {
      auto lang = lang_upto(r, check_len());
      bool ok = true;
      for (const Word& w : words_upto(m.alphabet, check_len())) {
        ok = ok && nfa_accepts(m, w) == (lang.count(w) > 0);
      }
      verdict(ok, path);
    }
  }

  void binary(const std::string& op, const std::string& a,
              const std::string& b) {
    Regex r = as_input([&] { return regex_of_text(a); });
    Regex s = as_input([&] { return regex_of_text(b); });
    Regex out;
    if (op == "diff") {
      out = subtract(r, s, strategy(), mode(), rules());
    } else if (op == "isect") {
      out = intersect(r, s, strategy(), mode(), rules());
    } else {
      out = shuffle(r, s, strategy(), mode(), rules());
    }
    out = finish(out);
    emit(out);
    if (!checking()) return;
    const std::size_t n = check_len();
    auto la = lang_upto(r, n);
    auto lb = lang_upto(s, n);
    std::set<Word> want;
    if (op == "diff") {
      std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                          std::inserter(want, want.end()));
    } else if (op == "isect") {
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                            std::inserter(want, want.end()));
    } else {
      for (const Word& v : la) {
        for (const Word& w : lb) {
          if (v.size() + w.size() > n) continue;
          auto mix = shuffle_words(v, w);
          want.insert(mix.begin(), mix.end());
        }
      }
    }
    verdict(lang_upto(out, n) == want, op);
  }

  // Target of parse and ambig: a closed regex or a variable of a system.
  struct Target {
    EquationSystem sys;
    Regex g;
  };

  Target target(const std::string& re_text, const std::string& eqs_path,
                const std::string& var) {
    if (re_text.empty() == eqs_path.empty()) {
      throw InputError("give exactly one of --re and --eqs");
    }
    if (!re_text.empty()) {
      return {EquationSystem(), as_input([&] { return regex_of_text(re_text); })};
    }
    EquationSystem sys = as_input([&] {
      EquationSystem s = equations_of_text(read_file(eqs_path));
      s.validate();
      return s;
    });
    if (sys.empty()) throw InputError("no equations in " + eqs_path);
    std::string v = var.empty() ? sys[0].var : var;
    if (!sys.contains(v)) throw InputError("no equation for " + v);
    return {sys, Regex::var(v)};
  }

  void parse_word(const Target& t, const std::string& word) {
    Word w = word_of_arg(word);
    ParseTree tree = parse(t.sys, t.g, w);
    if (o_.json) {
      out_ << json{{"word", w}, {"tree", sexpr_of_tree(tree)}}.dump() << "\n";
    } else {
      out_ << sexpr_of_tree(tree) << "\n";
    }
    if (checking()) {
      verdict(flatten(tree) == w && typecheck(t.sys, tree, t.g), word);
    }
  }

  void ambig(const Target& t, std::size_t max_len, std::size_t max_nodes) {
    bool amb = is_ambiguous_bounded(t.sys, t.g, max_len, max_nodes);
    if (o_.json) {
      out_ << json{{"ambiguous", amb},
                   {"max_len", max_len},
                   {"max_nodes", max_nodes}}
                  .dump()
           << "\n";
    } else if (amb) {
      out_ << "ambiguous\n";
    } else {
      out_ << "no ambiguity up to length " << max_len << " and " << max_nodes
           << " nodes\n";
    }
  }

  void desc(const std::string& text, const std::string& alphabet) {
    Regex r = as_input([&] { return regex_of_text(text); });
    Alphabet a = alphabet.empty()
                     ? symbols_of(r)
                     : as_input([&] { return Alphabet(alphabet); });
    DescendantSet ds = descendants(r, rules(), a);
    const auto& syms = ds.alphabet().symbols();
    std::vector<Regex> shown;
    for (const Regex& m : ds.members()) shown.push_back(finish(m));
    if (o_.json) {
      json members = json::array();
      json delta = json::array();
      for (std::size_t i = 0; i < ds.size(); ++i) {
        members.push_back(text_of_regex(shown[i]));
        json row = json::array();
        for (std::size_t j = 0; j < syms.size(); ++j) {
          row.push_back(ds.successor(i, j));
        }
        delta.push_back(row);
      }
      out_ << json{{"alphabet", ds.alphabet().str()},
                   {"members", members},
                   {"delta", delta}}
                  .dump()
           << "\n";
    } else {
      for (std::size_t i = 0; i < ds.size(); ++i) {
        out_ << "D" << i << " = " << text_of_regex(shown[i]);
        for (std::size_t j = 0; j < syms.size(); ++j) {
          out_ << "  " << syms[j] << ":D" << ds.successor(i, j);
        }
        out_ << "\n";
      }
    }
    if (!checking()) return;
    const std::size_t n = check_len();
    bool ok = lang_upto(ds.members()[0], n) == lang_upto(r, n);
    for (std::size_t i = 0; ok && i < ds.size(); ++i) {
      auto li = lang_upto(ds.members()[i], n);
      for (std::size_t j = 0; ok && j < syms.size(); ++j) {
        std::set<Word> want;
        for (const Word& w : li) {
          if (!w.empty() && w[0] == syms[j]) want.insert(w.substr(1));
        }
        auto got = lang_upto(ds.members()[ds.successor(i, j)], n ? n - 1 : 0);
        if (n == 0) got.clear();
        ok = got == want;
      }
    }
    verdict(ok, text);
  }

  void bench(BenchConfig cfg, const std::vector<std::string>& names) {
    cfg.seed = o_.seed;
    cfg.strategies.clear();
    for (const auto& n : names) {
      cfg.strategies.push_back(as_input([&] { return strategy_of_name(n); }));
    }
    as_input([&] {
      cfg.validate();
      return 0;
    });
    BenchReport r = bench_compare(cfg);
    out_ << (o_.json ? json_of_report(r) : text_of_report(r));
    if (!o_.json) return;
    out_ << "\n";
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Regular equations: solving, conversions and parse trees",
               "regeq"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--strategy", o.strategy, "Equation order")
      ->check(CLI::IsMember({"default", "delgado", "cycles"}));
  app.add_option("--rules", o.rules, "Similarity rules")
      ->check(CLI::IsMember({"basic", "full"}));
  app.add_option("--mode", o.mode, "Product construction")
      ->check(CLI::IsMember({"product", "reachable"}));
  app.add_option("--normal", o.normal, "Normal form used while solving")
      ->check(CLI::IsMember({"lazy", "full"}));
  app.add_flag("--simplify", o.simplify, "Canonicalize output regexes");
  app.add_option("--check", o.check,
                 "Verify against the brute-force oracle up to this length")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_flag("--prune", o.prune, "Drop unreachable DFA states");
  app.add_flag("--json", o.json, "JSON output");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  std::string path, ra, rb, word, re_text, eqs_path, var, alphabet;
  std::size_t max_len = 6, max_nodes = 24;
  BenchConfig cfg;
  std::vector<std::string> names{"delgado", "cycles"};

  CLI::App* solve_cmd = sub("solve", "Solve an equation system file");
  solve_cmd->add_option("file", path, "Equation file or -")->required();
  CLI::App* dfa_cmd = sub("dfa2re", "Convert a DFA (JSON) to a regex");
  dfa_cmd->add_option("file", path, "DFA file or -")->required();
  CLI::App* nfa_cmd = sub("nfa2re", "Convert an NFA (JSON) to a regex");
  nfa_cmd->add_option("file", path, "NFA file or -")->required();
  std::vector<std::pair<std::string, CLI::App*>> binops;
  for (const char* op : {"diff", "isect", "shuffle"}) {
    CLI::App* c = sub(op, op == std::string("diff")    ? "Language difference"
                          : op == std::string("isect") ? "Intersection"
                                                       : "Shuffle product");
    c->add_option("r", ra)->required();
    c->add_option("s", rb)->required();
    binops.emplace_back(op, c);
  }
  CLI::App* parse_cmd = sub("parse", "Parse tree of a word");
  CLI::App* ambig_cmd = sub("ambig", "Bounded ambiguity check");
  for (CLI::App* c : {parse_cmd, ambig_cmd}) {
    c->add_option("--re", re_text, "Closed regex");
    c->add_option("--eqs", eqs_path, "Equation file");
    c->add_option("--var", var, "Variable of the system (default: first)");
  }
  parse_cmd->add_option("word", word, "Word, ~ for empty")->required();
  ambig_cmd->add_option("--max-len", max_len)->capture_default_str();
  ambig_cmd->add_option("--max-nodes", max_nodes)->capture_default_str();
  CLI::App* desc_cmd = sub("desc", "Canonical descendants of a regex");
  desc_cmd->add_option("regex", ra)->required();
  desc_cmd->add_option("--alphabet", alphabet, "Symbols, e.g. xy");
  CLI::App* bench_cmd = sub("bench", "Compare strategies on random DFAs");
  bench_cmd->add_option("--cases", cfg.cases)->capture_default_str();
  bench_cmd->add_option("--states", cfg.states)->capture_default_str();
  bench_cmd->add_option("--alphabet-size", cfg.alphabet_size)
      ->capture_default_str();
  bench_cmd->add_option("--accept", cfg.accept_prob)->capture_default_str();
  bench_cmd->add_option("--max-len", cfg.max_oracle_len)
      ->capture_default_str();
  bench_cmd->add_option("--strategies", names)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Runner run(o, out);
  try {
    if (*solve_cmd) run.solve_file(path);
    if (*dfa_cmd) run.dfa2re(path);
    if (*nfa_cmd) run.nfa2re(path);
    for (const auto& [op, c] : binops) {
      if (*c) run.binary(op, ra, rb);
    }
    if (*parse_cmd) run.parse_word(run.target(re_text, eqs_path, var), word);
    if (*ambig_cmd) {
      run.ambig(run.target(re_text, eqs_path, var), max_len, max_nodes);
    }
    if (*desc_cmd) run.desc(ra, alphabet);
    if (*bench_cmd) run.bench(cfg, names);
  } catch (const InputError& e) {
    err << "regeq: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "regeq: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "regeq: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace regeq
