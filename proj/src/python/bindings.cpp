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


#include <map>
#include <set>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regeq/automata.hpp"
#include "regeq/derivatives.hpp"
#include "regeq/equations.hpp"
#include "regeq/parse_trees.hpp"
#include "regeq/reg_ops.hpp"
#include "regeq/regex.hpp"
#include "regeq/tooling.hpp"

namespace py = pybind11;
using namespace regeq;

namespace {

Rules rules_of(const std::string& name) {
  if (name == "basic") return Rules::Basic;
  if (name == "full") return Rules::Full;
  throw Error("unknown rules " + name);
}

std::map<std::string, Regex> solve_text(const std::string& text,
                                        const std::string& strategy,
                                        const std::string& normal) {
  EquationSystem sys = equations_of_text(text);
  sys.validate();
  return solve(sys, strategy_of_name(strategy), nullptr,
               normal_mode_of_name(normal));
}

using BinOp = Regex (*)(const Regex&, const Regex&, Strategy, ProductMode,
                        Rules);

template <BinOp op>
Regex binop(const Regex& r, const Regex& s, const std::string& strategy,
            const std::string& mode, const std::string& rules) {
  return op(r, s, strategy_of_name(strategy), product_mode_of_name(mode),
            rules_of(rules));
}

}  // namespace

PYBIND11_MODULE(_regeq, m) {
  m.doc() = "Regular equations, derivatives and parse trees";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "RegexSyntaxError", base.ptr());
  py::register_exception<NoParseError>(m, "NoParseError", base.ptr());

  py::class_<Regex>(m, "Regex")
      .def(py::init([](const std::string& text) { return regex_of_text(text); }),
           py::arg("text"))
      .def("__str__", &text_of_regex)
      .def("__repr__",
           [](const Regex& r) { return "Regex('" + text_of_regex(r) + "')"; })
      .def("__eq__", [](const Regex& a, const Regex& b) { return a == b; })
      .def("__hash__", [](const Regex& r) { return RegexHash{}(r); })
      .def_property_readonly("nullable", [](const Regex& r) { return nullable(r); })
      .def_property_readonly("width", &alphabetic_width)
      .def("lang_upto", &lang_upto, py::arg("max_len"));

  m.def("deriv", &deriv, py::arg("r"), py::arg("x"));
  m.def(
      "simp", [](const Regex& r, const std::string& rules) {
        return simp(r, rules_of(rules));
      },
      py::arg("r"), py::arg("rules") = "full");
  m.def(
      "descendants",
      [](const Regex& r, const std::string& rules, const std::string& alphabet) {
        Alphabet a = alphabet.empty() ? symbols_of(r) : Alphabet(alphabet);
        return descendants(r, rules_of(rules), a).members();
      },
      py::arg("r"), py::arg("rules") = "full", py::arg("alphabet") = "");

  m.def("solve", &solve_text, py::arg("equations"),
        py::arg("strategy") = "default", py::arg("normal") = "lazy",
        "Solves a system given in text form; maps each variable to a regex.");
  m.def(
      "dfa_to_regex",
      [](const std::string& json, const std::string& strategy, bool pruned) {
        Dfa d = dfa_of_json(json);
        return dfa_to_regex(pruned ? prune(d) : d, strategy_of_name(strategy));
      },
      py::arg("json"), py::arg("strategy") = "default", py::arg("prune") = false);
  m.def(
      "nfa_to_regex",
      [](const std::string& json, const std::string& strategy) {
        return nfa_to_regex(nfa_of_json(json), strategy_of_name(strategy));
      },
      py::arg("json"), py::arg("strategy") = "default");

  m.def("subtract", &binop<subtract>, py::arg("r"), py::arg("s"),
        py::arg("strategy") = "default", py::arg("mode") = "product",
        py::arg("rules") = "full");
  m.def("intersect", &binop<intersect>, py::arg("r"), py::arg("s"),
        py::arg("strategy") = "default", py::arg("mode") = "product",
        py::arg("rules") = "full");
  m.def("shuffle", &binop<shuffle>, py::arg("r"), py::arg("s"),
        py::arg("strategy") = "default", py::arg("mode") = "product",
        py::arg("rules") = "full");
  m.def("shuffle_words", &shuffle_words, py::arg("v"), py::arg("w"));

  m.def(
      "parse",
      [](const Regex& r, const std::string& word) {
        return sexpr_of_tree(parse(EquationSystem(), r, word));
      },
      py::arg("r"), py::arg("word"));
  m.def(
      "is_ambiguous",
      [](const Regex& r, std::size_t max_len, std::size_t max_nodes) {
        return is_ambiguous_bounded(EquationSystem(), r, max_len, max_nodes);
      },
      py::arg("r"), py::arg("max_len") = 6, py::arg("max_nodes") = 24);

  m.def(
      "bench_json",
      [](std::size_t cases, std::size_t states, std::uint64_t seed) {
        BenchConfig cfg;
        cfg.cases = cases;
        cfg.states = states;
        cfg.seed = seed;
        cfg.validate();
        py::gil_scoped_release nogil;
        return json_of_report(bench_compare(cfg));
      },
      py::arg("cases") = 200, py::arg("states") = 5, py::arg("seed") = 1);
}
