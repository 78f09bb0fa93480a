# Copyright 2026 The regeq Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regular equations, Brzozowski derivatives and parse-tree coercions."""

import json as _json

from ._regeq import (
    Error,
    NoParseError,
    Regex,
    RegexSyntaxError,
    deriv,
    descendants,
    dfa_to_regex,
    intersect,
    is_ambiguous,
    nfa_to_regex,
    parse,
    shuffle,
    shuffle_words,
    simp,
    solve,
    subtract,
)


def bench(cases=200, states=5, seed=1):
    """Strategy comparison on random DFAs, as a dict."""
    from ._regeq import bench_json

    return _json.loads(bench_json(cases, states, seed))


__all__ = [
    "Error",
    "NoParseError",
    "Regex",
    "RegexSyntaxError",
    "bench",
    "deriv",
    "descendants",
    "dfa_to_regex",
    "intersect",
    "is_ambiguous",
    "nfa_to_regex",
    "parse",
    "shuffle",
    "shuffle_words",
    "simp",
    "solve",
    "subtract",
]
