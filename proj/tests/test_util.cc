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

#include "test_util.hh"

namespace regeq::testing {

Regex random_regex(SplitMix64& rng, int width, std::string_view alphabet) {
  if (width <= 0) {
    switch (rng.below(4)) {
      case 0:
        return Regex::phi();
      case 1:
        return Regex::star(Regex::eps());
      default:
        return Regex::eps();
    }
  }
  if (width == 1 && rng.below(2) == 0) {
    return Regex::sym(alphabet[rng.below(alphabet.size())]);
  }
  auto op = rng.below(10);
  if (op < 2) return Regex::star(random_regex(rng, width, alphabet));
  int left = static_cast<int>(rng.below(static_cast<std::uint64_t>(width) + 1));
  Regex l = random_regex(rng, left, alphabet);
  Regex r = random_regex(rng, width - left, alphabet);
  return op < 6 ? Regex::alt(l, r) : Regex::seq(l, r);
}

std::set<Word> all_words(std::string_view alphabet, std::size_t max_len) {
  std::set<Word> out{Word()};
  std::set<Word> frontier{Word()};
  for (std::size_t n = 0; n < max_len; ++n) {
    std::set<Word> next;
    for (const Word& w : frontier) {
      for (char c : alphabet) next.insert(w + c);
    }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

EquationSystem random_dfa_system(SplitMix64& rng, std::size_t states,
                                 std::string_view alphabet) {
  EquationSystem sys;
  for (std::size_t q = 0; q < states; ++q) {
    std::vector<Regex> parts;
    for (char c : alphabet) {
      std::size_t to = rng.below(states);
      parts.push_back(Regex::seq(Regex::sym(c),
                                 Regex::var("R" + std::to_string(to + 1))));
    }
    parts.push_back(rng.below(2) ? Regex::eps() : Regex::phi());
    sys.add("R" + std::to_string(q + 1), Regex::alt_of(parts));
  }
  return sys;
}

EquationSystem random_strict_system(SplitMix64& rng, std::size_t n,
                                    std::string_view alphabet) {
  EquationSystem sys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Regex> parts;
    auto coef = [&] {
      return random_regex(rng, 1 + static_cast<int>(rng.below(2)), alphabet);
    };
    if (rng.below(3) != 0) {
      parts.push_back(Regex::seq(coef(), Regex::var("R" + std::to_string(i + 1))));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.below(3) != 0) {
        parts.push_back(
            Regex::seq(coef(), Regex::var("R" + std::to_string(j + 1))));
      }
    }
    parts.push_back(random_regex(rng, static_cast<int>(rng.below(3)), alphabet));
    std::size_t self_at = rng.below(parts.size());
    std::swap(parts[0], parts[self_at]);
    sys.add("R" + std::to_string(i + 1), Regex::alt_of(parts));
  }
  return sys;
}

EquationSystem random_guarded_system(SplitMix64& rng, std::size_t n,
                                     std::string_view alphabet) {
  EquationSystem sys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Regex> parts;
    std::size_t terms = 1 + rng.below(3);
    for (std::size_t k = 0; k < terms; ++k) {
      Regex coef = random_regex(rng, 1 + static_cast<int>(rng.below(3)),
                                alphabet);
      while (nullable(coef)) {
        coef = random_regex(rng, 1 + static_cast<int>(rng.below(3)), alphabet);
      }
      parts.push_back(
          Regex::seq(coef, Regex::var("R" + std::to_string(rng.below(n) + 1))));
    }
    if (rng.below(4) != 0) {
      parts.push_back(random_regex(rng, static_cast<int>(rng.below(2)),
                                   alphabet));
    }
    std::size_t at = rng.below(parts.size());
    std::swap(parts[0], parts[at]);
    sys.add("R" + std::to_string(i + 1), Regex::alt_of(parts));
  }
  return sys;
}

}  // namespace regeq::testing
