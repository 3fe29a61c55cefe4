/* Copyright 2026 The affstan Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "affstan/permutation.hpp"

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

using affstan::Permutation;
using affstan::Word;

namespace {

// Inverse of the code construction, by search over S_n.
Permutation code_search(const affstan::Composition& c, int n) {
  for (const auto& w : affstan::all_permutations(n))
    if (affstan::code(w) == c) return w;
  FAIL("no permutation has this code");
  return Permutation{};
}

bool has_consecutive_jj1j(const Word& w) {
  for (std::size_t k = 0; k + 2 < w.size(); ++k)
    if (w[k] == w[k + 2] && w[k + 1] == w[k] + 1) return true;
  return false;
}

}  // namespace

TEST_CASE("products") {
  const auto s1 = Permutation::simple(3, 1);
  CHECK((s1 * s1).is_identity());
  CHECK(Permutation::from_word(4, {2, 3, 1, 2, 3}) == Permutation({3, 4, 2, 1}));
  const Permutation w({2, 1, 6, 5, 3, 4});
  CHECK((w * w.inverse()).is_identity());
  // mixed ranks embed
  CHECK(Permutation({2, 1}) * Permutation({1, 3, 2}) == Permutation({2, 3, 1}));
}

TEST_CASE("length") {
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(Permutation({3, 4, 2, 1}).length() == 5);
  CHECK(Permutation::longest(4).length() == 6);
}

TEST_CASE("reduced words") {
  CHECK(affstan::reduced_words(Permutation({2, 4, 3, 1})) ==
        std::vector<Word>{{1, 2, 3, 2}, {1, 3, 2, 3}, {3, 1, 2, 3}});
  CHECK(affstan::reduced_words(Permutation::identity(3)) ==
        std::vector<Word>{Word{}});
  CHECK(affstan::reduced_words(Permutation::longest(4)).size() == 16);
}

TEST_CASE("reduced words are exactly the shortest words, S_4 and S_5") {
  for (int n : {4, 5}) {
    const auto dist = oracle::cayley_distances(
        Permutation::identity(n), 1, n - 1, 10,
        [](const Permutation& w, int i) { return w.right_multiply(i); });
    for (const auto& [w, d] : dist) {
      CHECK(w.length() == d);
      if (d > 6) continue;
      const auto words = affstan::reduced_words(w);
      CHECK(std::is_sorted(words.begin(), words.end()));
      for (const auto& word : words) {
        CHECK(static_cast<int>(word.size()) == d);
        CHECK(Permutation::from_word(n, word) == w);
      }
    }
  }
}

TEST_CASE("codes") {
  const Permutation w({2, 1, 6, 5, 3, 4});
  CHECK(affstan::code(w) == affstan::Composition{1, 0, 3, 2, 0, 0});
  CHECK(affstan::code(w.inverse()) == affstan::Composition{1, 0, 2, 2, 1, 0});
  CHECK(affstan::code(Permutation::identity(3)) == affstan::Composition{0, 0, 0});
  CHECK(affstan::from_code({1, 0, 3, 2, 0, 0}) == w);
  CHECK(affstan::from_code({0, 0, 0}).is_identity());
  CHECK(affstan::from_code({2, 1}) == Permutation({3, 2, 1}));
  CHECK(code_search({2, 1, 0}, 3) == Permutation({3, 2, 1}));
  for (const auto& v : affstan::all_permutations(5)) {
    const auto c = affstan::code(v);
    int sum = 0;
    for (int x : c) sum += x;
    CHECK(sum == v.length());
    CHECK(affstan::from_code(c) == v);
    CHECK(code_search(c, 5) == v);
  }
}

TEST_CASE("lambda of a permutation") {
  CHECK(affstan::lambda_of(Permutation({2, 1, 6, 5, 3, 4})) ==
        affstan::Partition{4, 2});
  CHECK(affstan::lambda_of(Permutation({2, 4, 3, 1})) ==
        affstan::Partition{2, 1, 1});
  CHECK(affstan::lambda_of(Permutation::identity(4)).empty());
}

TEST_CASE("pattern conditions") {
  const Permutation w({2, 4, 3, 1});
  CHECK_FALSE(affstan::is_grassmannian(w));
  const auto id = Permutation::identity(4);
  CHECK(affstan::is_grassmannian(id));
  CHECK(affstan::is_321_avoiding(id));
  CHECK(affstan::is_vexillary(id));
  CHECK(affstan::is_vexillary(Permutation::longest(4)));
  CHECK_FALSE(affstan::is_vexillary(Permutation({2, 1, 4, 3})));
}

TEST_CASE("321-avoidance matches the j(j+1)j criterion on S_5") {
  for (const auto& w : affstan::all_permutations(5)) {
    bool pattern = false;
    for (const auto& word : affstan::reduced_words(w))
      pattern |= has_consecutive_jj1j(word);
    CHECK(affstan::is_321_avoiding(w) == !pattern);
  }
}

TEST_CASE("permutation input validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_word(3, {3}), std::invalid_argument);
  CHECK(affstan::parse_permutation("2431") == Permutation({2, 4, 3, 1}));
  CHECK(affstan::parse_permutation("[2,4,3,1]") == Permutation({2, 4, 3, 1}));
  CHECK(affstan::to_string(Permutation({2, 4, 3, 1})) == "2431");
  CHECK(affstan::one_times(Permutation({2, 4, 1, 3, 5})) ==
        Permutation({1, 3, 5, 2, 4, 6}));
}
