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

#include "affstan/affine_permutation.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using affstan::AffinePermutation;
using affstan::CorootVector;
using affstan::Partition;
using affstan::Permutation;
using affstan::Word;

namespace {

bool window_invariants_hold(const AffinePermutation& w) {
  const int n = w.rank();
  std::set<int> residues;
  long sum = 0;
  for (int v : w.window()) {
    residues.insert(((v % n) + n) % n);
    sum += v;
  }
  return static_cast<int>(residues.size()) == n && sum == n * (n + 1) / 2;
}

// The bijection Z -> Z given by the window, applied literally.
AffinePermutation swap_values_everywhere(const AffinePermutation& w, int i) {
  const int n = w.rank();
  std::vector<int> win(n);
  for (int p = 1; p <= n; ++p) {
    // positions i + kn and i + kn + 1 exchange values
    const int r = ((p - i) % n + n) % n;
    if (r == 0)
      win[p - 1] = w(p + 1);
    else if (r == 1)
      win[p - 1] = w(p - 1);
    else
      win[p - 1] = w(p);
  }
  return AffinePermutation(win);
}

}  // namespace

TEST_CASE("generators act by swapping positions") {
  const auto id = AffinePermutation::identity(3);
  CHECK(id.right_multiply(0).window() == std::vector<int>{0, 2, 4});
  CHECK(AffinePermutation::from_word(3, {2, 1, 2, 0}).window() ==
        std::vector<int>{-2, 2, 6});
  std::mt19937 rng(7);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 200; ++trial) {
      AffinePermutation w = AffinePermutation::identity(n);
      const int len = static_cast<int>(rng() % 11);
      for (int k = 0; k < len; ++k) {
        const int i = static_cast<int>(rng() % n);
        const auto next = w.right_multiply(i);
        CHECK(next == swap_values_everywhere(w, i));
        CHECK(next.right_multiply(i) == w);
        CHECK(window_invariants_hold(next));
        w = next;
      }
    }
  }
}

TEST_CASE("affine reduced words") {
  CHECK(affstan::reduced_words(AffinePermutation({-2, 2, 6})) ==
        std::vector<Word>{{1, 2, 1, 0}, {2, 1, 2, 0}});
  CHECK(affstan::reduced_words(AffinePermutation::identity(3)) ==
        std::vector<Word>{Word{}});
  const auto w = AffinePermutation::from_word(3, {2, 1, 2, 0, 2});
  CHECK(affstan::reduced_words(w) ==
        std::vector<Word>{{1, 2, 1, 0, 2}, {2, 1, 0, 2, 0}, {2, 1, 2, 0, 2}});
}

TEST_CASE("affine length equals code size and Cayley distance") {
  for (int n : {3, 4}) {
    const int radius = n == 3 ? 7 : 5;
    const auto dist = oracle::cayley_distances(
        AffinePermutation::identity(n), 0, n - 1, radius,
        [](const AffinePermutation& w, int i) { return w.right_multiply(i); });
    for (const auto& [w, d] : dist) {
      CHECK(w.length() == d);
      int sum = 0;
      for (int c : affstan::code(w)) sum += c;
      CHECK(sum == d);
      bool has_zero = false;
      for (int c : affstan::code(w)) has_zero |= c == 0;
      CHECK(has_zero);
    }
    CHECK(affstan::affine_elements(n, radius).size() == dist.size());
  }
}

TEST_CASE("codes and lambda for affine elements") {
  const auto w = AffinePermutation::from_word(3, {2, 0, 1, 2, 1, 0});
  CHECK(w.window() == std::vector<int>{-4, 3, 7});
  // c_2 counts j = 3, 4, 6, 7, 10; c_3 counts j = 4
  CHECK(affstan::code(w.inverse()) == affstan::Composition{0, 5, 1});
  CHECK(Partition::from_composition(affstan::code(w.inverse())) ==
        Partition{5, 1});
  CHECK(affstan::lambda_of(w) == Partition{2, 1, 1, 1, 1});
  CHECK(affstan::code(AffinePermutation::identity(4)) ==
        affstan::Composition{0, 0, 0, 0});
  CHECK(affstan::lambda_of(AffinePermutation::identity(4)).empty());
}

TEST_CASE("Grassmannian elements biject with bounded partitions") {
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : affstan::bounded_partitions(3, d)) {
      const auto w = affstan::grassmannian_from_partition(3, lam);
      CHECK(w.is_grassmannian());
      CHECK(w.length() == d);
      CHECK(affstan::lambda_of(w) == lam);
    }
  CHECK(affstan::grassmannian_from_partition(3, {}).is_identity());
  CHECK(affstan::grassmannian_from_partition(3, {2, 1}).length() == 3);
  CHECK(affstan::reduced_words(
            affstan::grassmannian_from_partition(3, {2, 1, 1}))
            .size() == 2);
  CHECK_THROWS_AS(affstan::grassmannian_from_partition(3, {3}),
                  std::invalid_argument);
  // counts by length agree with bounded partition counts
  for (int n : {3, 4}) {
    const auto all = affstan::affine_elements(n, 6);
    for (int d = 0; d <= 6; ++d) {
      std::size_t count = 0;
      for (const auto& w : all)
        if (w.length() == d && w.is_grassmannian()) ++count;
      CHECK(count == affstan::bounded_partitions(n, d).size());
    }
  }
}

TEST_CASE("cyclically decreasing elements") {
  CHECK(affstan::cyclically_decreasing(3, {}).is_identity());
  CHECK(affstan::cyclically_decreasing_word(4, {2, 1}) == Word{2, 1});
  CHECK(affstan::cyclically_decreasing_word(3, {0, 1}) == Word{1, 0});
  CHECK_THROWS_AS(affstan::cyclically_decreasing(3, {0, 1, 2}),
                  std::invalid_argument);
  for (int n : {3, 4})
    for (int k = 0; k <= std::min(3, n - 1); ++k)
      for (const auto& s : affstan::strict_subsets(n, k)) {
        const auto w = affstan::cyclically_decreasing(n, s);
        CHECK(w.length() == k);
        // every reduced word of w is a cyclically decreasing ordering of s
        // and every such ordering is a reduced word of w
        std::set<Word> orderings;
        Word perm(s.begin(), s.end());
        do {
          if (affstan::is_cyclically_decreasing_word(n, perm))
            orderings.insert(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto words = affstan::reduced_words(w);
        CHECK(std::set<Word>(words.begin(), words.end()) == orderings);
      }
}

TEST_CASE("translations") {
  CHECK(affstan::translation_element(CorootVector::zero(3)).is_identity());
  CHECK(affstan::translation_element(CorootVector({-1, 0, 1})).window() ==
        std::vector<int>{-2, 2, 6});
  CHECK_THROWS_AS(CorootVector({1, 0, 0}), std::invalid_argument);
  // s_0 = s_theta t_{-theta}
  for (int n : {3, 4, 5}) {
    std::vector<int> theta(n, 0);
    theta[0] = 1;
    theta[n - 1] = -1;
    const auto t = affstan::translation_element(-CorootVector(theta));
    const auto s_theta = AffinePermutation::from_permutation(
        Permutation::transposition(n, 1, n));
    CHECK(s_theta * t == AffinePermutation::simple(n, 0));
  }
  // t_a t_b = t_{a+b}, w t_a w^-1 = t_{w a}
  std::vector<CorootVector> small;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) small.emplace_back(std::vector<int>{a, b, -a - b});
  for (const auto& a : small) {
    const auto ta = affstan::translation_element(a);
    for (const auto& b : small)
      CHECK(ta * affstan::translation_element(b) ==
            affstan::translation_element(a + b));
    for (const auto& w : affstan::all_permutations(3)) {
      const auto aw = AffinePermutation::from_permutation(w);
      CHECK(aw * ta * aw.inverse() ==
            affstan::translation_element(affstan::act(w, a)));
    }
  }
}

TEST_CASE("length formula for w t_lambda") {
  CHECK(affstan::length_via_formula(Permutation::identity(3),
                                    CorootVector::zero(3)) == 0);
  CHECK(affstan::length_via_formula(Permutation::identity(3),
                                    CorootVector({1, 0, -1})) == 4);
  for (const auto& w : affstan::all_permutations(3))
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const int c = -a - b;
        if (c < -2 || c > 2) continue;
        const CorootVector lam({a, b, c});
        const auto x = AffinePermutation::from_permutation(w) *
                       affstan::translation_element(lam);
        const int expected =
            static_cast<int>(affstan::reduced_words(x).front().size());
        CHECK(affstan::length_via_formula(w, lam) == expected);
      }
}

TEST_CASE("Grassmannian translations are antidominant") {
  for (const auto& w : affstan::affine_elements(3, 8)) {
    const auto lam = affstan::translation_part(w);
    if (!lam || !w.is_grassmannian()) continue;
    CHECK(lam->is_antidominant());
  }
  for (int a = -3; a <= 0; ++a)
    for (int b = a; b <= 3; ++b) {
      const int c = -a - b;
      if (c < b) continue;
      const auto t = affstan::translation_element(CorootVector({a, b, c}));
      if (t.length() <= 8) CHECK(t.is_grassmannian());
    }
}
