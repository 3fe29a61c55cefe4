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

#include "affstan/stanley.hpp"

#include <map>

#include "doctest.h"
#include "oracles.hpp"

using affstan::AffinePermutation;
using affstan::Basis;
using affstan::Composition;
using affstan::Partition;
using affstan::Permutation;
using affstan::StanleyMethod;
using affstan::SymFunc;
using affstan::Word;

namespace {

SymFunc make(Basis b, int degree,
             std::initializer_list<std::pair<Partition, int>> terms) {
  SymFunc f(degree, b);
  for (const auto& [p, c] : terms) f.add(p, c);
  return f;
}

// Coefficient of x^alpha as a count of tuples of decreasing elements whose
// concatenated words multiply to w with lengths adding up; products are
// formed directly, with no descent tests.
affstan::Integer factorization_oracle(const Permutation& w,
                                      const Composition& alpha) {
  const int n = w.rank();
  std::vector<Word> decreasing;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Word word;
    for (int i = n - 1; i >= 1; --i)
      if (mask & (1u << (i - 1))) word.push_back(i);
    decreasing.push_back(word);
  }
  affstan::Integer count = 0;
  auto rec = [&](auto& self, std::size_t k, Word acc) -> void {
    if (k == alpha.size()) {
      if (static_cast<int>(acc.size()) == w.length() &&
          Permutation::from_word(n, acc) == w)
        ++count;
      return;
    }
    for (const auto& d : decreasing) {
      if (static_cast<int>(d.size()) != alpha[k]) continue;
      Word next = acc;
      next.insert(next.end(), d.begin(), d.end());
      self(self, k + 1, next);
    }
  };
  rec(rec, 0, {});
  return count;
}

// Skew semistandard tableaux of shape lam/mu with content alpha.
affstan::Integer count_skew_ssyt(const Partition& lam, const Partition& mu,
                                 std::vector<int> content) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = mu[i]; j < lam[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> t;
  affstan::Integer total = 0;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++total;
      return;
    }
    const auto [i, j] = cells[k];
    for (std::size_t v = 0; v < content.size(); ++v) {
      const int val = static_cast<int>(v) + 1;
      if (content[v] == 0) continue;
      auto left = t.find({i, j - 1});
      if (left != t.end() && left->second > val) continue;
      auto up = t.find({i - 1, j});
      if (up != t.end() && up->second >= val) continue;
      t[{i, j}] = val;
      --content[v];
      self(self, k + 1);
      ++content[v];
      t.erase({i, j});
    }
  };
  rec(rec, 0);
  return total;
}

std::vector<Permutation> group_up_to(int n, int max_length) {
  std::vector<Permutation> out;
  for (const auto& w : affstan::all_permutations(n))
    if (w.length() <= max_length) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("Stanley symmetric function examples") {
  const Permutation w({2, 4, 3, 1});
  const auto expected = make(Basis::m(), 4, {{{2, 1, 1}, 1}, {{1, 1, 1, 1}, 3}});
  for (auto m : {StanleyMethod::original, StanleyMethod::decreasing,
                 StanleyMethod::quasisym})
    CHECK(affstan::stanley(w, m) == expected);
  CHECK(affstan::schur_expand(w) == SymFunc::basis_element(Basis::s(), {2, 1, 1}));
  CHECK(affstan::change_basis(expected, Basis::s()) ==
        SymFunc::basis_element(Basis::s(), {2, 1, 1}));
  // the quasi-symmetric expansion over R(w^-1)
  const auto q = affstan::stanley_quasisym(w);
  CHECK(q == affstan::fundamental_quasisym({1, 3}, 4) +
                 affstan::fundamental_quasisym({1, 2}, 4) +
                 affstan::fundamental_quasisym({2, 3}, 4));
  CHECK(affstan::stanley(Permutation::identity(4)) ==
        SymFunc::basis_element(Basis::m(), {}));
  for (int r = 1; r < 5; ++r)
    CHECK(affstan::stanley(Permutation::simple(5, r)) ==
          SymFunc::basis_element(Basis::m(), {1}));
  CHECK(affstan::schur_expand(Permutation::longest(4)) ==
        SymFunc::basis_element(Basis::s(), {3, 2, 1}));
  CHECK(affstan::parse_stanley_method("quasisym") == StanleyMethod::quasisym);
  CHECK_THROWS_AS(affstan::parse_stanley_method("x"), std::invalid_argument);
}

TEST_CASE("decreasing factorizations against direct products") {
  for (const auto& w : affstan::all_permutations(4))
    for (const auto& alpha : affstan::compositions(w.length())) {
      const auto c = factorization_oracle(w, alpha);
      CHECK(affstan::stanley_coefficient(w, alpha) == c);
      CHECK(affstan::stanley_coefficient_by_words(w, alpha) == c);
    }
  // zero parts contribute the identity factor
  const Permutation w({2, 4, 3, 1});
  CHECK(affstan::stanley_coefficient(w, {0, 2, 0, 1, 1}) == 1);
  CHECK(affstan::stanley_coefficient(w, {1, 1, 1}) == 0);
}

TEST_CASE("definitions agree and are symmetric") {
  for (int n : {4, 5})
    for (const auto& w : group_up_to(n, n == 5 ? 7 : 10)) {
      const auto f = affstan::stanley(w, StanleyMethod::decreasing);
      CHECK(affstan::stanley(w, StanleyMethod::original) == f);
      CHECK(affstan::stanley(w, StanleyMethod::quasisym) == f);
      CHECK(!affstan::asymmetry_witness(w));
      CHECK(affstan::stanley(affstan::one_times(w)) == f);
    }
}

TEST_CASE("dominance and Schur expansions") {
  for (int n : {4, 5})
    for (const auto& w : affstan::all_permutations(n)) {
      const auto f = affstan::stanley(w);
      const auto lam = affstan::lambda_of(w);
      CHECK(f.coeff(lam) == 1);
      for (const auto& [mu, c] : f.terms()) CHECK(affstan::dominance_leq(mu, lam));
      const auto s = affstan::schur_expand(w);
      CHECK(affstan::change_basis(f, Basis::s()) == s);
      affstan::Integer terms = 0;
      for (const auto& [mu, c] : s.terms()) {
        CHECK(c > 0);
        terms += c;
      }
      CHECK((terms == 1) == affstan::is_vexillary(w));
      if (affstan::is_grassmannian(w)) CHECK(s.terms().size() == 1);
    }
}

TEST_CASE("321-avoiding permutations give skew Schur functions") {
  for (const auto& w : affstan::all_permutations(4)) {
    if (!affstan::is_321_avoiding(w)) continue;
    const int d = w.length();
    const auto f = affstan::stanley(w);
    bool found = false;
    for (int outer = d; outer <= 2 * d && !found; ++outer)
      for (const auto& lam : affstan::partitions(outer)) {
        if (found) break;
        for (const auto& mu : affstan::partitions(outer - d)) {
          if (!affstan::contained_in(mu, lam)) continue;
          bool same = true;
          for (const auto& nu : affstan::partitions(d))
            if (count_skew_ssyt(lam, mu, nu.parts()) != f.coeff(nu)) {
              same = false;
              break;
            }
          if (same) {
            found = true;
            break;
          }
        }
      }
    CHECK(found);
  }
}

TEST_CASE("affine Stanley symmetric functions") {
  const auto w = AffinePermutation::from_word(3, {2, 1, 2, 0, 2});
  CHECK(affstan::affine_stanley(w) ==
        make(Basis::m(), 5,
             {{{2, 2, 1}, 1}, {{2, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1}, 3}}));
  const Basis af = Basis::affine_schur(3);
  // F~_221 = m221 + m2111 + m11111 and F~_2111 = m2111 + 2m11111 already
  // account for every monomial
  CHECK(affstan::affine_schur_expand(w) ==
        make(af, 5, {{{2, 2, 1}, 1}, {{2, 1, 1, 1}, 1}}));
  CHECK(affstan::affine_stanley(AffinePermutation::identity(3)) ==
        SymFunc::basis_element(Basis::m(), {}));

  for (int n : {3, 4})
    for (const auto& u : affstan::all_permutations(n))
      CHECK(affstan::affine_stanley(AffinePermutation::from_permutation(u)) ==
            affstan::stanley(u));

  for (int n : {3, 4})
    for (const auto& v : affstan::affine_elements(n, n == 3 ? 6 : 5)) {
      const auto f = affstan::affine_stanley(v);
      CHECK(!affstan::asymmetry_witness(v));
      const Composition ones(v.length(), 1);
      CHECK(f.coeff(Partition(ones)) == affstan::reduced_words(v).size());
      const auto lam = affstan::lambda_of(v);
      CHECK(f.coeff(lam) == 1);
      for (const auto& [mu, c] : f.terms()) CHECK(affstan::dominance_leq(mu, lam));
      const auto e = affstan::affine_schur_expand(v);
      for (const auto& [mu, c] : e.terms()) CHECK(c > 0);
      if (v.is_grassmannian())
        CHECK(e == SymFunc::basis_element(Basis::affine_schur(n), lam));
    }
}

TEST_CASE("two-column reduced word counts for n = 3") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) {
      std::vector<int> parts(a, 2);
      parts.insert(parts.end(), b, 1);
      const auto w = affstan::grassmannian_from_partition(3, Partition(parts));
      affstan::Integer binom = 1;
      const int top = b / 2 + a;
      for (int i = 1; i <= a; ++i) binom = binom * (top - a + i) / i;
      CHECK(affstan::reduced_words(w).size() == binom);
    }
  CHECK(affstan::reduced_words(
            affstan::grassmannian_from_partition(3, {2, 1, 1})) ==
        std::vector<Word>{{1, 2, 1, 0}, {2, 1, 2, 0}});
}

TEST_CASE("affine coproduct") {
  CHECK(affstan::coproduct_check(AffinePermutation::identity(3)));
  CHECK(affstan::coproduct_check(AffinePermutation::from_word(3, {2, 1, 2, 0, 2})));
  for (const auto& v : affstan::affine_elements(3, 5))
    CHECK(affstan::coproduct_check(v));
  CHECK(affstan::length_additive_factorizations(AffinePermutation::simple(3, 0))
            .size() == 2);
}
