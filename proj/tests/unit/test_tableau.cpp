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

#include "affstan/tableau.hpp"

#include <map>
#include <set>

#include "affstan/stanley.hpp"
#include "doctest.h"
#include "oracles.hpp"

using affstan::MarkedWord;
using affstan::Partition;
using affstan::Permutation;
using affstan::Tableau;
using affstan::Word;

namespace {

constexpr int kBig = 9;

Permutation perm_of(const Word& w) { return Permutation::from_word(kBig, w); }

std::vector<Permutation> group_up_to(int n, int max_length) {
  std::vector<Permutation> out;
  for (const auto& w : affstan::all_permutations(n))
    if (w.length() <= max_length) out.push_back(w);
  return out;
}

// Every marked reduced word (i, a) with i in R(u) and i minus its a-th
// letter a reduced word for v.
std::set<MarkedWord> marked_words(const Permutation& u, const Permutation& v) {
  std::set<MarkedWord> out;
  for (const auto& word : affstan::reduced_words(u))
    for (int a = 1; a <= static_cast<int>(word.size()); ++a) {
      const MarkedWord m{word, a};
      const Word rest = affstan::unmarked(m);
      if (affstan::is_reduced(rest) && perm_of(rest) == v.embed(kBig))
        out.insert(m);
    }
  return out;
}

}  // namespace

TEST_CASE("tableau basics") {
  CHECK(Tableau({{1, 2, 3}, {2, 3}}).reading_word() == Word{2, 3, 1, 2, 3});
  CHECK(Tableau(std::vector<std::vector<int>>{{4}}).reading_word() == Word{4});
  CHECK(Tableau({{1, 2}, {2}}).reading_word() == Word{2, 1, 2});
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), std::invalid_argument);
  const Tableau t({{1, 3, 4}, {2, 5}});
  CHECK(t.is_standard());
  CHECK(t.descent_set() == std::vector<int>{1, 4});
  CHECK(Tableau({{1, 1}, {2}}).is_semistandard());
  CHECK(!Tableau({{1, 1}, {2}}).is_row_strict());
  CHECK(!Tableau({{1, 2}, {1}}).is_column_strict());
  CHECK(affstan::to_string(t) == "1 3 4\n2 5\n");
  for (int d = 0; d <= 7; ++d)
    for (const auto& lam : affstan::partitions(d)) {
      const auto tabs = affstan::standard_tableaux(lam);
      CHECK(tabs.size() == oracle::count_fillings(lam.parts()));
      for (const auto& s : tabs) CHECK(s.is_standard());
    }
}

TEST_CASE("Edelman-Greene insertion examples") {
  const auto r = affstan::eg_insert({2, 1, 2, 3, 2});
  CHECK(r.p == Tableau({{1, 2, 3}, {2, 3}}));
  CHECK(r.q == Tableau({{1, 3, 4}, {2, 5}}));
  CHECK(affstan::eg_insert({3}).p == Tableau(std::vector<std::vector<int>>{{3}}));
  CHECK(affstan::eg_insert({3}).q == Tableau(std::vector<std::vector<int>>{{1}}));
  CHECK(affstan::eg_insert({}).p.rows().empty());
  CHECK_THROWS_AS(affstan::eg_insert({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(affstan::eg_insert({1, 2, 1, 2}), std::invalid_argument);
  for (const auto& word : affstan::reduced_words(Permutation::longest(4)))
    CHECK(affstan::eg_insert(word).p == Tableau({{1, 2, 3}, {2, 3}, {3}}));
}

TEST_CASE("insertion is a bijection onto (EG-tableau, standard) pairs") {
  for (int n : {3, 4, 5})
    for (const auto& w : group_up_to(n, n == 5 ? 7 : 10)) {
      const auto words = affstan::reduced_words(w);
      std::set<std::pair<Tableau, Tableau>> seen;
      std::map<Partition, std::set<Tableau>> eg_by_shape;
      for (const auto& word : words) {
        const auto [p, q] = affstan::eg_insert(word);
        CHECK(seen.emplace(p, q).second);
        CHECK(p.shape() == q.shape());
        CHECK(q.is_standard());
        CHECK(p.is_row_strict());
        CHECK(p.is_column_strict());
        CHECK(perm_of(p.reading_word()) == w.embed(kBig));
        CHECK(affstan::is_reduced(p.reading_word()));
        CHECK(affstan::descent_set(word) == q.descent_set());
        CHECK(affstan::contained_in(p.shape(), affstan::staircase(n - 1)));
        eg_by_shape[p.shape()].insert(p);
      }
      affstan::Integer total = 0;
      for (const auto& [shape, tabs] : eg_by_shape)
        total += affstan::count_standard_tableaux(shape) * tabs.size();
      CHECK(total == words.size());
    }
}

TEST_CASE("Coxeter-Knuth classes are insertion fibers") {
  CHECK(affstan::coxeter_knuth_neighbors({1, 2, 1}) ==
        std::vector<Word>{{2, 1, 2}});
  CHECK(affstan::coxeter_knuth_neighbors({2, 1, 3}) ==
        std::vector<Word>{{2, 3, 1}});
  CHECK(affstan::coxeter_knuth_neighbors({3, 1, 2}) ==
        std::vector<Word>{{1, 3, 2}});
  CHECK(affstan::coxeter_knuth_classes(Permutation::simple(3, 1)).size() == 1);
  for (int n : {4, 5})
    for (const auto& w : group_up_to(n, n == 5 ? 7 : 10)) {
      std::map<Tableau, std::vector<Word>> fibers;
      for (const auto& word : affstan::reduced_words(w))
        fibers[affstan::eg_insert(word).p].push_back(word);
      std::set<std::vector<Word>> expected;
      for (auto& [p, words] : fibers) expected.insert(words);
      const auto classes = affstan::coxeter_knuth_classes(w);
      CHECK(std::set<std::vector<Word>>(classes.begin(), classes.end()) ==
            expected);
    }
}

TEST_CASE("Little moves") {
  const auto path = affstan::little_path({{2, 1, 3, 4, 3, 2, 1}, 5});
  REQUIRE(path.size() == 4);
  CHECK(path[1] == MarkedWord{{2, 1, 3, 4, 2, 2, 1}, 6});
  CHECK(path[2] == MarkedWord{{2, 1, 3, 4, 2, 1, 1}, 7});
  CHECK(path[3] == MarkedWord{{3, 2, 4, 5, 3, 2, 1}, 7});
  CHECK(perm_of({2, 1, 3, 4, 3, 2, 1}) == Permutation({5, 3, 1, 4, 2}).embed(kBig));
  CHECK(perm_of(affstan::unmarked(path[0])) ==
        Permutation({4, 3, 1, 5, 2}).embed(kBig));
  CHECK(perm_of(path[3].word) == Permutation({5, 1, 4, 2, 6, 3}).embed(kBig));
  // a decrement that stays reduced is a single step
  CHECK(affstan::little_path({{3}, 1}).size() == 2);
  CHECK(affstan::little_move({{3}, 1}) == MarkedWord{{2}, 1});
  CHECK(affstan::little_move({{1}, 1}) == MarkedWord{{1}, 1});
  CHECK_THROWS_AS(affstan::little_move({{1, 1}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(affstan::little_move({{1}, 2}), std::invalid_argument);
  // 232 is reduced but deleting its middle letter is not
  CHECK_THROWS_AS(affstan::little_move({{2, 3, 2}, 2}), std::invalid_argument);

  // the dual-EG example: both ends share a recording tableau
  const Tableau q({{1, 3, 4}, {2, 5}, {6}, {7}});
  CHECK(affstan::eg_insert(path[0].word).q == q);
  CHECK(affstan::eg_insert(path[3].word).q == q);
}

TEST_CASE("Little move is invertible on S4") {
  // Different marked words can share an image, one through a shift of
  // letters and one without; the shift flag separates them.
  CHECK(affstan::little_move({{1, 3}, 1}) == MarkedWord{{1, 4}, 1});
  CHECK(affstan::little_move({{2, 4}, 1}) == MarkedWord{{1, 4}, 1});
  CHECK(affstan::little_move_inverse({{1, 4}, 1}, true) == MarkedWord{{1, 3}, 1});
  CHECK(affstan::little_move_inverse({{1, 4}, 1}, false) == MarkedWord{{2, 4}, 1});

  std::set<std::pair<MarkedWord, bool>> images;
  int count = 0;
  for (const auto& w : affstan::all_permutations(4))
    for (const auto& word : affstan::reduced_words(w))
      for (int a = 1; a <= static_cast<int>(word.size()); ++a) {
        const MarkedWord m{word, a};
        if (!affstan::is_reduced(affstan::unmarked(m))) continue;
        const auto path = affstan::little_path(m);
        const bool shifted = affstan::path_shifts(path);
        CHECK(affstan::is_reduced(path.back().word));
        CHECK(images.emplace(path.back(), shifted).second);
        CHECK(affstan::little_move_inverse(path.back(), shifted) == m);
        ++count;
      }
  CHECK(count > 100);
}

TEST_CASE("transition sides") {
  const auto id = affstan::transition_sides(Permutation::identity(3), 1);
  CHECK(id.left == std::vector<Permutation>{Permutation::simple(4, 1)});
  CHECK(id.right.empty());
  CHECK(id.extra == Permutation::simple(4, 1));
  const auto id2 = affstan::transition_sides(Permutation::identity(3), 2);
  CHECK(id2.left == std::vector<Permutation>{Permutation::simple(4, 2)});
  CHECK(id2.right == std::vector<Permutation>{Permutation::simple(4, 1)});
  CHECK(!id2.extra);
  const Permutation w({4, 3, 1, 5, 2});
  const auto ex = affstan::transition_sides(w, 1);
  CHECK(ex.left == std::vector<Permutation>{Permutation({5, 3, 1, 4, 2, 6})});
  CHECK(ex.right.empty());
  CHECK(ex.extra == Permutation({5, 1, 4, 2, 6, 3}));
  CHECK_THROWS_AS(affstan::transition_sides(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(affstan::transition_sides(w, 6), std::invalid_argument);

  // last-descent recipe: the left side is the single term u
  for (int n : {3, 4, 5})
    for (const auto& u : affstan::all_permutations(n)) {
      int r = 0;
      for (int i = 1; i < n; ++i)
        if (u(i) > u(i + 1)) r = i;
      if (r == 0) continue;
      int k = r;
      for (int j = r + 1; j <= n; ++j)
        if (u(r) > u(j)) k = j;
      const Permutation v = u * Permutation::transposition(n, r, k);
      CHECK(affstan::transition_sides(v, r).left ==
            std::vector<Permutation>{u.embed(n + 1)});
    }
}

TEST_CASE("transition identity and Little bijection on S4") {
  for (const auto& w : affstan::all_permutations(4))
    for (int r = 1; r <= 4; ++r) {
      const auto sides = affstan::transition_sides(w, r);
      affstan::SymFunc lhs(w.length() + 1, affstan::Basis::m());
      affstan::SymFunc rhs(w.length() + 1, affstan::Basis::m());
      for (const auto& u : sides.left) lhs = lhs + affstan::stanley(u);
      for (const auto& v : sides.right) rhs = rhs + affstan::stanley(v);
      if (sides.extra) rhs = rhs + affstan::stanley(*sides.extra);
      CHECK(lhs == rhs);

      std::set<MarkedWord> sources;
      for (const auto& u : sides.left) {
        const auto m = marked_words(u, w);
        sources.insert(m.begin(), m.end());
      }
      std::set<MarkedWord> targets;
      for (const auto& v : sides.right) {
        const auto m = marked_words(v, w);
        targets.insert(m.begin(), m.end());
      }
      if (sides.extra) {
        const auto m = marked_words(*sides.extra, affstan::one_times(w));
        targets.insert(m.begin(), m.end());
      }
      std::set<MarkedWord> images;
      for (const auto& m : sources) images.insert(affstan::little_move(m));
      CHECK(images.size() == sources.size());
      CHECK(images == targets);
      CHECK(affstan::transition_identity_check(w, r));
      CHECK(affstan::little_bijection_check(w, r));
    }
}

TEST_CASE("dual equivalence experiment") {
  // Report only: compares Q-fibers with Little-move orbits on S4.
  std::map<Word, int> component;
  std::vector<Word> all;
  for (const auto& w : affstan::all_permutations(4))
    for (const auto& word : affstan::reduced_words(w)) all.push_back(word);
  std::map<Word, std::set<Word>> adj;
  for (const auto& word : all)
    for (int a = 1; a <= static_cast<int>(word.size()); ++a) {
      if (!affstan::is_reduced(affstan::unmarked({word, a}))) continue;
      const auto image = affstan::little_move({word, a}).word;
      adj[word].insert(image);
      adj[image].insert(word);
    }
  std::map<Tableau, std::set<Word>> fibers;
  for (const auto& word : all) fibers[affstan::eg_insert(word).q].insert(word);
  int agree = 0, disagree = 0;
  for (const auto& word : all) {
    std::set<Word> orbit{word};
    std::vector<Word> stack{word};
    while (!stack.empty()) {
      const Word v = stack.back();
      stack.pop_back();
      for (const auto& u : adj[v])
        if (orbit.insert(u).second) stack.push_back(u);
    }
    // orbits may leave S4; compare on the S4 part only
    std::set<Word> local;
    for (const auto& u : orbit)
      if (std::find(all.begin(), all.end(), u) != all.end()) local.insert(u);
    const auto& fiber = fibers[affstan::eg_insert(word).q];
    bool inside = true;
    for (const auto& u : local) inside &= fiber.count(u) > 0;
    (inside ? agree : disagree)++;
  }
  MESSAGE("Little orbits within one Q-fiber: " << agree << " agree, "
                                               << disagree << " disagree");
}
