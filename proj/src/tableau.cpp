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

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "affstan/error.hpp"

namespace affstan {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("tableau rows must weakly decrease in length");
  for (const auto& r : rows_)
    if (r.empty()) throw std::invalid_argument("empty row inside a tableau");
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

int Tableau::size() const { return shape().size(); }

Word Tableau::reading_word() const {
  Word out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

bool Tableau::is_row_strict() const {
  for (const auto& r : rows_)
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j - 1] >= r[j]) return false;
  return true;
}

bool Tableau::is_column_strict() const {
  for (std::size_t i = 1; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i - 1][j] >= rows_[i][j]) return false;
  return true;
}

bool Tableau::is_semistandard() const {
  for (const auto& r : rows_)
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j - 1] > r[j]) return false;
  return is_column_strict();
}

bool Tableau::is_standard() const {
  if (!is_row_strict() || !is_column_strict()) return false;
  std::vector<int> all;
  for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Tableau::descent_set() const {
  if (!is_standard())
    throw std::invalid_argument("descent set needs a standard tableau");
  const int n = size();
  std::vector<int> row_of(n + 1);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (int v : rows_[i]) row_of[v] = static_cast<int>(i);
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) out.push_back(i);
  return out;
}

void Tableau::append(std::size_t r, int value) {
  if (r > rows_.size()) throw std::invalid_argument("row index out of range");
  if (r == rows_.size()) rows_.emplace_back();
  if (r > 0 && rows_[r].size() >= rows_[r - 1].size())
    throw std::invalid_argument("appending would break the shape");
  rows_[r].push_back(value);
}

std::string to_string(const Tableau& t) {
  std::string out;
  for (const auto& r : t.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(r[j]);
    }
    out += '\n';
  }
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  // Place 1..N in turn at an outer corner of the partial shape.
  std::vector<Tableau> out;
  const int total = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  std::function<void(int)> rec = [&](int next) {
    if (next > total) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t len = rows[i].size();
      if (static_cast<int>(len) >= shape[i]) continue;
      if (i > 0 && rows[i - 1].size() <= len) continue;
      rows[i].push_back(next);
      rec(next + 1);
      rows[i].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

EGResult eg_insert(const Word& word) {
  if (!is_reduced(word))
    throw std::invalid_argument("word " + to_string(word) + " is not reduced");
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int a = word[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({a});
        q.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& row = p[r];
      if (a > row.back()) {
        row.push_back(a);
        q[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      auto it = std::upper_bound(row.begin(), row.end(), a);
      const int bumped = *it;
      const bool a_present = std::binary_search(row.begin(), row.end(), a);
      if (!(bumped == a + 1 && a_present)) *it = a;
      if (!std::is_sorted(row.begin(), row.end()) ||
          std::adjacent_find(row.begin(), row.end()) != row.end())
        throw ContractViolation("insertion produced a non-strict row");
      a = bumped;
    }
  }
  EGResult res{Tableau(p), Tableau(q)};
  if (!res.p.is_column_strict())
    throw ContractViolation("insertion produced a non-strict column");
  return res;
}

std::vector<Word> coxeter_knuth_neighbors(const Word& w) {
  std::vector<Word> out;
  auto between = [](int mid, int x, int y) {
    return (x < mid && mid < y) || (y < mid && mid < x);
  };
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const int a = w[i], b = w[i + 1], c = w[i + 2];
    if (a == c && (b == a + 1 || b == a - 1)) {
      Word v = w;
      v[i] = v[i + 2] = b;
      v[i + 1] = a;
      out.push_back(std::move(v));
    }
    if (between(a, b, c)) {
      Word v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.push_back(std::move(v));
    }
    if (between(c, a, b)) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<std::vector<Word>> coxeter_knuth_classes(const Permutation& w) {
  const auto words = reduced_words(w);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (const auto& v : coxeter_knuth_neighbors(words[i])) {
      auto it = index.find(v);
      if (it == index.end())
        throw ContractViolation("relation left R(w): " + to_string(v));
      parent[find(i)] = find(it->second);
    }
  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < words.size(); ++i)
    groups[find(i)].push_back(words[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const MarkedWord& m) {
  return to_string(m.word) + " @" + std::to_string(m.mark);
}

Word unmarked(const MarkedWord& m) {
  Word out = m.word;
  out.erase(out.begin() + (m.mark - 1));
  return out;
}

namespace {

constexpr int kLittleCap = 10000;

void check_mark(const MarkedWord& m) {
  if (m.mark < 1 || m.mark > static_cast<int>(m.word.size()))
    throw std::invalid_argument("mark " + std::to_string(m.mark) +
                                " outside the word");
}

// One Little edge without validating the source.
MarkedWord raw_step(const MarkedWord& m) {
  MarkedWord next = m;
  int& letter = next.word[m.mark - 1];
  --letter;
  if (letter == 0)
    for (int& x : next.word) ++x;
  if (is_reduced(next.word)) return next;
  int found = 0;
  for (int b = 1; b <= static_cast<int>(next.word.size()); ++b) {
    if (b == m.mark) continue;
    if (is_reduced(unmarked({next.word, b}))) {
      if (found)
        throw ContractViolation("two re-marking choices in " +
                                to_string(next.word));
      found = b;
    }
  }
  if (!found)
    throw ContractViolation("no re-marking choice in " + to_string(next.word));
  next.mark = found;
  return next;
}

}  // namespace

MarkedWord little_step(const MarkedWord& m) {
  check_mark(m);
  if (!is_reduced(unmarked(m)))
    throw std::invalid_argument(to_string(m) + " is not nearly reduced");
  return raw_step(m);
}

std::vector<MarkedWord> little_path(const MarkedWord& m) {
  check_mark(m);
  if (!is_reduced(m.word) || !is_reduced(unmarked(m)))
    throw std::invalid_argument(to_string(m) + " is not a marked reduced word");
  std::vector<MarkedWord> path{m};
  for (int step = 0; step < kLittleCap; ++step) {
    path.push_back(raw_step(path.back()));
    if (is_reduced(path.back().word)) return path;
  }
  throw ContractViolation("Little traversal from " + to_string(m) +
                          " did not terminate");
}

bool path_shifts(const std::vector<MarkedWord>& path) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (path[k].word[path[k].mark - 1] == 1) return true;
  return false;
}

MarkedWord little_move(const MarkedWord& m) { return little_path(m).back(); }

std::vector<std::pair<MarkedWord, bool>> little_move_preimages(
    const MarkedWord& m) {
  check_mark(m);
  if (!is_reduced(m.word))
    throw std::invalid_argument(to_string(m.word) + " is not reduced");
  // A predecessor differs in its marked letter, which the edge decremented
  // (wrapping through 0 with a shift of every letter).
  auto predecessors = [](const MarkedWord& v) {
    std::vector<std::pair<MarkedWord, bool>> out;
    const int len = static_cast<int>(v.word.size());
    for (int a = 1; a <= len; ++a) {
      std::vector<std::pair<Word, bool>> sources;
      Word up = v.word;
      ++up[a - 1];
      sources.emplace_back(up, false);
      bool shifted = v.word[a - 1] == 1;
      for (int c = 1; c <= len && shifted; ++c)
        if (c != a && v.word[c - 1] < 2) shifted = false;
      if (shifted) {
        Word down = v.word;
        for (int c = 1; c <= len; ++c)
          if (c != a) --down[c - 1];
        sources.emplace_back(down, true);
      }
      for (auto& [s, shift] : sources) {
        MarkedWord cand{s, a};
        if (!is_reduced(unmarked(cand))) continue;
        if (raw_step(cand) == v) out.emplace_back(std::move(cand), shift);
      }
    }
    return out;
  };
  std::set<std::pair<MarkedWord, bool>> found;
  struct Frame {
    MarkedWord v;
    bool shifted;
    int depth;
  };
  std::vector<Frame> stack{{m, false, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth > kLittleCap)
      throw ContractViolation("backward Little traversal did not terminate");
    for (auto& [p, shift] : predecessors(f.v)) {
      if (is_reduced(p.word))
        found.emplace(p, f.shifted || shift);
      else
        stack.push_back({p, f.shifted || shift, f.depth + 1});
    }
  }
  return {found.begin(), found.end()};
}

std::optional<MarkedWord> little_move_inverse(const MarkedWord& m,
                                              bool shifted) {
  std::optional<MarkedWord> out;
  for (const auto& [p, shift] : little_move_preimages(m)) {
    if (shift != shifted) continue;
    if (out)
      throw ContractViolation("Little move is not injective at " +
                              to_string(m));
    out = p;
  }
  return out;
}

TransitionSides transition_sides(const Permutation& w, int r) {
  const int n = w.rank();
  if (r < 1 || r > n)
    throw std::invalid_argument("r must lie in [1, " + std::to_string(n) + "]");
  const Permutation big = w.embed(n + 1);
  const int len = w.length();
  TransitionSides out;
  for (int s = r + 1; s <= n + 1; ++s) {
    const Permutation u = big * Permutation::transposition(n + 1, r, s);
    if (u.length() == len + 1) out.left.push_back(u);
  }
  for (int s = 1; s < r; ++s) {
    const Permutation v = big * Permutation::transposition(n + 1, s, r);
    if (v.length() == len + 1) out.right.push_back(v);
  }
  const Permutation x =
      one_times(w) * Permutation::transposition(n + 1, 1, r + 1);
  if (x.length() == len + 1) out.extra = x;
  return out;
}

namespace {

std::set<MarkedWord> marked_over(const Permutation& u, const Permutation& v) {
  constexpr int kRoom = 3;
  const int big = std::max(u.rank(), v.rank()) + kRoom;
  std::set<MarkedWord> out;
  for (const auto& word : reduced_words(u))
    for (int a = 1; a <= static_cast<int>(word.size()); ++a) {
      MarkedWord m{word, a};
      const Word rest = unmarked(m);
      if (is_reduced(rest) && Permutation::from_word(big, rest) == v.embed(big))
        out.insert(m);
    }
  return out;
}

}  // namespace

bool little_bijection_check(const Permutation& w, int r) {
  const TransitionSides sides = transition_sides(w, r);
  std::set<MarkedWord> sources, targets;
  for (const auto& u : sides.left) {
    const auto m = marked_over(u, w);
    sources.insert(m.begin(), m.end());
  }
  for (const auto& v : sides.right) {
    const auto m = marked_over(v, w);
    targets.insert(m.begin(), m.end());
  }
  if (sides.extra) {
    const auto m = marked_over(*sides.extra, one_times(w));
    targets.insert(m.begin(), m.end());
  }
  std::set<MarkedWord> images;
  for (const auto& m : sources) images.insert(little_move(m));
  return images.size() == sources.size() && images == targets;
}

}  // namespace affstan
