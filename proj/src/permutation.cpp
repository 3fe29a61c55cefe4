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
#include <map>
#include <numeric>
#include <stdexcept>

#include "affstan/window.hpp"

namespace affstan {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation entries must lie in 1.." +
                                  std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " repeats");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("rank must be >= 0");
  return Permutation(window::identity(n));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("simple reflection index out of range");
  return identity(n).right_multiply(i);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("transposition indices out of range");
  auto win = window::identity(n);
  std::swap(win[i - 1], win[j - 1]);
  return Permutation(std::move(win));
}

Permutation Permutation::longest(int n) {
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = n - i;
  return Permutation(std::move(win));
}

Permutation Permutation::from_word(int n, const Word& word) {
  Permutation w = identity(n);
  for (int a : word) {
    if (a < 1 || a >= n)
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " is not a generator of S_" +
                                  std::to_string(n));
    w = w.right_multiply(a);
  }
  return w;
}

int Permutation::operator()(int i) const {
  return i <= rank() ? window_[i - 1] : i;
}

Permutation Permutation::embed(int m) const {
  if (m < rank()) throw std::invalid_argument("cannot embed into smaller rank");
  std::vector<int> win = window_;
  for (int i = rank() + 1; i <= m; ++i) win.push_back(i);
  return Permutation(std::move(win));
}

Permutation Permutation::inverse() const {
  return Permutation(window::inverse(window_));
}

Permutation Permutation::operator*(const Permutation& v) const {
  const int m = std::max(rank(), v.rank());
  return Permutation(window::compose(embed(m).window_, v.embed(m).window_));
}

Permutation Permutation::right_multiply(int i) const {
  if (i < 1 || i >= rank())
    throw std::invalid_argument("generator index out of range");
  Permutation w = *this;
  std::swap(w.window_[i - 1], w.window_[i]);
  return w;
}

Permutation Permutation::left_multiply(int i) const {
  if (i < 1 || i >= rank())
    throw std::invalid_argument("generator index out of range");
  return Permutation(window::left_multiply(i, window_));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (window_[i] > window_[j]) ++inv;
  return inv;
}

bool Permutation::has_right_descent(int i) const {
  return (*this)(i) > (*this)(i + 1);
}

bool Permutation::has_left_descent(int i) const {
  return inverse()(i) > inverse()(i + 1);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool digits = w.rank() <= 9;
  if (!digits) out += '[';
  for (int i = 0; i < w.rank(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(w.window()[i]);
  }
  if (!digits) out += ']';
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_word(text));
}

namespace {

void reduced_words_rec(const Permutation& w, std::map<Permutation,
                       std::vector<Word>>& memo) {
  if (memo.count(w)) return;
  std::vector<Word> out;
  if (w.length() == 0) {
    out.push_back({});
  } else {
    for (int i = 1; i < w.rank(); ++i) {
      if (!w.has_right_descent(i)) continue;
      const Permutation u = w.right_multiply(i);
      reduced_words_rec(u, memo);
      for (Word word : memo.at(u)) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  std::sort(out.begin(), out.end());
  memo.emplace(w, std::move(out));
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
  std::map<Permutation, std::vector<Word>> memo;
  reduced_words_rec(w, memo);
  return memo.at(w);
}

std::optional<Permutation> reduced_product(int n, const Word& word) {
  Permutation w = Permutation::identity(n);
  for (int a : word) {
    if (a < 1 || a >= n) return std::nullopt;
    if (w.has_right_descent(a)) return std::nullopt;
    w = w.right_multiply(a);
  }
  return w;
}

bool is_reduced(const Word& word) {
  int n = 2;
  for (int a : word) {
    if (a < 1) return false;
    n = std::max(n, a + 1);
  }
  return reduced_product(n, word).has_value();
}

Composition code(const Permutation& w) {
  Composition c(w.rank(), 0);
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j)
      if (w.window()[j] < w.window()[i]) ++c[i];
  return c;
}

Permutation from_code(const Composition& c) {
  int n = static_cast<int>(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) throw std::invalid_argument("code entries must be >= 0");
    n = std::max(n, static_cast<int>(i) + 1 + c[i]);
  }
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> win;
  for (int i = 0; i < n; ++i) {
    const int ci = i < static_cast<int>(c.size()) ? c[i] : 0;
    if (ci >= static_cast<int>(unused.size()))
      throw std::invalid_argument("sequence is not the code of a permutation");
    win.push_back(unused[ci]);
    unused.erase(unused.begin() + ci);
  }
  return Permutation(std::move(win));
}

Partition lambda_of(const Permutation& w) {
  return conjugate(Partition::from_composition(code(w.inverse())));
}

bool is_grassmannian(const Permutation& w) {
  int descents = 0;
  for (int i = 1; i < w.rank(); ++i)
    if (w.has_right_descent(i)) ++descents;
  return descents <= 1;
}

bool is_321_avoiding(const Permutation& w) {
  const auto& x = w.window();
  const int n = w.rank();
  for (int b = 0; b < n; ++b) {
    bool larger_before = false, smaller_after = false;
    for (int a = 0; a < b; ++a) larger_before |= x[a] > x[b];
    for (int c = b + 1; c < n; ++c) smaller_after |= x[c] < x[b];
    if (larger_before && smaller_after) return false;
  }
  return true;
}

bool is_vexillary(const Permutation& w) {
  const auto& x = w.window();
  const int n = w.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!(x[b] < x[a])) continue;
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (x[a] < x[d] && x[d] < x[c]) return false;
    }
  return true;
}

Permutation one_times(const Permutation& w) {
  std::vector<int> win{1};
  for (int v : w.window()) win.push_back(v + 1);
  return Permutation(std::move(win));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> win = window::identity(n);
  std::vector<Permutation> out;
  do {
    out.emplace_back(win);
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

}  // namespace affstan
