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

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "affstan/window.hpp"

namespace affstan {

AffinePermutation::AffinePermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int n = rank();
  if (n < 3)
    throw std::invalid_argument("affine symmetric group needs rank n >= 3");
  std::vector<bool> seen(n, false);
  long sum = 0;
  for (int v : window_) {
    const int r = window::mod(v, n);
    if (seen[r])
      throw std::invalid_argument(
          "window entries must be distinct modulo " + std::to_string(n));
    seen[r] = true;
    sum += v;
  }
  if (sum != static_cast<long>(n) * (n + 1) / 2)
    throw std::invalid_argument("window must sum to " +
                                std::to_string(n * (n + 1) / 2));
}

AffinePermutation AffinePermutation::identity(int n) {
  return AffinePermutation(window::identity(n));
}

AffinePermutation AffinePermutation::simple(int n, int i) {
  return identity(n).right_multiply(i);
}

AffinePermutation AffinePermutation::from_word(int n, const Word& word) {
  AffinePermutation w = identity(n);
  for (int a : word) {
    if (a < 0 || a >= n)
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " is not a residue mod " + std::to_string(n));
    w = w.right_multiply(a);
  }
  return w;
}

AffinePermutation AffinePermutation::from_permutation(const Permutation& w) {
  return AffinePermutation(w.window());
}

int AffinePermutation::operator()(int i) const {
  return window::eval(window_, i);
}

AffinePermutation AffinePermutation::inverse() const {
  return AffinePermutation(window::inverse(window_));
}

AffinePermutation AffinePermutation::operator*(
    const AffinePermutation& v) const {
  if (v.rank() != rank())
    throw std::invalid_argument("affine permutations of different rank");
  return AffinePermutation(window::compose(window_, v.window_));
}

AffinePermutation AffinePermutation::right_multiply(int i) const {
  AffinePermutation w = *this;
  w.window_ = window::right_multiply(window_, i);
  return w;
}

AffinePermutation AffinePermutation::left_multiply(int i) const {
  AffinePermutation w = *this;
  w.window_ = window::left_multiply(i, window_);
  return w;
}

int AffinePermutation::length() const { return window::length(window_); }

bool AffinePermutation::has_right_descent(int i) const {
  return window::has_right_descent(window_, i);
}

bool AffinePermutation::has_left_descent(int i) const {
  return window::has_left_descent(window_, i);
}

bool AffinePermutation::is_identity() const {
  return window_ == window::identity(rank());
}

bool AffinePermutation::is_grassmannian() const {
  return std::is_sorted(window_.begin(), window_.end());
}

bool AffinePermutation::is_finite() const {
  return std::all_of(window_.begin(), window_.end(),
                     [n = rank()](int v) { return v >= 1 && v <= n; });
}

Permutation AffinePermutation::to_permutation() const {
  if (!is_finite())
    throw std::domain_error(to_string(*this) + " does not lie in S_" +
                            std::to_string(rank()));
  return Permutation(window_);
}

std::string to_string(const AffinePermutation& w) {
  std::string out = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.window()[i]);
  }
  return out + "]";
}

namespace {

void affine_words_rec(const AffinePermutation& w,
                      std::map<AffinePermutation, std::vector<Word>>& memo) {
  if (memo.count(w)) return;
  std::vector<Word> out;
  if (w.is_identity()) {
    out.push_back({});
  } else {
    for (int i = 0; i < w.rank(); ++i) {
      if (!w.has_right_descent(i)) continue;
      const AffinePermutation u = w.right_multiply(i);
      affine_words_rec(u, memo);
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

std::vector<Word> reduced_words(const AffinePermutation& w) {
  std::map<AffinePermutation, std::vector<Word>> memo;
  affine_words_rec(w, memo);
  return memo.at(w);
}

std::optional<AffinePermutation> affine_reduced_product(int n,
                                                        const Word& word) {
  AffinePermutation w = AffinePermutation::identity(n);
  for (int a : word) {
    if (a < 0 || a >= n) return std::nullopt;
    if (w.has_right_descent(a)) return std::nullopt;
    w = w.right_multiply(a);
  }
  return w;
}

Composition code(const AffinePermutation& w) { return window::code(w.window()); }

Partition lambda_of(const AffinePermutation& w) {
  return conjugate(Partition::from_composition(code(w.inverse())));
}

namespace {

// Grassmannian elements by length, grown on demand. The set is closed
// under removing left descents, so level L+1 is reached from level L by
// length-increasing left multiplications.
struct GrassmannianTable {
  std::vector<std::vector<AffinePermutation>> levels;
  std::map<Partition, AffinePermutation> by_shape;
};

std::mutex grassmannian_mutex;
std::map<int, GrassmannianTable> grassmannian_cache;

const GrassmannianTable& grassmannian_table(int n, int max_length) {
  std::lock_guard<std::mutex> lock(grassmannian_mutex);
  GrassmannianTable& t = grassmannian_cache[n];
  if (t.levels.empty()) {
    const auto id = AffinePermutation::identity(n);
    t.levels.push_back({id});
    t.by_shape.emplace(Partition{}, id);
  }
  while (static_cast<int>(t.levels.size()) <= max_length) {
    std::set<AffinePermutation> next;
    for (const auto& w : t.levels.back())
      for (int i = 0; i < n; ++i) {
        if (w.has_left_descent(i)) continue;
        auto u = w.left_multiply(i);
        if (u.is_grassmannian()) next.insert(std::move(u));
      }
    t.levels.emplace_back(next.begin(), next.end());
    for (const auto& u : t.levels.back()) t.by_shape.emplace(lambda_of(u), u);
  }
  return t;
}

}  // namespace

AffinePermutation grassmannian_from_partition(int n, const Partition& lambda) {
  if (n < 3)
    throw std::invalid_argument("affine symmetric group needs rank n >= 3");
  if (!is_bounded(lambda, n))
    throw std::invalid_argument("partition " + to_string(lambda) +
                                " has a part >= n = " + std::to_string(n));
  const auto& t = grassmannian_table(n, lambda.size());
  std::lock_guard<std::mutex> lock(grassmannian_mutex);
  auto it = t.by_shape.find(lambda);
  if (it == t.by_shape.end())
    throw std::logic_error("no Grassmannian element found for " +
                           to_string(lambda));
  return it->second;
}

std::vector<AffinePermutation> grassmannian_elements(int n, int max_length) {
  const auto& t = grassmannian_table(n, max_length);
  std::lock_guard<std::mutex> lock(grassmannian_mutex);
  std::vector<AffinePermutation> out;
  for (int l = 0; l <= max_length; ++l)
    out.insert(out.end(), t.levels[l].begin(), t.levels[l].end());
  return out;
}

std::vector<AffinePermutation> affine_elements(int n, int max_length) {
  std::vector<AffinePermutation> out{AffinePermutation::identity(n)};
  std::vector<AffinePermutation> level = out;
  for (int l = 1; l <= max_length; ++l) {
    std::set<AffinePermutation> next;
    for (const auto& w : level)
      for (int i = 0; i < n; ++i)
        if (!w.has_right_descent(i)) next.insert(w.right_multiply(i));
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

std::vector<bool> subset_mask(int n, const std::vector<int>& subset) {
  std::vector<bool> in(n, false);
  for (int i : subset) {
    if (i < 0 || i >= n)
      throw std::invalid_argument("subset element " + std::to_string(i) +
                                  " is not a residue mod " + std::to_string(n));
    if (in[i]) throw std::invalid_argument("subset elements must be distinct");
    in[i] = true;
  }
  if (static_cast<int>(subset.size()) >= n)
    throw std::invalid_argument(
        "cyclically decreasing elements need a strict subset of Z/nZ");
  return in;
}

}  // namespace

Word cyclically_decreasing_word(int n, const std::vector<int>& subset) {
  const auto in = subset_mask(n, subset);
  int missing = 0;
  while (in[missing]) ++missing;
  Word word;
  for (int k = 1; k < n; ++k) {
    const int i = window::mod(missing - k, n);
    if (in[i]) word.push_back(i);
  }
  return word;
}

AffinePermutation cyclically_decreasing(int n,
                                        const std::vector<int>& subset) {
  return AffinePermutation::from_word(n, cyclically_decreasing_word(n, subset));
}

bool is_cyclically_decreasing_word(int n, const Word& word) {
  std::vector<int> pos(n, -1);
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int a = word[k];
    if (a < 0 || a >= n || pos[a] >= 0) return false;
    pos[a] = static_cast<int>(k);
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (pos[i] >= 0 && pos[j] >= 0 && pos[j] > pos[i]) return false;
  }
  return true;
}

std::vector<std::vector<int>> strict_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k >= n) return out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CorootVector::CorootVector(std::vector<int> coords)
    : coords_(std::move(coords)) {
  long sum = 0;
  for (int c : coords_) sum += c;
  if (sum != 0)
    throw std::invalid_argument("coroot vector coordinates must sum to 0");
}

CorootVector CorootVector::zero(int n) {
  return CorootVector(std::vector<int>(n, 0));
}

CorootVector CorootVector::operator+(const CorootVector& o) const {
  if (o.rank() != rank())
    throw std::invalid_argument("coroot vectors of different rank");
  std::vector<int> c(coords_);
  for (int i = 0; i < rank(); ++i) c[i] += o.coords_[i];
  return CorootVector(std::move(c));
}

CorootVector CorootVector::operator-() const {
  std::vector<int> c(coords_);
  for (int& x : c) x = -x;
  return CorootVector(std::move(c));
}

bool CorootVector::is_dominant() const {
  return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>());
}

bool CorootVector::is_antidominant() const {
  return std::is_sorted(coords_.begin(), coords_.end());
}

CorootVector act(const Permutation& w, const CorootVector& lambda) {
  if (w.rank() != lambda.rank())
    throw std::invalid_argument("rank mismatch between permutation and coroot");
  std::vector<int> c(lambda.rank());
  for (int i = 1; i <= lambda.rank(); ++i) c[w(i) - 1] = lambda[i - 1];
  return CorootVector(std::move(c));
}

std::vector<CorootVector> orbit(const CorootVector& lambda) {
  std::vector<int> c = lambda.coords();
  std::sort(c.begin(), c.end());
  std::vector<CorootVector> out;
  do {
    out.emplace_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

AffinePermutation translation_element(const CorootVector& lambda) {
  const int n = lambda.rank();
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = i + 1 + n * lambda[i];
  return AffinePermutation(std::move(win));
}

std::optional<CorootVector> translation_part(const AffinePermutation& w) {
  const int n = w.rank();
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) {
    const int d = w.window()[i] - (i + 1);
    if (window::mod(d, n) != 0) return std::nullopt;
    c[i] = d / n;
  }
  return CorootVector(std::move(c));
}

int length_via_formula(const Permutation& w, const CorootVector& lambda) {
  if (w.rank() != lambda.rank())
    throw std::invalid_argument("rank mismatch between permutation and coroot");
  int total = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j) {
      const int chi = w(i) > w(j) ? 1 : 0;
      total += std::abs(lambda[i - 1] - lambda[j - 1] + chi);
    }
  return total;
}

}  // namespace affstan
