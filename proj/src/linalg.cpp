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

#include "affstan/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace affstan {

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("right-hand side length mismatch");
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (static_cast<int>(aug[i].size()) != cols)
      throw std::invalid_argument("ragged matrix");
    aug[i].push_back(b[i]);
  }
  const auto pivots = rref(aug, cols);
  LinearSolution sol;
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i][cols] != 0) return sol;
  sol.consistent = true;
  sol.unique = static_cast<int>(pivots.size()) == cols;
  sol.values.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.values[pivots[r]] = aug[r][cols];
  return sol;
}

std::optional<std::vector<Integer>> to_integers(const std::vector<Rational>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1) return std::nullopt;
    out.push_back(numerator(x));
  }
  return out;
}

}  // namespace affstan
