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

#include <map>
#include <mutex>
#include <stdexcept>

#include "affstan/affine_permutation.hpp"
#include "affstan/error.hpp"
#include "affstan/linalg.hpp"
#include "affstan/stanley.hpp"
#include "affstan/symfunc.hpp"

namespace affstan {

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, Partition>, SymFunc> affine_schur_cache;
std::map<std::pair<int, Partition>, SymFunc> k_schur_cache;

void require_bounded(int n, const Partition& lambda) {
  if (n < 3) throw std::invalid_argument("affine bases need rank n >= 3");
  if (!is_bounded(lambda, n))
    throw std::invalid_argument("partition " + to_string(lambda) + " is not " +
                                std::to_string(n - 1) + "-bounded");
}

// Fills k_schur_cache for every bounded partition of degree d by solving
// sum_mu c_{lambda mu} [m_mu] F~_nu = delta_{lambda nu}.
void build_k_schur(int n, int d) {
  const auto parts = bounded_partitions(n, d);
  const std::size_t size = parts.size();
  RationalMatrix a(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const SymFunc f = affine_schur(n, parts[i]);
    for (std::size_t j = 0; j < size; ++j)
      a[i][j] = Rational(f.coeff(parts[j]));
  }
  std::map<std::pair<int, Partition>, SymFunc> fresh;
  for (std::size_t l = 0; l < size; ++l) {
    std::vector<Rational> rhs(size, Rational(0));
    rhs[l] = 1;
    const auto sol = solve(a, rhs);
    if (!sol.consistent || !sol.unique)
      throw ContractViolation("affine Schur functions of degree " +
                              std::to_string(d) + " are not independent");
    const auto ints = to_integers(sol.values);
    if (!ints)
      throw ContractViolation("k-Schur function " + to_string(parts[l]) +
                              " has a non-integral h-coefficient");
    SymFunc h(d, Basis::h());
    for (std::size_t j = 0; j < size; ++j) h.add(parts[j], (*ints)[j]);
    fresh.emplace(std::make_pair(n, parts[l]), h);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  k_schur_cache.insert(fresh.begin(), fresh.end());
}

}  // namespace

SymFunc affine_schur(int n, const Partition& lambda) {
  require_bounded(n, lambda);
  const auto key = std::make_pair(n, lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = affine_schur_cache.find(key);
    if (it != affine_schur_cache.end()) return it->second;
  }
  const SymFunc f = affine_stanley(grassmannian_from_partition(n, lambda));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return affine_schur_cache.emplace(key, f).first->second;
}

SymFunc k_schur(int n, const Partition& lambda) {
  require_bounded(n, lambda);
  const auto key = std::make_pair(n, lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = k_schur_cache.find(key);
    if (it != k_schur_cache.end()) return it->second;
  }
  build_k_schur(n, lambda.size());
  std::lock_guard<std::mutex> lock(cache_mutex);
  return k_schur_cache.at(key);
}

}  // namespace affstan
