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

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "affstan/partition.hpp"
#include "affstan/permutation.hpp"
#include "affstan/word.hpp"

namespace affstan {

// Element of the affine symmetric group, stored by its window
// [w(1), ..., w(n)] with w(i + n) = w(i) + n. Only n >= 3 is supported.
class AffinePermutation {
 public:
  // Throws std::invalid_argument if n < 3, the residues mod n are not
  // distinct, or the window does not sum to n(n+1)/2.
  explicit AffinePermutation(std::vector<int> window);

  static AffinePermutation identity(int n);
  static AffinePermutation simple(int n, int i);
  static AffinePermutation from_word(int n, const Word& word);
  static AffinePermutation from_permutation(const Permutation& w);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int i) const;

  AffinePermutation inverse() const;
  AffinePermutation operator*(const AffinePermutation& v) const;
  AffinePermutation right_multiply(int i) const;  // w s_i
  AffinePermutation left_multiply(int i) const;   // s_i w

  int length() const;
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;
  bool is_identity() const;
  bool is_grassmannian() const;  // w(1) < ... < w(n)
  bool is_finite() const;        // lies in the parabolic S_n
  Permutation to_permutation() const;

  auto operator<=>(const AffinePermutation&) const = default;
  bool operator==(const AffinePermutation&) const = default;

 private:
  std::vector<int> window_;
};

std::string to_string(const AffinePermutation& w);

std::vector<Word> reduced_words(const AffinePermutation& w);
// Returns the product if the word over Z/nZ is reduced.
std::optional<AffinePermutation> affine_reduced_product(int n,
                                                        const Word& word);

// c_i = #{j > i : w(j) < w(i)} over all integers j, for i = 1..n.
Composition code(const AffinePermutation& w);
Partition lambda_of(const AffinePermutation& w);

// The affine Grassmannian element with lambda_of(w) = lambda.
AffinePermutation grassmannian_from_partition(int n, const Partition& lambda);

// Every element of length <= max_length, ordered by (length, window).
std::vector<AffinePermutation> affine_elements(int n, int max_length);
std::vector<AffinePermutation> grassmannian_elements(int n, int max_length);

// S must be a strict subset of Z/nZ.
Word cyclically_decreasing_word(int n, const std::vector<int>& subset);
AffinePermutation cyclically_decreasing(int n, const std::vector<int>& subset);
bool is_cyclically_decreasing_word(int n, const Word& word);
// Every strict subset of Z/nZ of size k, as sorted residue lists.
std::vector<std::vector<int>> strict_subsets(int n, int k);

// Element of the type A coroot lattice: integer vectors with zero sum.
class CorootVector {
 public:
  explicit CorootVector(std::vector<int> coords);
  static CorootVector zero(int n);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }

  CorootVector operator+(const CorootVector& o) const;
  CorootVector operator-() const;
  bool is_dominant() const;
  bool is_antidominant() const;

  auto operator<=>(const CorootVector&) const = default;
  bool operator==(const CorootVector&) const = default;

 private:
  std::vector<int> coords_;
};

// (w . lambda)_{w(i)} = lambda_i.
CorootVector act(const Permutation& w, const CorootVector& lambda);
// Distinct rearrangements of lambda, sorted.
std::vector<CorootVector> orbit(const CorootVector& lambda);

AffinePermutation translation_element(const CorootVector& lambda);
// Window-level inverse of translation_element, if w is a translation.
std::optional<CorootVector> translation_part(const AffinePermutation& w);

// sum over i < j of |lambda_i - lambda_j + [w(i) > w(j)]|.
int length_via_formula(const Permutation& w, const CorootVector& lambda);

}  // namespace affstan
