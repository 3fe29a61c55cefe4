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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affstan/affine_permutation.hpp"
#include "affstan/integer.hpp"
#include "affstan/partition.hpp"
#include "affstan/permutation.hpp"
#include "affstan/polynomial.hpp"
#include "affstan/window.hpp"

namespace affstan {

// Integer combination of the basis A_w of the finite (S_n) or affine
// nilCoxeter algebra, keyed by the window of w.
class NilCoxeterElement {
 public:
  using Terms = std::map<window::Window, Integer>;

  // The zero element. Affine elements need n >= 3.
  NilCoxeterElement(int n, bool affine);

  static NilCoxeterElement identity(int n, bool affine);
  static NilCoxeterElement basis(const Permutation& w);
  static NilCoxeterElement basis(const AffinePermutation& w);
  static NilCoxeterElement generator(int n, int i, bool affine);

  int rank() const { return n_; }
  bool affine() const { return affine_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const window::Window& w) const;

  // Throws std::invalid_argument if w is not a group element of this rank.
  void add(const window::Window& w, const Integer& c);

  NilCoxeterElement operator+(const NilCoxeterElement& o) const;
  NilCoxeterElement operator-(const NilCoxeterElement& o) const;
  NilCoxeterElement operator*(const Integer& c) const;
  // A_w A_v = A_{wv} when the lengths add, and 0 otherwise.
  NilCoxeterElement operator*(const NilCoxeterElement& o) const;
  bool operator==(const NilCoxeterElement&) const = default;

 private:
  void check_compatible(const NilCoxeterElement& o) const;

  int n_;
  bool affine_;
  Terms terms_;
};

// Lexicographically smallest reduced word of the element with this window.
Word canonical_word(const window::Window& w);

// Terms ordered by length, then by canonical word; A_w is written A_<word>
// and the identity as 1.
std::string to_string(const NilCoxeterElement& a);

// Sum of A_w over (cyclically) decreasing w of length k, 0 <= k <= n-1.
NilCoxeterElement h_element(int n, int k, bool affine);

// Compares sum_k h_k t^k with (1 + t A_{n-1}) ... (1 + t A_1) coefficientwise.
bool product_expansion_check(int n);

// Substitutes h_k -> h_element(n, k) in the h-expansion of s_lambda
// (finite; h_k = 0 for k >= n) or of the k-Schur function (affine; lambda
// must be (n-1)-bounded).
NilCoxeterElement noncommutative_schur(int n, const Partition& lambda,
                                       bool affine);

// A_i acts as the divided difference in x_i, x_{i+1}. Finite elements only;
// f must be in n variables.
Polynomial divided_difference_action(const NilCoxeterElement& a,
                                     const Polynomial& f);

// Upper order ideals of the type A_{n-1} positive roots e_i - e_j (i < j),
// ordered by inclusion of the intervals [i, j). Each ideal lists its roots
// as (i, j) pairs.
std::vector<std::vector<std::pair<int, int>>> root_poset_upper_ideals(int n);

struct StructureConstant {
  Partition lambda, mu, nu;
  Integer value;
};

struct FominStanleyReport {
  int n = 0;
  bool commutative = false;
  int basis_size = 0;  // partitions inside the staircase
  int rank = 0;        // rank of their A_w coordinates
  bool independent = false;
  std::vector<int> hilbert_partitions;  // coefficient of t^d, by d
  std::vector<int> hilbert_ideals;
  bool hilbert_match = false;
  bool nonnegative = false;
  // Total coefficient of each A_w over the basis.
  std::map<window::Window, Integer> occurrences;
  std::vector<StructureConstant> structure_constants;  // nonzero only
  bool structure_solvable = false;  // every product lies in the span
  bool structure_integral = false;
  bool structure_nonnegative = false;

  bool passed() const {
    return commutative && independent && hilbert_match && nonnegative &&
           structure_solvable && structure_integral && structure_nonnegative;
  }
};

// Throws std::invalid_argument unless 2 <= n <= 5.
FominStanleyReport fomin_stanley_report(int n);

}  // namespace affstan
