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
#include "affstan/word.hpp"

namespace affstan {

// Element of S_n in one-line notation. The product is composition of
// bijections, (w * v)(i) = w(v(i)); operands of different rank are first
// embedded into the larger symmetric group.
class Permutation {
 public:
  Permutation() = default;  // the identity of S_0
  // Throws std::invalid_argument unless window is a bijection of [n].
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  static Permutation simple(int n, int i);
  static Permutation transposition(int n, int i, int j);
  static Permutation longest(int n);
  // s_{w_1} s_{w_2} ... s_{w_k} in S_n (not required to be reduced).
  static Permutation from_word(int n, const Word& word);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  // w(i) for i >= 1; fixed points beyond the rank.
  int operator()(int i) const;

  Permutation embed(int m) const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& v) const;
  Permutation right_multiply(int i) const;  // w s_i
  Permutation left_multiply(int i) const;   // s_i w

  int length() const;
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

std::string to_string(const Permutation& w);
// One-line digit string ("2431", rank inferred) or a JSON-style array.
Permutation parse_permutation(std::string_view text);

// Lexicographically sorted reduced words.
std::vector<Word> reduced_words(const Permutation& w);
// Returns the product if the word is reduced in S_n.
std::optional<Permutation> reduced_product(int n, const Word& word);
bool is_reduced(const Word& word);

Composition code(const Permutation& w);
Permutation from_code(const Composition& c);
Partition lambda_of(const Permutation& w);

bool is_grassmannian(const Permutation& w);
bool is_321_avoiding(const Permutation& w);
bool is_vexillary(const Permutation& w);

// 1 x w: shift every letter up by one and put 1 in front.
Permutation one_times(const Permutation& w);

// All of S_n in lexicographic order of windows.
std::vector<Permutation> all_permutations(int n);

}  // namespace affstan
