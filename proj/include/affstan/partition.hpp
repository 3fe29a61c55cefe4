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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affstan/integer.hpp"

namespace affstan {

// Weak composition. Entries may be zero (codes of permutations have
// internal zeros).
using Composition = std::vector<int>;

// Integer partition, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros and drops them; rejects negative or increasing
  // entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Sorts the nonzero entries of a composition decreasingly.
  static Partition from_composition(std::span<const int> entries);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  bool empty() const { return parts_.empty(); }
  // lambda_i with 0-based i; zero beyond the length.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

// Prefix-sum comparison. Throws std::invalid_argument if |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

// Young-diagram containment.
bool contained_in(const Partition& inner, const Partition& outer);

// delta_n = (n, n-1, ..., 1).
Partition staircase(int n);

// Hook-length formula.
Integer count_standard_tableaux(const Partition& p);

// All partitions of d in reverse-lexicographic order.
std::vector<Partition> partitions(int d);

// Partitions of d with largest part at most n-1, reverse-lexicographic.
std::vector<Partition> bounded_partitions(int n, int d);

bool is_bounded(const Partition& p, int n);

// Partition with every part of a and b; the multiset union.
Partition join(const Partition& a, const Partition& b);

}  // namespace affstan
