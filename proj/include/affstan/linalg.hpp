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

#include <optional>
#include <vector>

#include "affstan/integer.hpp"

namespace affstan {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place and returns the rank.
int rank(RationalMatrix m);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> values;  // one particular solution when consistent
};

// Solves a x = b exactly. a has one row per equation.
LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Integer vector if every entry is integral.
std::optional<std::vector<Integer>> to_integers(const std::vector<Rational>& v);

}  // namespace affstan
