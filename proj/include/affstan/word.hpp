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

#include <string>
#include <string_view>
#include <vector>

namespace affstan {

// Sequence of generator indices. Finite words use 1..n-1, affine words use
// residues 0..n-1.
using Word = std::vector<int>;

// Digit string when every letter is a single digit, comma-separated
// otherwise. The empty word renders as "".
std::string to_string(const Word& w);

// Accepts "21232", "2,1,2,3,2", "[2,1,2,3,2]" or "" (the empty word).
Word parse_word(std::string_view text);

Word reversed(const Word& w);

// {i : w_i > w_{i+1}}, 1-based.
std::vector<int> descent_set(const Word& w);

}  // namespace affstan
