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

#include <vector>

// Arithmetic on raw windows [w(1), ..., w(n)] of bijections w: Z -> Z with
// w(i + n) = w(i) + n. A finite permutation of [n] is such a window too, and
// every routine here agrees with the finite definitions on S_n, so both
// group types share this code. Generator indices are residues 0..n-1; on a
// finite window only 1..n-1 are meaningful.
namespace affstan::window {

using Window = std::vector<int>;

int floor_div(int a, int b);
int mod(int a, int b);

// w(i) for any integer i.
int eval(const Window& w, int i);
// The unique p with w(p) = value.
int position_of(const Window& w, int value);

// c_i = #{j > i : w(j) < w(i)}, for i = 1..n.
std::vector<int> code(const Window& w);
int length(const Window& w);

Window identity(int n);
Window compose(const Window& a, const Window& b);  // a o b
Window inverse(const Window& w);

// w * s_i swaps the values at positions i + kn and i + kn + 1.
Window right_multiply(const Window& w, int i);
// s_i * w swaps the values congruent to i and i+1.
Window left_multiply(int i, const Window& w);

// l(w s_i) < l(w)
bool has_right_descent(const Window& w, int i);
// l(s_i w) < l(w)
bool has_left_descent(const Window& w, int i);

}  // namespace affstan::window
