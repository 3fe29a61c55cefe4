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

#include "affstan/window.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace affstan::window {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int b) { return a - b * floor_div(a, b); }

int eval(const Window& w, int i) {
  const int n = static_cast<int>(w.size());
  const int q = floor_div(i - 1, n);
  return w[static_cast<std::size_t>(i - 1 - q * n)] + q * n;
}

int position_of(const Window& w, int value) {
  const int n = static_cast<int>(w.size());
  for (int r = 1; r <= n; ++r) {
    const int diff = value - w[r - 1];
    if (mod(diff, n) == 0) return r + diff;
  }
  throw std::invalid_argument("window residues are not a complete system");
}

std::vector<int> code(const Window& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> c(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j0 = 1; j0 <= n; ++j0) {
      // j = j0 + kn > i with w(j0) + kn < w(i)
      const int kmin = j0 > i ? 0 : 1;
      const int kmax = floor_div(w[i - 1] - w[j0 - 1] - 1, n);
      if (kmax >= kmin) c[i - 1] += kmax - kmin + 1;
    }
  }
  return c;
}

int length(const Window& w) {
  const auto c = code(w);
  return std::accumulate(c.begin(), c.end(), 0);
}

Window identity(int n) {
  Window w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Window compose(const Window& a, const Window& b) {
  Window c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = eval(a, b[i]);
  return c;
}

Window inverse(const Window& w) {
  const int n = static_cast<int>(w.size());
  Window inv(n);
  for (int v = 1; v <= n; ++v) inv[v - 1] = position_of(w, v);
  return inv;
}

Window right_multiply(const Window& w, int i) {
  const int n = static_cast<int>(w.size());
  i = mod(i, n);
  Window out = w;
  if (i != 0) {
    std::swap(out[i - 1], out[i]);
  } else {
    out[0] = w[n - 1] - n;
    out[n - 1] = w[0] + n;
  }
  return out;
}

Window left_multiply(int i, const Window& w) {
  const int n = static_cast<int>(w.size());
  i = mod(i, n);
  const int next = mod(i + 1, n);
  Window out = w;
  for (int& v : out) {
    const int r = mod(v, n);
    if (r == i)
      v += 1;
    else if (r == next)
      v -= 1;
  }
  return out;
}

bool has_right_descent(const Window& w, int i) {
  return eval(w, i) > eval(w, i + 1);
}

bool has_left_descent(const Window& w, int i) {
  return position_of(w, i) > position_of(w, i + 1);
}

}  // namespace affstan::window
