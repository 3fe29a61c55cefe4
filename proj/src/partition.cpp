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

#include "affstan/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace affstan {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_composition(std::span<const int> entries) {
  std::vector<int> parts;
  for (int e : entries) {
    if (e < 0) throw std::invalid_argument("composition entries must be >= 0");
    if (e > 0) parts.push_back(e);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(p[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument(
        "dominance is only defined between partitions of the same size");
  const int len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool contained_in(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition staircase(int n) {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

Integer count_standard_tableaux(const Partition& p) {
  const Partition conj = conjugate(p);
  Integer numerator = 1;
  for (int k = 2; k <= p.size(); ++k) numerator *= k;
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks *= (p[i] - j - 1) + (conj[j] - i - 1) + 1;
  return numerator / hooks;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(d, d, prefix, out);
  return out;
}

std::vector<Partition> bounded_partitions(int n, int d) {
  if (n < 2) throw std::invalid_argument("bounded partitions need n >= 2");
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(d, n - 1, prefix, out);
  return out;
}

bool is_bounded(const Partition& p, int n) { return p.empty() || p[0] < n; }

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace affstan
