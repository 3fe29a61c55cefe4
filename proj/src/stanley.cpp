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

#include "affstan/stanley.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "affstan/error.hpp"
#include "affstan/tableau.hpp"

namespace affstan {

std::string to_string(StanleyMethod m) {
  switch (m) {
    case StanleyMethod::original: return "original";
    case StanleyMethod::decreasing: return "decreasing";
    case StanleyMethod::quasisym: return "quasisym";
  }
  return "?";
}

StanleyMethod parse_stanley_method(const std::string& name) {
  if (name == "original") return StanleyMethod::original;
  if (name == "decreasing") return StanleyMethod::decreasing;
  if (name == "quasisym") return StanleyMethod::quasisym;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

// Removes the letters of word from the left of w, one left descent at a
// time.
template <class G>
std::optional<G> peel(G w, const Word& word) {
  for (int a : word) {
    if (!w.has_left_descent(a)) return std::nullopt;
    w = w.left_multiply(a);
  }
  return w;
}

// Counts factorizations w = v_1 v_2 ... with l(v_k) = alpha_k and every
// v_k drawn from blocks[alpha_k].
template <class G>
class FactorizationCounter {
 public:
  FactorizationCounter(const Composition& alpha,
                       const std::vector<std::vector<Word>>& blocks)
      : alpha_(alpha), blocks_(blocks) {
    suffix_.assign(alpha.size() + 1, 0);
    for (std::size_t k = alpha.size(); k-- > 0;)
      suffix_[k] = suffix_[k + 1] + alpha[k];
  }

  Integer count(const G& w, std::size_t k) {
    if (w.length() != suffix_[k]) return 0;
    if (k == alpha_.size()) return 1;
    const auto key = std::make_pair(w.window(), k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Integer total = 0;
    const int size = alpha_[k];
    if (size < static_cast<int>(blocks_.size()))
      for (const auto& word : blocks_[size])
        if (auto rest = peel(w, word)) total += count(*rest, k + 1);
    memo_.emplace(key, total);
    return total;
  }

 private:
  const Composition& alpha_;
  const std::vector<std::vector<Word>>& blocks_;
  std::vector<int> suffix_;
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

// Decreasing words over 1..n-1, by length.
std::vector<std::vector<Word>> decreasing_blocks(int n) {
  std::vector<std::vector<Word>> out(std::max(n, 1));
  for (unsigned mask = 0; mask < (1u << std::max(n - 1, 0)); ++mask) {
    Word word;
    for (int i = n - 1; i >= 1; --i)
      if (mask & (1u << (i - 1))) word.push_back(i);
    out[word.size()].push_back(word);
  }
  return out;
}

std::vector<std::vector<Word>> cyclic_blocks(int n) {
  std::vector<std::vector<Word>> out(n);
  for (int k = 0; k < n; ++k)
    for (const auto& s : strict_subsets(n, k))
      out[k].push_back(cyclically_decreasing_word(n, s));
  return out;
}

void check_composition(const Composition& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("negative composition entry");
}

template <class G>
SymFunc from_coefficients(const G& w,
                          const std::vector<std::vector<Word>>& blocks) {
  const int d = w.length();
  SymFunc out(d, Basis::m());
  for (const auto& mu : partitions(d)) {
    FactorizationCounter<G> counter(mu.parts(), blocks);
    out.add(mu, counter.count(w, 0));
  }
  return out;
}

template <class G>
std::optional<Composition> witness(const G& w,
                                   const std::vector<std::vector<Word>>& blocks) {
  std::map<Partition, Integer> seen;
  for (const auto& alpha : compositions(w.length())) {
    FactorizationCounter<G> counter(alpha, blocks);
    const Integer c = counter.count(w, 0);
    const Partition p = Partition::from_composition(alpha);
    auto [it, fresh] = seen.emplace(p, c);
    if (!fresh && it->second != c) return alpha;
  }
  return std::nullopt;
}

}  // namespace

Integer stanley_coefficient_by_words(const Permutation& w,
                                     const Composition& alpha) {
  check_composition(alpha);
  int total = 0;
  for (int a : alpha) total += a;
  if (total != w.length()) return 0;
  Integer count = 0;
  for (const auto& word : reduced_words(w)) {
    std::size_t pos = 0;
    bool ok = true;
    for (int a : alpha) {
      for (int j = 1; j < a && ok; ++j)
        ok = word[pos + j - 1] > word[pos + j];
      pos += a;
      if (!ok) break;
    }
    if (ok) ++count;
  }
  return count;
}

Integer stanley_coefficient(const Permutation& w, const Composition& alpha) {
  check_composition(alpha);
  const auto blocks = decreasing_blocks(w.rank());
  FactorizationCounter<Permutation> counter(alpha, blocks);
  return counter.count(w, 0);
}

Integer affine_stanley_coefficient(const AffinePermutation& w,
                                   const Composition& alpha) {
  check_composition(alpha);
  const auto blocks = cyclic_blocks(w.rank());
  FactorizationCounter<AffinePermutation> counter(alpha, blocks);
  return counter.count(w, 0);
}

QuasiSymFunc stanley_quasisym(const Permutation& w) {
  const int d = w.length();
  QuasiSymFunc out(d);
  for (const auto& word : reduced_words(w.inverse()))
    out = out + fundamental_quasisym(descent_set(word), d);
  return out;
}

SymFunc stanley(const Permutation& w, StanleyMethod method) {
  switch (method) {
    case StanleyMethod::decreasing:
      return from_coefficients(w, decreasing_blocks(w.rank()));
    case StanleyMethod::original: {
      SymFunc out(w.length(), Basis::m());
      for (const auto& mu : partitions(w.length()))
        out.add(mu, stanley_coefficient_by_words(w, mu.parts()));
      return out;
    }
    case StanleyMethod::quasisym: {
      auto sym = stanley_quasisym(w).to_symmetric();
      if (!sym)
        throw ContractViolation("quasi-symmetric expansion of " +
                                to_string(w) + " is not symmetric");
      return *sym;
    }
  }
  throw std::invalid_argument("unknown method");
}

SymFunc affine_stanley(const AffinePermutation& w) {
  return from_coefficients(w, cyclic_blocks(w.rank()));
}

std::optional<Composition> asymmetry_witness(const Permutation& w) {
  return witness(w, decreasing_blocks(w.rank()));
}

std::optional<Composition> asymmetry_witness(const AffinePermutation& w) {
  return witness(w, cyclic_blocks(w.rank()));
}

SymFunc schur_expand(const Permutation& w) {
  std::set<Tableau> tableaux;
  for (const auto& word : reduced_words(w.inverse()))
    tableaux.insert(eg_insert(word).p);
  SymFunc out(w.length(), Basis::s());
  for (const auto& t : tableaux) out.add(t.shape(), 1);
  return out;
}

SymFunc affine_schur_expand(const AffinePermutation& w) {
  return change_basis(affine_stanley(w), Basis::affine_schur(w.rank()));
}

std::vector<std::pair<AffinePermutation, AffinePermutation>>
length_additive_factorizations(const AffinePermutation& w) {
  const int n = w.rank();
  std::set<std::pair<AffinePermutation, AffinePermutation>> out;
  for (const auto& word : reduced_words(w)) {
    AffinePermutation u = AffinePermutation::identity(n);
    for (std::size_t k = 0; k <= word.size(); ++k) {
      const Word rest(word.begin() + k, word.end());
      out.emplace(u, AffinePermutation::from_word(n, rest));
      if (k < word.size()) u = u.right_multiply(word[k]);
    }
  }
  return {out.begin(), out.end()};
}

bool coproduct_check(const AffinePermutation& w) {
  const SymTensor lhs = coproduct(affine_stanley(w));
  SymTensor rhs{Basis::m(), w.length(), {}};
  for (const auto& [u, v] : length_additive_factorizations(w)) {
    const SymFunc fu = affine_stanley(u);
    const SymFunc fv = affine_stanley(v);
    for (const auto& [a, x] : fu.terms())
      for (const auto& [b, y] : fv.terms()) {
        Integer& slot = rhs.terms[{a, b}];
        slot += x * y;
        if (slot == 0) rhs.terms.erase({a, b});
      }
  }
  return lhs == rhs;
}

bool transition_identity_check(const Permutation& w, int r) {
  const TransitionSides sides = transition_sides(w, r);
  SymFunc lhs(w.length() + 1, Basis::m());
  SymFunc rhs(w.length() + 1, Basis::m());
  for (const auto& u : sides.left) lhs = lhs + stanley(u);
  for (const auto& v : sides.right) rhs = rhs + stanley(v);
  if (sides.extra) rhs = rhs + stanley(*sides.extra);
  return lhs == rhs;
}

}  // namespace affstan
