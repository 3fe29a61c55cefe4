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

#include "affstan/nilcoxeter.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "affstan/linalg.hpp"
#include "affstan/symfunc.hpp"

namespace affstan {

namespace {

void check_rank(int n, bool affine) {
  if (affine ? n < 3 : n < 1)
    throw std::invalid_argument("nilCoxeter rank " + std::to_string(n) +
                                (affine ? " below 3 for the affine algebra"
                                        : " below 1"));
}

NilCoxeterElement h_product(const std::vector<NilCoxeterElement>& h,
                            const Partition& mu, int n, bool affine) {
  NilCoxeterElement r = NilCoxeterElement::identity(n, affine);
  for (int part : mu.parts()) {
    if (part >= static_cast<int>(h.size())) return NilCoxeterElement(n, affine);
    r = r * h[part];
    if (r.is_zero()) break;
  }
  return r;
}

std::vector<NilCoxeterElement> all_h(int n, bool affine) {
  std::vector<NilCoxeterElement> h;
  for (int k = 0; k < n; ++k) h.push_back(h_element(n, k, affine));
  return h;
}

}  // namespace

NilCoxeterElement::NilCoxeterElement(int n, bool affine) : n_(n), affine_(affine) {
  check_rank(n, affine);
}

NilCoxeterElement NilCoxeterElement::identity(int n, bool affine) {
  NilCoxeterElement a(n, affine);
  a.add(window::identity(n), 1);
  return a;
}

NilCoxeterElement NilCoxeterElement::basis(const Permutation& w) {
  NilCoxeterElement a(w.rank(), false);
  a.add(w.window(), 1);
  return a;
}

NilCoxeterElement NilCoxeterElement::basis(const AffinePermutation& w) {
  NilCoxeterElement a(w.rank(), true);
  a.add(w.window(), 1);
  return a;
}

NilCoxeterElement NilCoxeterElement::generator(int n, int i, bool affine) {
  if (affine)
    return basis(AffinePermutation::simple(n, i));
  return basis(Permutation::simple(n, i));
}

Integer NilCoxeterElement::coeff(const window::Window& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void NilCoxeterElement::add(const window::Window& w, const Integer& c) {
  if (static_cast<int>(w.size()) != n_)
    throw std::invalid_argument("window of the wrong rank");
  if (affine_)
    static_cast<void>(AffinePermutation(w));
  else
    static_cast<void>(Permutation(w));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NilCoxeterElement::check_compatible(const NilCoxeterElement& o) const {
  if (n_ != o.n_ || affine_ != o.affine_)
    throw std::invalid_argument("nilCoxeter elements of different algebras");
}

NilCoxeterElement NilCoxeterElement::operator+(const NilCoxeterElement& o) const {
  check_compatible(o);
  NilCoxeterElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

NilCoxeterElement NilCoxeterElement::operator-(const NilCoxeterElement& o) const {
  return *this + o * Integer(-1);
}

NilCoxeterElement NilCoxeterElement::operator*(const Integer& c) const {
  NilCoxeterElement r(n_, affine_);
  if (c == 0) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NilCoxeterElement NilCoxeterElement::operator*(const NilCoxeterElement& o) const {
  check_compatible(o);
  NilCoxeterElement r(n_, affine_);
  std::map<window::Window, int> lengths;
  auto len = [&](const window::Window& w) {
    auto it = lengths.find(w);
    if (it == lengths.end()) it = lengths.emplace(w, window::length(w)).first;
    return it->second;
  };
  for (const auto& [w, a] : terms_)
    for (const auto& [v, b] : o.terms_) {
      window::Window wv = window::compose(w, v);
      if (window::length(wv) != len(w) + len(v)) continue;
      auto [it, inserted] = r.terms_.emplace(wv, a * b);
      if (!inserted) {
        it->second += a * b;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Word canonical_word(const window::Window& w) {
  const int n = static_cast<int>(w.size());
  Word word;
  window::Window u = w;
  while (u != window::identity(n)) {
    for (int i = 0; i < n; ++i)
      if (window::has_left_descent(u, i)) {
        word.push_back(i);
        u = window::left_multiply(i, u);
        break;
      }
  }
  return word;
}

std::string to_string(const NilCoxeterElement& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<std::pair<std::size_t, Word>, Integer>> terms;
  for (const auto& [w, c] : a.terms()) {
    Word word = canonical_word(w);
    terms.push_back({{word.size(), word}, c});
  }
  std::sort(terms.begin(), terms.end());
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (key.second.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "A_";
    for (int letter : key.second) out << letter;
  }
  return out.str();
}

NilCoxeterElement h_element(int n, int k, bool affine) {
  check_rank(n, affine);
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("h_" + std::to_string(k) +
                                " needs 0 <= k <= " + std::to_string(n - 1));
  NilCoxeterElement h(n, affine);
  if (affine) {
    for (const auto& subset : strict_subsets(n, k))
      h.add(cyclically_decreasing(n, subset).window(), 1);
    return h;
  }
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (std::popcount(mask) != k) continue;
    Word word;
    for (int i = n - 1; i >= 1; --i)
      if (mask & (1u << (i - 1))) word.push_back(i);
    h.add(Permutation::from_word(n, word).window(), 1);
  }
  return h;
}

bool product_expansion_check(int n) {
  check_rank(n, false);
  // coefficient lists in t
  std::vector<NilCoxeterElement> lhs;
  for (int k = 0; k < n; ++k) lhs.push_back(h_element(n, k, false));
  std::vector<NilCoxeterElement> rhs{NilCoxeterElement::identity(n, false)};
  for (int i = n - 1; i >= 1; --i) {
    const NilCoxeterElement a = NilCoxeterElement::generator(n, i, false);
    std::vector<NilCoxeterElement> next(rhs.size() + 1, NilCoxeterElement(n, false));
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      next[d] = next[d] + rhs[d];
      next[d + 1] = next[d + 1] + rhs[d] * a;
    }
    rhs = next;
  }
  return lhs == rhs;
}

NilCoxeterElement noncommutative_schur(int n, const Partition& lambda,
                                       bool affine) {
  check_rank(n, affine);
  NilCoxeterElement r(n, affine);
  if (!affine && lambda.size() > n * (n - 1) / 2) return r;
  const SymFunc expansion =
      affine ? k_schur(n, lambda)
             : change_basis(SymFunc::basis_element(Basis::s(), lambda), Basis::h());
  const auto h = all_h(n, affine);
  for (const auto& [mu, c] : expansion.terms())
    r = r + h_product(h, mu, n, affine) * c;
  return r;
}

Polynomial divided_difference_action(const NilCoxeterElement& a,
                                      const Polynomial& f) {
  if (a.affine())
    throw std::invalid_argument("divided differences act for the finite algebra only");
  if (f.nvars() != a.rank())
    throw std::invalid_argument("polynomial must be in " + std::to_string(a.rank()) +
                                " variables");
  Polynomial r(f.nvars());
  for (const auto& [w, c] : a.terms()) {
    Polynomial g = f;
    const Word word = canonical_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      g = g.divided_difference(*it, *it + 1);
    r += g * c;
  }
  return r;
}

std::vector<std::vector<std::pair<int, int>>> root_poset_upper_ideals(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("root poset rank must be in 1..6");
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.emplace_back(i, j);
  auto below = [](std::pair<int, int> a, std::pair<int, int> b) {
    return b.first <= a.first && a.second <= b.second;
  };
  std::vector<std::vector<std::pair<int, int>>> ideals;
  const std::size_t m = roots.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < m && closed; ++a) {
      if (!(mask & (1ul << a))) continue;
      for (std::size_t b = 0; b < m; ++b)
        if (below(roots[a], roots[b]) && !(mask & (1ul << b))) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<std::pair<int, int>> ideal;
    for (std::size_t a = 0; a < m; ++a)
      if (mask & (1ul << a)) ideal.push_back(roots[a]);
    ideals.push_back(ideal);
  }
  return ideals;
}

FominStanleyReport fomin_stanley_report(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("the Fomin-Stanley report supports 2 <= n <= 5");
  FominStanleyReport rep;
  rep.n = n;
  const auto h = all_h(n, false);

  rep.commutative = true;
  for (int k = 1; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (h[k] * h[l] != h[l] * h[k]) rep.commutative = false;

  const int top = n * (n - 1) / 2;
  const Partition delta = staircase(n - 1);
  std::vector<std::pair<Partition, NilCoxeterElement>> basis;
  rep.hilbert_partitions.assign(top + 1, 0);
  for (int d = 0; d <= top; ++d)
    for (const auto& lam : partitions(d)) {
      if (!contained_in(lam, delta)) continue;
      ++rep.hilbert_partitions[d];
      basis.emplace_back(lam, noncommutative_schur(n, lam, false));
    }
  rep.basis_size = static_cast<int>(basis.size());

  rep.hilbert_ideals.assign(top + 1, 0);
  for (const auto& ideal : root_poset_upper_ideals(n)) ++rep.hilbert_ideals[ideal.size()];
  rep.hilbert_match = rep.hilbert_partitions == rep.hilbert_ideals;

  std::map<window::Window, int> column;
  for (const auto& [lam, s] : basis)
    for (const auto& [w, c] : s.terms()) {
      column.emplace(w, static_cast<int>(column.size()));
      rep.occurrences[w] += c;
    }
  rep.nonnegative = true;
  RationalMatrix m;
  for (const auto& [lam, s] : basis) {
    std::vector<Rational> row(column.size(), 0);
    for (const auto& [w, c] : s.terms()) {
      row[column.at(w)] = Rational(c);
      if (c < 0) rep.nonnegative = false;
    }
    m.push_back(row);
  }
  rep.rank = rank(m);
  rep.independent = rep.rank == rep.basis_size;

  rep.structure_solvable = rep.structure_integral = rep.structure_nonnegative = true;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      const auto& [lam, sl] = basis[a];
      const auto& [mu, sm] = basis[b];
      if (lam.size() == 0 || mu.size() == 0) continue;
      const NilCoxeterElement prod = sl * sm;
      if (prod.is_zero()) continue;
      std::vector<std::size_t> cand;
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (basis[c].first.size() == lam.size() + mu.size()) cand.push_back(c);
      std::map<window::Window, int> rows;
      for (const auto& [w, c] : prod.terms()) rows.emplace(w, static_cast<int>(rows.size()));
      for (std::size_t c : cand)
        for (const auto& [w, x] : basis[c].second.terms())
          rows.emplace(w, static_cast<int>(rows.size()));
      RationalMatrix sys(rows.size(), std::vector<Rational>(cand.size(), 0));
      std::vector<Rational> rhs(rows.size(), 0);
      for (std::size_t j = 0; j < cand.size(); ++j)
        for (const auto& [w, x] : basis[cand[j]].second.terms())
          sys[rows.at(w)][j] = Rational(x);
      for (const auto& [w, c] : prod.terms()) rhs[rows.at(w)] = Rational(c);
      const LinearSolution sol = solve(sys, rhs);
      if (!sol.consistent) {
        rep.structure_solvable = false;
        continue;
      }
      const auto ints = to_integers(sol.values);
      if (!ints) {
        rep.structure_integral = false;
        continue;
      }
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if ((*ints)[j] == 0) continue;
        if ((*ints)[j] < 0) rep.structure_nonnegative = false;
        rep.structure_constants.push_back({lam, mu, basis[cand[j]].first, (*ints)[j]});
      }
    }
  return rep;
}

}  // namespace affstan
