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

#include "affstan/nilhecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affstan/error.hpp"
#include "affstan/linalg.hpp"

namespace affstan {

namespace {

void check_rank(int n) {
  if (n < 3) throw std::invalid_argument("nilHecke rank must be at least 3");
}

void check_scalar(int n, const Polynomial& p) {
  if (p.nvars() != n)
    throw std::invalid_argument("scalar must be a polynomial in " + std::to_string(n) +
                                " variables");
}

void check_generator(int n, int i) {
  if (i < 0 || i >= n)
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " outside 0.." + std::to_string(n - 1));
}

// A_u A_v in the nilCoxeter algebra, as a window when nonzero.
std::optional<window::Window> nc_product(const window::Window& u,
                                         const window::Window& v) {
  window::Window uv = window::compose(u, v);
  if (window::length(uv) != window::length(u) + window::length(v)) return std::nullopt;
  return uv;
}

// w composed with the reflection exchanging positions a + kn and b + kn.
window::Window times_reflection(const window::Window& w, int a, int b) {
  const int n = static_cast<int>(w.size());
  window::Window r = w;
  for (int p = 1; p <= n; ++p) {
    if (window::mod(p - a, n) == 0)
      r[p - 1] = window::eval(w, b + (p - a));
    else if (window::mod(p - b, n) == 0)
      r[p - 1] = window::eval(w, a + (p - b));
  }
  return r;
}

}  // namespace

NilHeckeElement::NilHeckeElement(int n) : n_(n) { check_rank(n); }

NilHeckeElement NilHeckeElement::identity(int n) {
  return scalar(Polynomial::constant(n, 1));
}

NilHeckeElement NilHeckeElement::scalar(const Polynomial& p) {
  NilHeckeElement a(p.nvars());
  a.add(window::identity(p.nvars()), p);
  return a;
}

NilHeckeElement NilHeckeElement::basis(const AffinePermutation& w) {
  NilHeckeElement a(w.rank());
  a.add(w.window(), Polynomial::constant(w.rank(), 1));
  return a;
}

NilHeckeElement NilHeckeElement::generator(int n, int i) {
  return basis(AffinePermutation::simple(n, i));
}

NilHeckeElement NilHeckeElement::from_nilcoxeter(const NilCoxeterElement& a) {
  if (!a.affine())
    throw std::invalid_argument("only affine nilCoxeter elements embed");
  NilHeckeElement r(a.rank());
  for (const auto& [w, c] : a.terms()) r.add(w, Polynomial::constant(a.rank(), c));
  return r;
}

Polynomial NilHeckeElement::coeff(const window::Window& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial(n_) : it->second;
}

void NilHeckeElement::add(const window::Window& w, const Polynomial& p) {
  check_scalar(n_, p);
  if (static_cast<int>(w.size()) != n_)
    throw std::invalid_argument("window of the wrong rank");
  static_cast<void>(AffinePermutation(w));
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("nilHecke elements of different rank");
  NilHeckeElement r = *this;
  for (const auto& [w, p] : o.terms_) r.add(w, p);
  return r;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& o) const {
  return *this + o.scaled(Polynomial::constant(n_, -1));
}

NilHeckeElement NilHeckeElement::scaled(const Polynomial& p) const {
  check_scalar(n_, p);
  NilHeckeElement r(n_);
  for (const auto& [w, q] : terms_) r.add(w, p * q);
  return r;
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("nilHecke elements of different rank");
  NilHeckeElement r(n_);
  for (const auto& [w, p] : terms_) {
    const Word word = canonical_word(w);
    for (const auto& [v, q] : o.terms_) {
      // A_w q, one generator at a time from the right
      NilHeckeElement moved = scalar(q);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        moved = left_generator(*it, moved);
      for (const auto& [u, s] : moved.terms_)
        if (auto uv = nc_product(u, v)) r.add(*uv, p * s);
    }
  }
  return r;
}

std::string to_string(const NilHeckeElement& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<std::pair<std::size_t, Word>, Polynomial>> terms;
  for (const auto& [w, p] : a.terms()) {
    Word word = canonical_word(w);
    terms.push_back({{word.size(), word}, p});
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, p] : terms) {
    if (!first) out << " + ";
    first = false;
    const bool one = p == Polynomial::constant(a.rank(), 1);
    if (key.second.empty()) {
      out << (terms.size() > 1 && p.terms().size() > 1 ? "(" + to_string(p) + ")"
                                                       : to_string(p));
      continue;
    }
    if (!one) out << "(" << to_string(p) << ")*";
    out << "A_";
    for (int letter : key.second) out << letter;
  }
  return out.str();
}

Polynomial simple_root(int n, int i) {
  check_rank(n);
  check_generator(n, i);
  if (i == 0) return Polynomial::variable(n, n) - Polynomial::variable(n, 1);
  return Polynomial::variable(n, i) - Polynomial::variable(n, i + 1);
}

Polynomial level_zero_action(const AffinePermutation& w, const Polynomial& f) {
  const int n = w.rank();
  check_scalar(n, f);
  std::vector<int> target(n);
  for (int k = 1; k <= n; ++k) target[k - 1] = window::mod(w(k) - 1, n) + 1;
  return f.substituted(target);
}

Polynomial divided_difference(int n, int i, const Polynomial& f) {
  check_rank(n);
  check_generator(n, i);
  check_scalar(n, f);
  return i == 0 ? f.divided_difference(n, 1) : f.divided_difference(i, i + 1);
}

NilHeckeElement commute_past(int n, int i, const Polynomial& f) {
  check_scalar(n, f);
  return left_generator(i, NilHeckeElement::scalar(f));
}

NilHeckeElement left_generator(int i, const NilHeckeElement& a) {
  const int n = a.rank();
  check_generator(n, i);
  const AffinePermutation si = AffinePermutation::simple(n, i);
  NilHeckeElement r(n);
  for (const auto& [u, p] : a.terms()) {
    // A_i p = (s_i p) A_i + d_i p
    if (!window::has_left_descent(u, i))
      r.add(window::left_multiply(i, u), level_zero_action(si, p));
    r.add(u, divided_difference(n, i, p));
  }
  return r;
}

NilHeckeElement embed_word(int n, const Word& word) {
  NilHeckeElement r = NilHeckeElement::identity(n);
  for (int i : word) {
    check_generator(n, i);
    NilHeckeElement factor = NilHeckeElement::identity(n);
    NilHeckeElement ai(n);
    ai.add(AffinePermutation::simple(n, i).window(), -simple_root(n, i));
    r = r * (factor + ai);
  }
  return r;
}

NilHeckeElement embed_group(const AffinePermutation& w) {
  return embed_word(w.rank(), canonical_word(w.window()));
}

NilHeckeElement chevalley(const AffinePermutation& w, const Polynomial& f) {
  const int n = w.rank();
  check_scalar(n, f);
  if (!f.is_homogeneous_linear())
    throw std::invalid_argument("Chevalley formula needs a homogeneous linear scalar");
  auto lin = [&](int k) {
    std::vector<int> e(n, 0);
    e[window::mod(k - 1, n)] = 1;
    return f.coeff(e);
  };
  NilHeckeElement r(n);
  r.add(w.window(), level_zero_action(w, f));
  const int len = w.length();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= a + n * (len + 1); ++b) {
      if (window::mod(b - a, n) == 0) continue;
      const window::Window wt = times_reflection(w.window(), a, b);
      if (window::length(wt) != len - 1) continue;
      r.add(wt, Polynomial::constant(n, lin(a) - lin(b)));
    }
  return r;
}

void NilHeckeTensor::add(const window::Window& v, const window::Window& w,
                         const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms.emplace(std::make_pair(v, w), p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void NilCoxeterTensor::add(const window::Window& v, const window::Window& w,
                           const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::make_pair(v, w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NilCoxeterTensor tensor(const NilCoxeterElement& a, const NilCoxeterElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor factors of different rank");
  NilCoxeterTensor t;
  t.n = a.rank();
  for (const auto& [v, c] : a.terms())
    for (const auto& [w, d] : b.terms()) t.add(v, w, c * d);
  return t;
}

namespace {

// Delta(A_i) x.
NilHeckeTensor left_coproduct_generator(int i, const NilHeckeTensor& x) {
  const int n = x.n;
  const Polynomial alpha = simple_root(n, i);
  NilHeckeTensor r;
  r.n = n;
  for (const auto& [key, p] : x.terms) {
    const auto& [v, w] = key;
    NilHeckeElement first(n);
    first.add(v, p);
    const NilHeckeElement moved = left_generator(i, first);
    const bool second_grows = !window::has_left_descent(w, i);
    const window::Window iw = window::left_multiply(i, w);
    if (second_grows) r.add(v, iw, p);
    for (const auto& [u, q] : moved.terms()) {
      r.add(u, w, q);
      if (second_grows) r.add(u, iw, -(alpha * q));
    }
  }
  return r;
}

NilHeckeTensor unit_tensor(int n) {
  NilHeckeTensor t;
  t.n = n;
  t.add(window::identity(n), window::identity(n), Polynomial::constant(n, 1));
  return t;
}

}  // namespace

NilHeckeTensor coproduct_along(int n, const Word& word) {
  check_rank(n);
  if (!affine_reduced_product(n, word))
    throw std::invalid_argument("coproduct needs a reduced word");
  NilHeckeTensor t = unit_tensor(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    t = left_coproduct_generator(*it, t);
  return t;
}

NilHeckeTensor coproduct(const NilHeckeElement& a) {
  const int n = a.rank();
  NilHeckeTensor r;
  r.n = n;
  for (const auto& [w, p] : a.terms()) {
    const NilHeckeTensor t = coproduct_along(n, canonical_word(w));
    for (const auto& [key, q] : t.terms) r.add(key.first, key.second, p * q);
  }
  return r;
}

NilHeckeTensor tensor_multiply(const NilHeckeTensor& x, const NilHeckeTensor& y) {
  if (x.n != y.n) throw std::invalid_argument("tensors of different rank");
  const int n = x.n;
  NilHeckeTensor r;
  r.n = n;
  for (const auto& [kx, p] : x.terms) {
    NilHeckeElement left(n);
    left.add(kx.first, p);
    for (const auto& [ky, q] : y.terms) {
      const auto second = nc_product(kx.second, ky.second);
      if (!second) continue;
      NilHeckeElement right(n);
      right.add(ky.first, q);
      const NilHeckeElement prod = left * right;
      for (const auto& [u, s] : prod.terms()) r.add(u, *second, s);
    }
  }
  return r;
}

NilCoxeterElement phi0(const NilHeckeElement& a) {
  NilCoxeterElement r(a.rank(), true);
  for (const auto& [w, p] : a.terms()) r.add(w, p.constant_term());
  return r;
}

NilCoxeterTensor phi0(const NilHeckeTensor& t) {
  NilCoxeterTensor r;
  r.n = t.n;
  for (const auto& [key, p] : t.terms) r.add(key.first, key.second, p.constant_term());
  return r;
}

bool hopf_check(int n, int k) {
  const NilCoxeterTensor lhs =
      phi0(coproduct(NilHeckeElement::from_nilcoxeter(h_element(n, k, true))));
  NilCoxeterTensor rhs;
  rhs.n = n;
  for (int j = 0; j <= k; ++j) {
    const NilCoxeterTensor t = tensor(h_element(n, j, true), h_element(n, k - j, true));
    for (const auto& [key, c] : t.terms) rhs.add(key.first, key.second, c);
  }
  return lhs == rhs;
}

NilCoxeterElement j_basis_by_substitution(int n, const AffinePermutation& w) {
  if (w.rank() != n) throw std::invalid_argument("element rank differs from n");
  if (!w.is_grassmannian())
    throw std::invalid_argument("j-basis elements are indexed by Grassmannian elements");
  return noncommutative_schur(n, lambda_of(w), true);
}

NilCoxeterElement j_basis_by_solver(int n, const AffinePermutation& w) {
  if (w.rank() != n) throw std::invalid_argument("element rank differs from n");
  if (!w.is_grassmannian())
    throw std::invalid_argument("j-basis elements are indexed by Grassmannian elements");
  const int len = w.length();
  std::vector<AffinePermutation> unknowns;
  for (const auto& x : affine_elements(n, len))
    if (x.length() == len) unknowns.push_back(x);
  const std::size_t m = unknowns.size();

  RationalMatrix a;
  std::vector<Rational> b;
  for (std::size_t j = 0; j < m; ++j) {
    if (!unknowns[j].is_grassmannian()) continue;
    std::vector<Rational> row(m, 0);
    row[j] = 1;
    a.push_back(row);
    b.push_back(unknowns[j] == w ? 1 : 0);
  }
  // phi0(A_x x_i) for every unknown x, gathered by (i, u)
  std::map<std::pair<int, window::Window>, std::vector<Rational>> rows;
  for (int i = 1; i <= n; ++i) {
    const NilHeckeElement xi = NilHeckeElement::scalar(Polynomial::variable(n, i));
    for (std::size_t j = 0; j < m; ++j) {
      const NilCoxeterElement image = phi0(NilHeckeElement::basis(unknowns[j]) * xi);
      for (const auto& [u, c] : image.terms()) {
        auto& row = rows[{i, u}];
        row.resize(m, 0);
        row[j] += Rational(c);
      }
    }
  }
  for (const auto& [key, row] : rows) {
    a.push_back(row);
    b.push_back(0);
  }
  const LinearSolution sol = solve(a, b);
  if (!sol.consistent || !sol.unique)
    throw ContractViolation("j-basis system for " + to_string(w) +
                            (sol.consistent ? " is underdetermined" : " is inconsistent"));
  const auto ints = to_integers(sol.values);
  if (!ints) throw ContractViolation("j-basis solution for " + to_string(w) + " is not integral");
  NilCoxeterElement r(n, true);
  for (std::size_t j = 0; j < m; ++j) r.add(unknowns[j].window(), (*ints)[j]);
  return r;
}

NilCoxeterElement j_basis_element(int n, const AffinePermutation& w) {
  const NilCoxeterElement j = j_basis_by_substitution(n, w);
  for (const auto& [x, c] : j.terms()) {
    const AffinePermutation u(x);
    if (u.length() != w.length())
      throw ContractViolation("j-basis term of the wrong length");
    if (u.is_grassmannian() && (u != w || c != 1))
      throw ContractViolation("j-basis element for " + to_string(w) +
                              " has an unexpected Grassmannian term");
  }
  if (j.coeff(w.window()) != 1)
    throw ContractViolation("j-basis element for " + to_string(w) + " lacks A_w");
  const NilHeckeElement lifted = NilHeckeElement::from_nilcoxeter(j);
  for (int i = 1; i <= n; ++i)
    if (!phi0(lifted * NilHeckeElement::scalar(Polynomial::variable(n, i))).is_zero())
      throw ContractViolation("j-basis element for " + to_string(w) +
                              " fails phi0(a x_" + std::to_string(i) + ") = 0");
  if (j_basis_by_solver(n, w) != j)
    throw ContractViolation("j-basis algorithms disagree for " + to_string(w));
  return j;
}

NilCoxeterElement kappa(const NilCoxeterElement& a) {
  if (!a.affine()) throw std::invalid_argument("kappa takes an affine element");
  NilCoxeterElement r(a.rank(), false);
  for (const auto& [w, c] : a.terms())
    if (AffinePermutation(w).is_finite()) r.add(w, c);
  return r;
}

bool translation_centralizer_check(const CorootVector& lambda) {
  const int n = lambda.rank();
  NilHeckeElement a(n);
  for (const auto& mu : orbit(lambda))
    a = a + NilHeckeElement::basis(translation_element(mu));
  for (int i = 1; i <= n; ++i) {
    const NilHeckeElement xi = NilHeckeElement::scalar(Polynomial::variable(n, i));
    if (a * xi != xi * a) return false;
  }
  return true;
}

}  // namespace affstan
