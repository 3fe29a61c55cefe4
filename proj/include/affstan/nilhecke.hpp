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

#include <map>
#include <string>
#include <utility>

#include "affstan/affine_permutation.hpp"
#include "affstan/nilcoxeter.hpp"
#include "affstan/polynomial.hpp"
#include "affstan/window.hpp"

namespace affstan {

// Element sum_w p_w A_w of the small-torus affine nilHecke ring of rank n,
// with polynomial scalars in x_1..x_n written to the left of A_w. Here
// alpha_i = x_i - x_{i+1} for i != 0, alpha_0 = x_n - x_1, and s_0 swaps
// x_1 and x_n.
class NilHeckeElement {
 public:
  using Terms = std::map<window::Window, Polynomial>;

  explicit NilHeckeElement(int n);  // zero; n >= 3

  static NilHeckeElement identity(int n);
  static NilHeckeElement scalar(const Polynomial& p);
  static NilHeckeElement basis(const AffinePermutation& w);
  static NilHeckeElement generator(int n, int i);
  static NilHeckeElement from_nilcoxeter(const NilCoxeterElement& a);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coeff(const window::Window& w) const;

  void add(const window::Window& w, const Polynomial& p);

  NilHeckeElement operator+(const NilHeckeElement& o) const;
  NilHeckeElement operator-(const NilHeckeElement& o) const;
  NilHeckeElement operator*(const NilHeckeElement& o) const;
  // p * this, with p placed on the left.
  NilHeckeElement scaled(const Polynomial& p) const;
  bool operator==(const NilHeckeElement&) const = default;

 private:
  int n_;
  Terms terms_;
};

std::string to_string(const NilHeckeElement& a);

Polynomial simple_root(int n, int i);
// Level-zero action: x_k goes to x_{w(k) mod n}.
Polynomial level_zero_action(const AffinePermutation& w, const Polynomial& f);
// The divided difference (f - s_i f) / alpha_i.
Polynomial divided_difference(int n, int i, const Polynomial& f);

// A_i f rewritten as (s_i f) A_i + (d_i f).
NilHeckeElement commute_past(int n, int i, const Polynomial& f);
// A_i a, for a in normal form.
NilHeckeElement left_generator(int i, const NilHeckeElement& a);

// Product of (1 - alpha_i A_i) along the word; any word is accepted.
NilHeckeElement embed_word(int n, const Word& word);
NilHeckeElement embed_group(const AffinePermutation& w);

// A_w f = (w.f) A_w + sum <alpha^vee, f> A_{w s_alpha} over reflections
// with l(w s_alpha) = l(w) - 1. f must be homogeneous linear.
NilHeckeElement chevalley(const AffinePermutation& w, const Polynomial& f);

// sum P * A_v (x) A_w; the scalar P sits to the left of the first factor.
struct NilHeckeTensor {
  int n = 0;
  std::map<std::pair<window::Window, window::Window>, Polynomial> terms;

  void add(const window::Window& v, const window::Window& w, const Polynomial& p);
  bool operator==(const NilHeckeTensor&) const = default;
};

struct NilCoxeterTensor {
  int n = 0;
  std::map<std::pair<window::Window, window::Window>, Integer> terms;

  void add(const window::Window& v, const window::Window& w, const Integer& c);
  bool operator==(const NilCoxeterTensor&) const = default;
};

NilCoxeterTensor tensor(const NilCoxeterElement& a, const NilCoxeterElement& b);

// Delta(A_i) = 1 (x) A_i + A_i (x) 1 - alpha_i A_i (x) A_i, extended
// multiplicatively; Delta(p) = p (x) 1.
NilHeckeTensor coproduct(const NilHeckeElement& a);
// Delta(A_w) computed along the given reduced word of w.
NilHeckeTensor coproduct_along(int n, const Word& word);
// sum P (A_v Q A_v') (x) A_w A_w' over the terms of x and y.
NilHeckeTensor tensor_multiply(const NilHeckeTensor& x, const NilHeckeTensor& y);

// Constant terms of the scalars.
NilCoxeterElement phi0(const NilHeckeElement& a);
NilCoxeterTensor phi0(const NilHeckeTensor& t);

// (phi0 (x) phi0) Delta(h~_k) == sum_j h~_j (x) h~_{k-j}.
bool hopf_check(int n, int k);

// Noncommutative k-Schur function of lambda(w), for Grassmannian w.
NilCoxeterElement j_basis_by_substitution(int n, const AffinePermutation& w);
// Solves for the element of span{A_x : l(x) = l(w)} whose Grassmannian part
// is A_w and with phi0(a x_i) = 0 for i = 1..n. Throws ContractViolation if
// the system has no unique integral solution.
NilCoxeterElement j_basis_by_solver(int n, const AffinePermutation& w);
// The substitution result, after checking its Grassmannian part, the phi0
// conditions and agreement with the solver. Throws std::invalid_argument if
// w is not Grassmannian and ContractViolation if any check fails.
NilCoxeterElement j_basis_element(int n, const AffinePermutation& w);

// Keeps the terms indexed by elements of S_n.
NilCoxeterElement kappa(const NilCoxeterElement& a);

// Whether sum over mu in the orbit of lambda of A_{t_mu} commutes with every
// x_i in the nilHecke ring.
bool translation_centralizer_check(const CorootVector& lambda);

}  // namespace affstan
