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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affstan/integer.hpp"
#include "affstan/partition.hpp"

namespace affstan {

enum class BasisKind { monomial, homogeneous, elementary, schur, affine_schur, k_schur };

// A basis of the ring of symmetric functions. The affine_schur(n) basis
// lives in the quotient by the ideal spanned by m_mu with mu_1 >= n; its
// elements are represented by their unique m-expansion supported on
// (n-1)-bounded partitions. The k_schur(n) basis spans the subring
// generated by h_1, ..., h_{n-1}.
struct Basis {
  BasisKind kind = BasisKind::monomial;
  int n = 0;  // rank for the two affine bases, 0 otherwise

  static Basis m() { return {BasisKind::monomial, 0}; }
  static Basis h() { return {BasisKind::homogeneous, 0}; }
  static Basis e() { return {BasisKind::elementary, 0}; }
  static Basis s() { return {BasisKind::schur, 0}; }
  static Basis affine_schur(int n);
  static Basis k_schur(int n);

  bool is_affine() const {
    return kind == BasisKind::affine_schur || kind == BasisKind::k_schur;
  }
  bool operator==(const Basis&) const = default;
};

std::string to_string(const Basis& b);
// "m", "h", "e", "s", "affine_schur", "kschur"; n is required for the last
// two.
Basis parse_basis(const std::string& name, int n = 0);

// Reverse-lexicographic: larger partitions first.
using Terms = std::map<Partition, Integer, std::greater<>>;

// Homogeneous symmetric function with integer coefficients in one basis.
class SymFunc {
 public:
  SymFunc(int degree, Basis basis);
  static SymFunc basis_element(Basis basis, const Partition& lambda);

  int degree() const { return degree_; }
  const Basis& basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  Integer coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  // Throws std::invalid_argument on a size or boundedness mismatch.
  void add(const Partition& lambda, const Integer& c);

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const Integer& c) const;
  bool operator==(const SymFunc& o) const = default;

 private:
  int degree_;
  Basis basis_;
  Terms terms_;
};

std::string to_string(const SymFunc& f);

// Expresses f in the target basis. Converting into k_schur(n) throws
// std::domain_error when f is outside the subring generated by
// h_1..h_{n-1}; the message names the first offending h-coefficient.
// Converting into affine_schur(n) first reduces modulo the ideal.
SymFunc change_basis(const SymFunc& f, Basis target);

Integer hall_inner_product(const SymFunc& f, const SymFunc& g);

// Product; the result uses f's basis. For affine_schur the product is
// taken in the quotient ring.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Drops the m-terms indexed by partitions with a part >= n (m-basis in and
// out).
SymFunc reduce_bounded(const SymFunc& f, int n);

// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

// m-expansion of the affine Schur function indexed by lambda.
SymFunc affine_schur(int n, const Partition& lambda);
// h-expansion of the k-Schur function indexed by lambda.
SymFunc k_schur(int n, const Partition& lambda);

// Element of Lambda (x) Lambda, stored in a single basis for both factors.
struct SymTensor {
  Basis basis;
  int degree = 0;
  std::map<std::pair<Partition, Partition>, Integer> terms;

  bool operator==(const SymTensor&) const = default;
};

// Delta f, in f's basis (affine bases are routed through m or h and
// returned in m or h respectively).
SymTensor coproduct(const SymFunc& f);
// The same coproduct computed from Delta h_k = sum h_j (x) h_{k-j}.
SymTensor coproduct_via_h(const SymFunc& f);
SymTensor tensor_change_basis(const SymTensor& t, Basis target);
// <t, g (x) h>, extended bilinearly.
Integer tensor_pairing(const SymTensor& t, const SymFunc& g, const SymFunc& h);
SymTensor tensor_product(const SymFunc& f, const SymFunc& g);

// Quasi-symmetric function stored in the monomial quasi-symmetric basis
// M_alpha, alpha a composition with positive parts. The coefficient of a
// weak composition's monomial equals that of its positive parts.
class QuasiSymFunc {
 public:
  explicit QuasiSymFunc(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Composition, Integer>& terms() const { return terms_; }
  Integer coeff(const Composition& alpha) const;  // zeros allowed
  void add(const Composition& alpha, const Integer& c);

  QuasiSymFunc operator+(const QuasiSymFunc& o) const;
  bool operator==(const QuasiSymFunc&) const = default;

  // m-expansion if every rearrangement of alpha has the same coefficient.
  std::optional<SymFunc> to_symmetric() const;
  static QuasiSymFunc from_symmetric(const SymFunc& f);

 private:
  int degree_;
  std::map<Composition, Integer> terms_;
};

// L_D for D a subset of [degree-1].
QuasiSymFunc fundamental_quasisym(const std::vector<int>& descents, int degree);

// All compositions of d with positive parts, lexicographic.
std::vector<Composition> compositions(int d);

}  // namespace affstan
