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
#include <vector>

#include "affstan/integer.hpp"

namespace affstan {

// Integer polynomial in x_1, ..., x_n, keyed by exponent vectors.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Integer& c);
  static Polynomial variable(int nvars, int i);  // x_i, 1-based
  static Polynomial monomial(Exponents e, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponents& e) const;
  Integer constant_term() const;
  // -1 for the zero polynomial; otherwise the top total degree.
  int degree() const;
  bool is_homogeneous_linear() const;

  void add(const Exponents& e, const Integer& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial& operator+=(const Polynomial& o);

  // Exchanges x_i and x_j.
  Polynomial swapped(int i, int j) const;
  // x_k becomes x_{target[k-1]}.
  Polynomial substituted(const std::vector<int>& target) const;
  // (f - f|x_i<->x_j) / (x_i - x_j), computed monomial by monomial.
  Polynomial divided_difference(int i, int j) const;

  bool operator==(const Polynomial& o) const = default;

 private:
  int nvars_ = 0;
  Terms terms_;
};

std::string to_string(const Polynomial& p);

}  // namespace affstan
