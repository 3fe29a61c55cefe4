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

#include "affstan/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affstan {

namespace {

void check_var(int nvars, int i) {
  if (i < 1 || i > nvars)
    throw std::invalid_argument("variable index " + std::to_string(i) +
                                " outside 1.." + std::to_string(nvars));
}

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials in different numbers of variables");
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  check_var(nvars, i);
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(Exponents e, const Integer& c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  Polynomial p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

Integer Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::constant_term() const { return coeff(Exponents(nvars_, 0)); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous_linear() const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != 1) return false;
  return true;
}

void Polynomial::add(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (int k = 0; k < nvars_; ++k) e[k] += e2[k];
      r.add(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::operator*(const Integer& c) const {
  Polynomial r(nvars_);
  for (const auto& [e, x] : terms_) r.add(e, x * c);
  return r;
}

Polynomial Polynomial::swapped(int i, int j) const {
  check_var(nvars_, i);
  check_var(nvars_, j);
  Polynomial r(nvars_);
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    std::swap(e[i - 1], e[j - 1]);
    r.add(e, c);
  }
  return r;
}

Polynomial Polynomial::substituted(const std::vector<int>& target) const {
  if (static_cast<int>(target.size()) != nvars_)
    throw std::invalid_argument("substitution has the wrong length");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars_, 0);
    for (int k = 0; k < nvars_; ++k) {
      check_var(nvars_, target[k]);
      f[target[k] - 1] += e[k];
    }
    r.add(f, c);
  }
  return r;
}

Polynomial Polynomial::divided_difference(int i, int j) const {
  check_var(nvars_, i);
  check_var(nvars_, j);
  if (i == j) throw std::invalid_argument("divided difference needs i != j");
  Polynomial r(nvars_);
  // (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j)
  //   = x_i^b x_j^b * sum_{t=0}^{a-b-1} x_i^{a-b-1-t} x_j^t  for a > b
  for (const auto& [e, c] : terms_) {
    int a = e[i - 1], b = e[j - 1];
    if (a == b) continue;
    Integer sign = 1;
    if (a < b) {
      std::swap(a, b);
      sign = -1;
    }
    for (int t = 0; t < a - b; ++t) {
      Exponents f = e;
      f[i - 1] = a - 1 - t;
      f[j - 1] = b + t;
      r.add(f, c * sign);
    }
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // lexicographically largest exponent vector first
  std::vector<std::pair<Polynomial::Exponents, Integer>> terms(p.terms().rbegin(),
                                                               p.terms().rend());
  for (const auto& [e, c] : terms) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = true;
    for (int x : e)
      if (x != 0) unit = false;
    if (mag != 1 || unit) out << mag;
    bool need_star = mag != 1 && !unit;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << "x" << k + 1;
      if (e[k] > 1) out << "^" << e[k];
    }
  }
  return out.str();
}

}  // namespace affstan
