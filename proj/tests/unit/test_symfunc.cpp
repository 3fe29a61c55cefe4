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

#include "affstan/symfunc.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using affstan::Basis;
using affstan::Integer;
using affstan::Partition;
using affstan::SymFunc;

namespace {

SymFunc make(Basis b, int degree,
             std::initializer_list<std::pair<Partition, int>> terms) {
  SymFunc f(degree, b);
  for (const auto& [p, c] : terms) f.add(p, c);
  return f;
}

SymFunc elem(Basis b, const Partition& p) {
  return SymFunc::basis_element(b, p);
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Partition two_one(int a, int b) {
  std::vector<int> parts(a, 2);
  parts.insert(parts.end(), b, 1);
  return Partition(parts);
}

SymFunc random_element(std::mt19937& rng, int degree) {
  SymFunc f(degree, Basis::s());
  for (const auto& p : affstan::partitions(degree))
    f.add(p, static_cast<int>(rng() % 5) - 2);
  return f;
}

}  // namespace

TEST_CASE("basis changes from small determinants") {
  for (int k = 1; k <= 5; ++k)
    CHECK(affstan::change_basis(elem(Basis::s(), {k}), Basis::h()) ==
          elem(Basis::h(), {k}));
  CHECK(affstan::change_basis(elem(Basis::s(), {2, 1}), Basis::h()) ==
        make(Basis::h(), 3, {{{2, 1}, 1}, {{3}, -1}}));
  CHECK(affstan::change_basis(elem(Basis::s(), {2, 1, 1}), Basis::m()) ==
        make(Basis::m(), 4, {{{2, 1, 1}, 1}, {{1, 1, 1, 1}, 3}}));
  CHECK(affstan::change_basis(SymFunc(0, Basis::s()) +
                                  elem(Basis::s(), {}),
                              Basis::m()) == elem(Basis::m(), {}));
  CHECK(affstan::to_string(make(Basis::h(), 3, {{{2, 1}, 1}, {{3}, -1}})) ==
        "-h(3) + h(2,1)");
}

TEST_CASE("h, e and s against counting oracles") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : affstan::partitions(d)) {
      const auto h = affstan::change_basis(elem(Basis::h(), mu), Basis::m());
      const auto e = affstan::change_basis(elem(Basis::e(), mu), Basis::m());
      const auto s = affstan::change_basis(elem(Basis::s(), mu), Basis::m());
      for (const auto& lam : affstan::partitions(d)) {
        CHECK(h.coeff(lam) ==
              oracle::count_matrices(mu.parts(), lam.parts(), d));
        CHECK(e.coeff(lam) == oracle::count_matrices(mu.parts(), lam.parts(), 1));
        CHECK(s.coeff(lam) == oracle::count_ssyt(mu.parts(), lam.parts()));
        CHECK(affstan::kostka(mu, lam) ==
              oracle::count_ssyt(mu.parts(), lam.parts()));
      }
    }
}

TEST_CASE("round trips and orthonormality") {
  const std::vector<Basis> bases{Basis::m(), Basis::h(), Basis::e(), Basis::s()};
  for (int d = 0; d <= 8; ++d) {
    const auto parts = affstan::partitions(d);
    for (const auto& lam : parts) {
      for (const auto& from : bases)
        for (const auto& to : bases) {
          const auto f = elem(from, lam);
          CHECK(affstan::change_basis(affstan::change_basis(f, to), from) == f);
        }
      if (d > 6) continue;
      for (const auto& mu : parts) {
        const int delta = lam == mu ? 1 : 0;
        CHECK(affstan::hall_inner_product(elem(Basis::s(), lam),
                                          elem(Basis::s(), mu)) == delta);
        CHECK(affstan::hall_inner_product(elem(Basis::h(), lam),
                                          elem(Basis::m(), mu)) == delta);
      }
    }
  }
}

TEST_CASE("Hall inner product") {
  CHECK(affstan::hall_inner_product(elem(Basis::h(), {2, 1}),
                                    elem(Basis::m(), {2, 1})) == 1);
  CHECK(affstan::hall_inner_product(elem(Basis::s(), {2, 1}),
                                    elem(Basis::s(), {3})) == 0);
  // h_1^2 = m_2 + 2 m_11, while <h_11, m_2> vanishes by duality
  CHECK(affstan::change_basis(elem(Basis::h(), {1, 1}), Basis::m())
            .coeff({2}) == 1);
  CHECK(affstan::hall_inner_product(elem(Basis::h(), {1, 1}),
                                    elem(Basis::m(), {2})) == 0);
  CHECK(affstan::hall_inner_product(elem(Basis::h(), {1, 1}),
                                    elem(Basis::s(), {2})) == 1);
  CHECK_THROWS_AS(affstan::hall_inner_product(elem(Basis::h(), {1}),
                                              elem(Basis::m(), {2})),
                  std::invalid_argument);
}

TEST_CASE("fundamental quasi-symmetric functions") {
  const auto l0 = affstan::fundamental_quasisym({}, 2);
  CHECK(l0.coeff({2}) == 1);
  CHECK(l0.coeff({1, 1}) == 1);
  CHECK(l0.coeff({0, 2, 0}) == 1);
  CHECK(l0.coeff({1, 0, 1}) == 1);
  CHECK(*l0.to_symmetric() == elem(Basis::m(), {2}) + elem(Basis::m(), {1, 1}));
  const auto l1 = affstan::fundamental_quasisym({1}, 2);
  CHECK(l1.coeff({2}) == 0);
  CHECK(!affstan::fundamental_quasisym({1}, 3).to_symmetric());
  CHECK_THROWS_AS(affstan::fundamental_quasisym({3}, 3), std::invalid_argument);

  const auto s21 = affstan::fundamental_quasisym({1}, 3) +
                   affstan::fundamental_quasisym({2}, 3);
  CHECK(s21 == affstan::QuasiSymFunc::from_symmetric(elem(Basis::s(), {2, 1})));

  // L_D counts weakly increasing sequences, strictly increasing at D
  for (int d = 1; d <= 4; ++d)
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
      std::vector<int> descents;
      for (int i = 1; i < d; ++i)
        if (mask & (1u << (i - 1))) descents.push_back(i);
      const auto l = affstan::fundamental_quasisym(descents, d);
      for (const auto& alpha : affstan::compositions(d)) {
        // the unique weakly increasing sequence with content alpha
        std::vector<int> seq;
        for (std::size_t v = 0; v < alpha.size(); ++v)
          seq.insert(seq.end(), alpha[v], static_cast<int>(v));
        bool ok = true;
        for (int i : descents) ok &= seq[i - 1] < seq[i];
        CHECK(l.coeff(alpha) == (ok ? 1 : 0));
      }
    }
}

TEST_CASE("coproduct") {
  const auto dh2 = affstan::coproduct(elem(Basis::h(), {2}));
  CHECK(dh2.terms.size() == 3);
  CHECK(dh2.terms.at({Partition{}, Partition{2}}) == 1);
  CHECK(dh2.terms.at({Partition{1}, Partition{1}}) == 1);
  CHECK(dh2.terms.at({Partition{2}, Partition{}}) == 1);
  const auto one = affstan::coproduct(elem(Basis::s(), {}));
  CHECK(one.terms.size() == 1);
  CHECK(one.terms.at({Partition{}, Partition{}}) == 1);
  CHECK(affstan::tensor_pairing(affstan::coproduct(elem(Basis::s(), {2, 1})),
                                elem(Basis::s(), {1}), elem(Basis::s(), {2})) ==
        1);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 3);
    const int b = 1 + static_cast<int>(rng() % 2);
    const auto g = random_element(rng, a);
    const auto h = random_element(rng, b);
    const auto f = random_element(rng, a + b);
    CHECK(affstan::tensor_pairing(affstan::coproduct(f), g, h) ==
          affstan::hall_inner_product(f, affstan::multiply(g, h)));
    CHECK(affstan::tensor_change_basis(affstan::coproduct(f), Basis::h()) ==
          affstan::coproduct_via_h(f));
  }
}

TEST_CASE("affine Schur and k-Schur functions") {
  CHECK(affstan::affine_schur(3, {2, 1, 1}) ==
        make(Basis::m(), 4, {{{2, 1, 1}, 1}, {{1, 1, 1, 1}, 2}}));
  CHECK(affstan::affine_schur(4, {1}) == elem(Basis::m(), {1}));
  CHECK_THROWS_AS(affstan::affine_schur(3, {3}), std::invalid_argument);
  CHECK(affstan::k_schur(3, {2, 1, 1}) ==
        make(Basis::h(), 4, {{{2, 1, 1}, 1}, {{2, 2}, -1}}));
  CHECK(affstan::k_schur(3, {1}) == elem(Basis::h(), {1}));
  CHECK(affstan::change_basis(affstan::k_schur(4, {2, 2, 1}), Basis::s()) ==
        elem(Basis::s(), {2, 2, 1}) + elem(Basis::s(), {3, 2}));

  for (int n : {3, 4})
    for (int d = 0; d <= 6; ++d) {
      const auto parts = affstan::bounded_partitions(n, d);
      for (const auto& lam : parts) {
        // unitriangular against m
        const auto f = affstan::affine_schur(n, lam);
        CHECK(f.coeff(lam) == 1);
        for (const auto& [mu, c] : f.terms())
          CHECK(affstan::dominance_leq(mu, lam));
        for (const auto& mu : parts)
          CHECK(affstan::hall_inner_product(affstan::k_schur(n, lam),
                                            affstan::affine_schur(n, mu)) ==
                (lam == mu ? 1 : 0));
      }
    }
}

TEST_CASE("two-column closed forms for n = 3") {
  const SymFunc e2 = affstan::change_basis(elem(Basis::e(), {2}), Basis::h());
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) {
      const Partition lam = two_one(a, b);
      SymFunc expected(lam.size(), Basis::m());
      for (int j = 0; j <= a; ++j)
        expected.add(two_one(j, b + 2 * a - 2 * j),
                     binomial(b / 2 + a - j, a - j));
      CHECK(affstan::affine_schur(3, lam) == expected);

      SymFunc k = elem(Basis::h(), {});
      for (int i = 0; i < a; ++i) k = affstan::multiply(k, elem(Basis::h(), {2}));
      for (int i = 0; i < b / 2; ++i) k = affstan::multiply(k, e2);
      if (b % 2) k = affstan::multiply(k, elem(Basis::h(), {1}));
      CHECK(affstan::k_schur(3, lam) == k);
    }
}

TEST_CASE("affine bases as change_basis targets") {
  const Basis af = Basis::affine_schur(3);
  const Basis ks = Basis::k_schur(3);
  CHECK_THROWS_AS(affstan::change_basis(elem(Basis::h(), {3}), ks),
                  std::domain_error);
  try {
    affstan::change_basis(elem(Basis::s(), {3}), ks);
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("h(3)") != std::string::npos);
  }
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : affstan::bounded_partitions(3, d)) {
      CHECK(affstan::change_basis(elem(af, lam), af) == elem(af, lam));
      CHECK(affstan::change_basis(affstan::change_basis(elem(ks, lam), Basis::s()),
                                  ks) == elem(ks, lam));
      CHECK(affstan::change_basis(affstan::affine_schur(3, lam), af) ==
            elem(af, lam));
    }
  CHECK_THROWS_AS(elem(af, {3}), std::invalid_argument);
  // s_3 is m_3 + m_21 + m_111; modulo m_3 it is F~_21 + F~_111 - ...
  const auto s3 = affstan::change_basis(elem(Basis::s(), {3}), af);
  CHECK(affstan::change_basis(s3, Basis::m()) ==
        affstan::reduce_bounded(elem(Basis::s(), {3}), 3));
}

TEST_CASE("quotient arithmetic") {
  for (int n : {3, 4})
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; a + b <= 6; ++b)
        for (const auto& lam : affstan::bounded_partitions(n, a))
          for (const auto& mu : affstan::bounded_partitions(n, b)) {
            const Basis af = Basis::affine_schur(n);
            const auto quotient =
                affstan::multiply(elem(af, lam), elem(af, mu));
            const auto full = affstan::multiply(
                affstan::change_basis(elem(af, lam), Basis::m()),
                affstan::change_basis(elem(af, mu), Basis::m()));
            CHECK(affstan::change_basis(quotient, Basis::m()) ==
                  affstan::reduce_bounded(full, n));
          }
}
