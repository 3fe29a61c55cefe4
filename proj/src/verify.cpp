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

#include "affstan/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "affstan/nilcoxeter.hpp"
#include "affstan/nilhecke.hpp"
#include "affstan/stanley.hpp"
#include "affstan/symfunc.hpp"
#include "affstan/tableau.hpp"

namespace affstan {

namespace {

using Check = std::pair<std::string, std::function<std::string()>>;

// Each check returns an empty string on success, otherwise a reason.
std::string expect(bool ok, const std::string& reason) { return ok ? "" : reason; }

SymFunc make(Basis b, int degree, std::vector<std::pair<Partition, int>> terms) {
  SymFunc f(degree, b);
  for (const auto& [p, c] : terms) f.add(p, c);
  return f;
}

NilCoxeterElement words_sum(int n, bool affine, const std::vector<std::string>& words) {
  NilCoxeterElement a(n, affine);
  for (const auto& w : words) {
    const Word word = parse_word(w);
    a = a + (affine ? NilCoxeterElement::basis(AffinePermutation::from_word(n, word))
                    : NilCoxeterElement::basis(Permutation::from_word(n, word)));
  }
  return a;
}

std::vector<Permutation> up_to(int n, int max_length) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (w.length() <= max_length) out.push_back(w);
  return out;
}

std::string commute_table(int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) {
      const Polynomial xi = Polynomial::variable(n, i);
      const NilHeckeElement got = commute_past(n, j, xi);
      const AffinePermutation sj = AffinePermutation::simple(n, j);
      NilHeckeElement expected(n);
      if (j == i % n) {
        expected.add(sj.window(), Polynomial::variable(n, i % n + 1));
        expected.add(window::identity(n), Polynomial::constant(n, 1));
      } else if (j == (i + n - 1) % n) {
        expected.add(sj.window(), Polynomial::variable(n, (i + n - 2) % n + 1));
        expected.add(window::identity(n), Polynomial::constant(n, -1));
      } else {
        expected.add(sj.window(), xi);
      }
      if (got != expected)
        return "A_" + std::to_string(j) + " x_" + std::to_string(i) + " = " + to_string(got);
    }
  return "";
}

std::vector<Check> examples() {
  return {
      {"F_2431 by three definitions",
       [] {
         const Permutation w({2, 4, 3, 1});
         const auto f = make(Basis::m(), 4, {{{2, 1, 1}, 1}, {{1, 1, 1, 1}, 3}});
         for (auto m : {StanleyMethod::original, StanleyMethod::decreasing,
                        StanleyMethod::quasisym})
           if (stanley(w, m) != f) return "method " + to_string(m) + " gives " + to_string(stanley(w, m));
         return expect(schur_expand(w) == SymFunc::basis_element(Basis::s(), {2, 1, 1}),
                       "Schur expansion " + to_string(schur_expand(w)));
       }},
      {"reduced words of the longest element of S4",
       [] {
         return expect(reduced_words(Permutation::longest(4)).size() == 16, "count differs from 16");
       }},
      {"EG insertion of 21232",
       [] {
         const auto r = eg_insert({2, 1, 2, 3, 2});
         return expect(r.p == Tableau({{1, 2, 3}, {2, 3}}) && r.q == Tableau({{1, 3, 4}, {2, 5}}),
                       "P = " + to_string(r.p) + ", Q = " + to_string(r.q));
       }},
      {"Little move chain from 2134321 marked at 5",
       [] {
         const auto path = little_path({{2, 1, 3, 4, 3, 2, 1}, 5});
         const std::vector<MarkedWord> expected{{{2, 1, 3, 4, 3, 2, 1}, 5},
                                                {{2, 1, 3, 4, 2, 2, 1}, 6},
                                                {{2, 1, 3, 4, 2, 1, 1}, 7},
                                                {{3, 2, 4, 5, 3, 2, 1}, 7}};
         return expect(path == expected, "path ends at " + to_string(path.back()));
       }},
      {"affine Stanley function of 21202 in rank 3",
       [] {
         const auto f = affine_stanley(AffinePermutation::from_word(3, {2, 1, 2, 0, 2}));
         return expect(f == make(Basis::m(), 5, {{{2, 2, 1}, 1}, {{2, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1}, 3}}),
                       to_string(f));
       }},
      {"affine Schur expansion of 21202 matches its monomial expansion",
       [] {
         const auto w = AffinePermutation::from_word(3, {2, 1, 2, 0, 2});
         const auto e = affine_schur_expand(w);
         for (const auto& [lam, c] : e.terms())
           if (c <= 0) return "nonpositive coefficient in " + to_string(e);
         return expect(change_basis(e, Basis::m()) == affine_stanley(w), to_string(e));
       }},
      {"h_2 in the nilCoxeter algebra of S4",
       [] {
         return expect(h_element(4, 2, false) == words_sum(4, false, {"21", "31", "32"}),
                       to_string(h_element(4, 2, false)));
       }},
      {"noncommutative Schur functions s_22 and s_321 in S4",
       [] {
         return expect(noncommutative_schur(4, {2, 2}, false) == words_sum(4, false, {"2132"}) &&
                           noncommutative_schur(4, {3, 2, 1}, false) ==
                               words_sum(4, false, {"321323"}),
                       "mismatch");
       }},
      {"j-basis elements in rank 3",
       [] {
         const std::vector<std::pair<Word, std::vector<std::string>>> cases{
             {{}, {""}},
             {{0}, {"0", "1", "2"}},
             {{1, 0}, {"10", "21", "02"}},
             {{2, 0}, {"01", "12", "20"}},
             {{2, 1, 0}, {"101", "102", "210", "212", "020", "021"}},
             {{1, 2, 0}, {"101", "201", "012", "212", "020", "120"}}};
         for (const auto& [word, terms] : cases) {
           const auto j = j_basis_element(3, AffinePermutation::from_word(3, word));
           if (j != words_sum(3, true, terms)) return "j for " + to_string(word) + " = " + to_string(j);
         }
         return std::string();
       }},
      {"finite projection of the (2,2,1) j-basis element in rank 4",
       [] {
         const auto k = kappa(j_basis_element(4, grassmannian_from_partition(4, {2, 2, 1})));
         return expect(k == words_sum(4, false, {"32132", "23123"}), to_string(k));
       }},
      {"constant term of 3 a1^2 a2 + a2 + 5",
       [] {
         const auto a1 = simple_root(3, 1), a2 = simple_root(3, 2);
         const auto f = a1 * a1 * a2 * Integer(3) + a2 + Polynomial::constant(3, 5);
         return expect(phi0(NilHeckeElement::scalar(f)) ==
                           NilCoxeterElement::identity(3, true) * Integer(5),
                       "wrong constant term");
       }},
      {"generator-variable commutation table in rank 4", [] { return commute_table(4); }},
  };
}

std::vector<Check> symmetry() {
  return {
      {"definitions agree and F_w is symmetric on S4 and S5 (length <= 7)",
       [] {
         for (int n : {4, 5})
           for (const auto& w : up_to(n, n == 5 ? 7 : 10)) {
             const auto f = stanley(w, StanleyMethod::decreasing);
             if (stanley(w, StanleyMethod::original) != f ||
                 stanley(w, StanleyMethod::quasisym) != f)
               return "definitions differ for " + to_string(w);
             if (asymmetry_witness(w)) return "asymmetric for " + to_string(w);
           }
         return std::string();
       }},
      {"affine F_w is symmetric on rank 3 (length <= 6) and rank 4 (length <= 5)",
       [] {
         for (int n : {3, 4})
           for (const auto& w : affine_elements(n, n == 3 ? 6 : 5))
             if (asymmetry_witness(w)) return "asymmetric for " + to_string(w);
         return std::string();
       }},
      {"affine F_w restricts to F_w on S4",
       [] {
         for (const auto& u : all_permutations(4))
           if (affine_stanley(AffinePermutation::from_permutation(u)) != stanley(u))
             return "differs for " + to_string(u);
         return std::string();
       }},
  };
}

std::vector<Check> eg() {
  return {
      {"insertion descents equal recording descents on S5 (length <= 7)",
       [] {
         for (const auto& w : up_to(5, 7)) {
           std::set<std::pair<Tableau, Tableau>> seen;
           for (const auto& word : reduced_words(w)) {
             const auto [p, q] = eg_insert(word);
             if (descent_set(word) != q.descent_set())
               return "descents differ for " + to_string(word);
             if (!q.is_standard() || p.shape() != q.shape() ||
                 Permutation::from_word(5, p.reading_word()) != w)
               return "bad insertion pair for " + to_string(word);
             if (!seen.emplace(p, q).second) return "repeated pair for " + to_string(word);
           }
         }
         return std::string();
       }},
      {"Coxeter-Knuth classes are insertion fibers on S4",
       [] {
         for (const auto& w : all_permutations(4)) {
           std::map<Tableau, std::vector<Word>> fibers;
           for (const auto& word : reduced_words(w)) fibers[eg_insert(word).p].push_back(word);
           std::set<std::vector<Word>> expected;
           for (auto& [p, words] : fibers) expected.insert(words);
           const auto classes = coxeter_knuth_classes(w);
           if (std::set<std::vector<Word>>(classes.begin(), classes.end()) != expected)
             return "classes differ for " + to_string(w);
         }
         return std::string();
       }},
  };
}

std::vector<Check> transition() {
  return {
      {"transition identity on S4 for every r",
       [] {
         for (const auto& w : all_permutations(4))
           for (int r = 1; r <= 4; ++r)
             if (!transition_identity_check(w, r))
               return "fails for " + to_string(w) + ", r = " + std::to_string(r);
         return std::string();
       }},
      {"Little move is a bijection between transition sides on S4",
       [] {
         for (const auto& w : all_permutations(4))
           for (int r = 1; r <= 4; ++r)
             if (!little_bijection_check(w, r))
               return "fails for " + to_string(w) + ", r = " + std::to_string(r);
         return std::string();
       }},
  };
}

std::vector<Check> nilcoxeter() {
  return {
      {"h_k commute in the finite algebra for n <= 6",
       [] {
         for (int n = 2; n <= 6; ++n)
           for (int k = 1; k < n; ++k)
             for (int l = k + 1; l < n; ++l) {
               const auto a = h_element(n, k, false), b = h_element(n, l, false);
               if (a * b != b * a) return "n = " + std::to_string(n);
             }
         return std::string();
       }},
      {"h_k commute in the affine algebra for n = 3, 4, 5",
       [] {
         for (int n = 3; n <= 5; ++n)
           for (int k = 1; k < n; ++k)
             for (int l = k + 1; l < n; ++l) {
               const auto a = h_element(n, k, true), b = h_element(n, l, true);
               if (a * b != b * a) return "n = " + std::to_string(n);
             }
         return std::string();
       }},
      {"product expansion of the h generating function for n <= 5",
       [] {
         for (int n = 2; n <= 5; ++n)
           if (!product_expansion_check(n)) return "n = " + std::to_string(n);
         return std::string();
       }},
      {"h products give monomial coefficients of F_w on S4",
       [] {
         std::vector<NilCoxeterElement> h;
         for (int k = 0; k < 4; ++k) h.push_back(h_element(4, k, false));
         for (const auto& w : all_permutations(4)) {
           const auto f = stanley(w);
           for (const auto& mu : partitions(w.length())) {
             NilCoxeterElement prod = NilCoxeterElement::identity(4, false);
             for (int part : mu.parts())
               prod = part < 4 ? prod * h[part] : NilCoxeterElement(4, false);
             if (prod.coeff(w.window()) != f.coeff(mu))
               return to_string(w) + " at " + to_string(mu);
           }
         }
         return std::string();
       }},
      {"finite Fomin-Stanley algebra of S4 has dimension 14",
       [] {
         const auto r = fomin_stanley_report(4);
         return expect(r.basis_size == 14 && r.rank == 14 &&
                           root_poset_upper_ideals(4).size() == 14 && r.hilbert_match,
                       "dimension " + std::to_string(r.rank));
       }},
  };
}

std::vector<Check> nilhecke() {
  return {
      {"generator-variable commutation table for n = 3, 4, 5",
       [] {
         for (int n = 3; n <= 5; ++n)
           if (auto d = commute_table(n); !d.empty()) return d;
         return std::string();
       }},
      {"group embedding is independent of the reduced word (rank 3, length <= 5)",
       [] {
         for (const auto& w : affine_elements(3, 5)) {
           const auto words = reduced_words(w);
           const auto e = embed_word(3, words.front());
           for (const auto& word : words)
             if (embed_word(3, word) != e) return "differs for " + to_string(w);
         }
         return std::string();
       }},
      {"coproduct of generators and independence of the reduced word",
       [] {
         const auto id = window::identity(3);
         for (int i = 0; i < 3; ++i) {
           const auto si = AffinePermutation::simple(3, i).window();
           NilHeckeTensor d;
           d.n = 3;
           d.add(id, si, Polynomial::constant(3, 1));
           d.add(si, id, Polynomial::constant(3, 1));
           d.add(si, si, -simple_root(3, i));
           if (coproduct(NilHeckeElement::generator(3, i)) != d)
             return "Delta(A_" + std::to_string(i) + ") differs";
         }
         for (const auto& w : affine_elements(3, 5)) {
           const auto words = reduced_words(w);
           const auto d = coproduct_along(3, words.front());
           for (const auto& word : words)
             if (coproduct_along(3, word) != d) return "differs for " + to_string(w);
         }
         return std::string();
       }},
      {"Chevalley formula matches the normal form (rank 3, length <= 4)",
       [] {
         for (const auto& w : affine_elements(3, 4))
           for (int i = 1; i <= 3; ++i) {
             const auto xi = Polynomial::variable(3, i);
             if (chevalley(w, xi) != NilHeckeElement::basis(w) * NilHeckeElement::scalar(xi))
               return "differs for " + to_string(w);
           }
         return std::string();
       }},
      {"coproduct of h~_k for n = 3, 4",
       [] {
         for (int n : {3, 4})
           for (int k = 0; k < n; ++k)
             if (!hopf_check(n, k)) return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
         return std::string();
       }},
      {"j-basis by substitution and by solver (rank 3 length <= 6, rank 4 length <= 5)",
       [] {
         for (int n : {3, 4})
           for (const auto& w : grassmannian_elements(n, n == 3 ? 6 : 5)) j_basis_element(n, w);
         return std::string();
       }},
      {"orbit sums of translations commute with the scalars",
       [] {
         for (const auto& l : {CorootVector::zero(3), CorootVector({-1, 0, 1}),
                               CorootVector({-1, -1, 2}), CorootVector({1, 0, 0, -1})})
           if (!translation_centralizer_check(l)) return "fails for rank " + std::to_string(l.rank());
         return std::string();
       }},
  };
}

std::vector<Check> conjectures() {
  return {
      {"affine Schur expansions are nonnegative (rank 3 length <= 6, rank 4 length <= 5)",
       [] {
         for (int n : {3, 4})
           for (const auto& w : affine_elements(n, n == 3 ? 6 : 5)) {
             const auto e = affine_schur_expand(w);
             for (const auto& [lam, c] : e.terms())
               if (c < 0) return "negative for " + to_string(w);
           }
         return std::string();
       }},
      {"finite projections of j-basis elements are nonnegative",
       [] {
         for (int n : {3, 4})
           for (const auto& w : grassmannian_elements(n, n == 3 ? 6 : 5)) {
             const auto k = kappa(j_basis_by_substitution(n, w));
             for (const auto& [x, c] : k.terms())
               if (c < 0) return "negative for " + to_string(w);
           }
         return std::string();
       }},
      {"finite Fomin-Stanley algebra report for n = 2..5",
       [] {
         for (int n = 2; n <= 5; ++n)
           if (!fomin_stanley_report(n).passed()) return "fails for n = " + std::to_string(n);
         return std::string();
       }},
  };
}

std::vector<Check> manifest(const std::string& name) {
  if (name == "examples") return examples();
  if (name == "symmetry") return symmetry();
  if (name == "eg") return eg();
  if (name == "transition") return transition();
  if (name == "nilcoxeter") return nilcoxeter();
  if (name == "nilhecke") return nilhecke();
  if (name == "conjectures") return conjectures();
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "examples", "symmetry", "eg", "transition", "nilcoxeter", "nilhecke", "conjectures"};
  return names;
}

SuiteReport run_suite(const std::string& name) {
  SuiteReport report{name, {}};
  const std::vector<std::string> parts =
      name == "all" ? suite_names() : std::vector<std::string>{name};
  for (const auto& part : parts)
    for (const auto& [check_name, run] : manifest(part)) {
      CheckResult r{part + ": " + check_name, false, ""};
      try {
        r.detail = run();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      report.checks.push_back(r);
    }
  return report;
}

}  // namespace affstan
