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

#include "affstan/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace affstan::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected an integer entry");
    out.push_back(x.get<int>());
  }
  return out;
}

Json word_json(const window::Window& w) {
  Json out = Json::array();
  for (int letter : canonical_word(w)) out.push_back(letter);
  return out;
}

}  // namespace

Json to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max())
    return c.convert_to<long long>();
  return c.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer string");
    }
  }
  throw std::invalid_argument("expected an integer");
}

Json to_json(const Permutation& w) { return w.window(); }

Permutation permutation_from_json(const Json& j) { return Permutation(int_list(j)); }

Json to_json(const AffinePermutation& w) {
  Json out;
  out["rank"] = w.rank();
  out["window"] = w.window();
  out["word"] = word_json(w.window());
  return out;
}

AffinePermutation affine_permutation_from_json(const Json& j) {
  AffinePermutation w(int_list(field(j, "window")));
  if (j.contains("rank") && j.at("rank") != w.rank())
    throw std::invalid_argument("rank does not match the window");
  return w;
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) { return Partition(int_list(j)); }

Json to_json(const SymFunc& f) {
  Json out;
  out["basis"] = to_string(f.basis());
  out["n"] = f.basis().n;
  out["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [lam, c] : f.terms())
    terms.push_back({{"partition", to_json(lam)}, {"coeff", to_json(c)}});
  out["terms"] = terms;
  return out;
}

SymFunc symfunc_from_json(const Json& j) {
  const Basis b = parse_basis(field(j, "basis").get<std::string>(),
                              j.contains("n") ? j.at("n").get<int>() : 0);
  SymFunc f(field(j, "degree").get<int>(), b);
  for (const auto& t : field(j, "terms"))
    f.add(partition_from_json(field(t, "partition")), integer_from_json(field(t, "coeff")));
  return f;
}

Json to_json(const Tableau& t) { return t.rows(); }

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) rows.push_back(int_list(r));
  return Tableau(rows);
}

Json to_json(const MarkedWord& m) { return {{"word", m.word}, {"mark", m.mark}}; }

MarkedWord marked_word_from_json(const Json& j) {
  return {int_list(field(j, "word")), field(j, "mark").get<int>()};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial p(field(j, "nvars").get<int>());
  for (const auto& t : field(j, "terms"))
    p.add(int_list(field(t, "exponents")), integer_from_json(field(t, "coeff")));
  return p;
}

Json to_json(const NilCoxeterElement& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back({{"window", w}, {"word", word_json(w)}, {"coeff", to_json(c)}});
  return {{"rank", a.rank()}, {"affine", a.affine()}, {"terms", terms}};
}

NilCoxeterElement nilcoxeter_from_json(const Json& j) {
  NilCoxeterElement a(field(j, "rank").get<int>(), field(j, "affine").get<bool>());
  for (const auto& t : field(j, "terms"))
    a.add(int_list(field(t, "window")), integer_from_json(field(t, "coeff")));
  return a;
}

Json to_json(const NilHeckeElement& a) {
  Json terms = Json::array();
  for (const auto& [w, p] : a.terms())
    terms.push_back({{"window", w}, {"word", word_json(w)}, {"poly", to_json(p)}});
  return {{"rank", a.rank()}, {"terms", terms}};
}

NilHeckeElement nilhecke_from_json(const Json& j) {
  NilHeckeElement a(field(j, "rank").get<int>());
  for (const auto& t : field(j, "terms"))
    a.add(int_list(field(t, "window")), polynomial_from_json(field(t, "poly")));
  return a;
}

Json to_json(const FominStanleyReport& r) {
  Json out;
  out["n"] = r.n;
  out["commutative"] = r.commutative;
  out["basis_size"] = r.basis_size;
  out["rank"] = r.rank;
  out["independent"] = r.independent;
  out["hilbert_partitions"] = r.hilbert_partitions;
  out["hilbert_ideals"] = r.hilbert_ideals;
  out["hilbert_match"] = r.hilbert_match;
  out["nonnegative"] = r.nonnegative;
  Json repeated = Json::array();
  for (const auto& [w, c] : r.occurrences)
    if (c != 1) repeated.push_back({{"window", w}, {"word", word_json(w)}, {"count", to_json(c)}});
  out["repeated_terms"] = repeated;
  Json sc = Json::array();
  for (const auto& s : r.structure_constants)
    sc.push_back({{"lambda", to_json(s.lambda)},
                  {"mu", to_json(s.mu)},
                  {"nu", to_json(s.nu)},
                  {"value", to_json(s.value)}});
  out["structure_constants"] = sc;
  out["structure_solvable"] = r.structure_solvable;
  out["structure_integral"] = r.structure_integral;
  out["structure_nonnegative"] = r.structure_nonnegative;
  out["passed"] = r.passed();
  return out;
}

}  // namespace affstan::json_io
