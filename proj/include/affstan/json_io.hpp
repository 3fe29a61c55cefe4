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

#include "affstan/affine_permutation.hpp"
#include "affstan/integer.hpp"
#include "affstan/nilcoxeter.hpp"
#include "affstan/nilhecke.hpp"
#include "affstan/partition.hpp"
#include "affstan/permutation.hpp"
#include "affstan/polynomial.hpp"
#include "affstan/symfunc.hpp"
#include "affstan/tableau.hpp"
#include "json.hpp"

// JSON encodings. Integers that fit in 64 bits are numbers, larger ones are
// decimal strings; readers accept both. Readers throw std::invalid_argument
// on malformed documents.
//
//   Permutation         [w(1), ..., w(n)]
//   AffinePermutation   {"rank": n, "window": [...], "word": [...]}
//   Partition           [parts...]
//   SymFunc             {"basis": "m", "n": 0, "degree": d,
//                        "terms": [{"partition": [...], "coeff": c}]}
//   Tableau             [[row], ...]
//   MarkedWord          {"word": [...], "mark": a}
//   Polynomial          {"nvars": n, "terms": [{"exponents": [...], "coeff": c}]}
//   NilCoxeterElement   {"rank": n, "affine": b,
//                        "terms": [{"window": [...], "word": [...], "coeff": c}]}
//   NilHeckeElement     {"rank": n,
//                        "terms": [{"window": [...], "word": [...], "poly": Polynomial}]}
namespace affstan::json_io {

using Json = nlohmann::json;

Json to_json(const Integer& c);
Integer integer_from_json(const Json& j);

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

Json to_json(const AffinePermutation& w);
AffinePermutation affine_permutation_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const MarkedWord& m);
MarkedWord marked_word_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const NilCoxeterElement& a);
NilCoxeterElement nilcoxeter_from_json(const Json& j);

Json to_json(const NilHeckeElement& a);
NilHeckeElement nilhecke_from_json(const Json& j);

Json to_json(const FominStanleyReport& r);

}  // namespace affstan::json_io
