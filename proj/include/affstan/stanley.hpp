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

#include <string>
#include <utility>
#include <vector>

#include "affstan/affine_permutation.hpp"
#include "affstan/permutation.hpp"
#include "affstan/symfunc.hpp"

namespace affstan {

enum class StanleyMethod { original, decreasing, quasisym };

std::string to_string(StanleyMethod m);
StanleyMethod parse_stanley_method(const std::string& name);

// Coefficient of x^alpha in F_w: reduced words of w cut into consecutive
// strictly decreasing blocks of sizes alpha.
Integer stanley_coefficient_by_words(const Permutation& w,
                                     const Composition& alpha);
// The same coefficient counted over decreasing factorizations.
Integer stanley_coefficient(const Permutation& w, const Composition& alpha);
Integer affine_stanley_coefficient(const AffinePermutation& w,
                                   const Composition& alpha);

// sum of L_{Des(a)} over reduced words a of w^-1.
QuasiSymFunc stanley_quasisym(const Permutation& w);

// m-expansion of F_w. The quasisym method throws ContractViolation if its
// result is not symmetric.
SymFunc stanley(const Permutation& w,
                StanleyMethod method = StanleyMethod::decreasing);
SymFunc affine_stanley(const AffinePermutation& w);

// Compares the coefficient of every composition of l(w) with that of its
// sorted rearrangement. Returns the first asymmetric composition, if any.
std::optional<Composition> asymmetry_witness(const Permutation& w);
std::optional<Composition> asymmetry_witness(const AffinePermutation& w);

// s-expansion of F_w by counting EG-tableaux of w^-1 by shape.
SymFunc schur_expand(const Permutation& w);
// Expansion of the affine Stanley function in the affine Schur basis.
SymFunc affine_schur_expand(const AffinePermutation& w);

// Length-additive factorizations w = u v.
std::vector<std::pair<AffinePermutation, AffinePermutation>>
length_additive_factorizations(const AffinePermutation& w);

// Delta of F~_w against sum over w = u v of F~_u (x) F~_v.
bool coproduct_check(const AffinePermutation& w);

// Sum of F_u over the left transition side equals the sum over the right
// side plus the extra term.
bool transition_identity_check(const Permutation& w, int r);

}  // namespace affstan
