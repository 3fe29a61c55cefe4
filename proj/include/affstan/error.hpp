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

#include <stdexcept>
#include <string>

namespace affstan {

// Thrown when a result contradicts a property the theory guarantees
// (e.g. two independent algorithms disagree, or a traversal that must
// terminate does not). Input validation uses std::invalid_argument and
// membership failures use std::domain_error.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error("contract violation: " + what) {}
};

}  // namespace affstan
