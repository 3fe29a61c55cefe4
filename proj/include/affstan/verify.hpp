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
#include <vector>

namespace affstan {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// examples, symmetry, eg, transition, nilcoxeter, nilhecke, conjectures.
const std::vector<std::string>& suite_names();

// Runs a fixed manifest of checks; "all" runs every suite in order. An
// exception inside a check marks that check failed. Throws
// std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name);

}  // namespace affstan
