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

#include <optional>
#include <string>
#include <vector>

#include "affstan/partition.hpp"
#include "affstan/permutation.hpp"
#include "affstan/word.hpp"

namespace affstan {

// Rows listed top to bottom (English notation); row lengths must weakly
// decrease.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int at(int row, int col) const { return rows_[row][col]; }

  // Rows read left to right, bottom row first.
  Word reading_word() const;

  bool is_row_strict() const;
  bool is_column_strict() const;
  bool is_semistandard() const;
  bool is_standard() const;

  // For a standard tableau: {i : i+1 lies in a lower row than i}.
  std::vector<int> descent_set() const;

  // Appends value at the end of row r (r may equal the number of rows).
  void append(std::size_t r, int value);

  auto operator<=>(const Tableau&) const = default;
  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// One row per line, entries separated by spaces.
std::string to_string(const Tableau& t);

std::vector<Tableau> standard_tableaux(const Partition& shape);

struct EGResult {
  Tableau p;
  Tableau q;
};

// Edelman-Greene insertion of a reduced word. Throws std::invalid_argument
// if the word is not reduced.
EGResult eg_insert(const Word& word);

// Words obtained from w by a single Coxeter-Knuth relation.
std::vector<Word> coxeter_knuth_neighbors(const Word& w);

// Equivalence classes of R(w) under the Coxeter-Knuth relations; each class
// sorted, classes ordered by their first word.
std::vector<std::vector<Word>> coxeter_knuth_classes(const Permutation& w);

struct MarkedWord {
  Word word;
  int mark = 1;  // 1-based position

  auto operator<=>(const MarkedWord&) const = default;
  bool operator==(const MarkedWord&) const = default;
};

std::string to_string(const MarkedWord& m);

// Single edge of the Little graph. The input must be nearly reduced.
MarkedWord little_step(const MarkedWord& m);

// Vertices visited by the forward Little move, starting with m and ending
// at the first marked reduced word after it. m must be reduced with a
// reduced deletion at its mark. Throws ContractViolation if the re-marking
// is not unique or the traversal exceeds its cap.
std::vector<MarkedWord> little_path(const MarkedWord& m);

// True if some edge of the path decremented a 1 and shifted every letter.
bool path_shifts(const std::vector<MarkedWord>& path);

// Forward Little move of a marked reduced word.
MarkedWord little_move(const MarkedWord& m);

// Preimages of m under the forward Little move, found by walking the
// Little graph backwards, with the shift flag of each forward path.
std::vector<std::pair<MarkedWord, bool>> little_move_preimages(
    const MarkedWord& m);

// The preimage whose forward path shifts exactly when shifted is set.
// Throws ContractViolation if two preimages share a shift flag.
std::optional<MarkedWord> little_move_inverse(const MarkedWord& m,
                                              bool shifted);

// The marked-word endpoint's underlying word with the mark deleted.
Word unmarked(const MarkedWord& m);

struct TransitionSides {
  std::vector<Permutation> left;   // w (r,s), s > r, covering w
  std::vector<Permutation> right;  // w (s',r), s' < r, covering w
  std::optional<Permutation> extra;  // (1 x w)(1, r+1) when it covers
};

// All permutations are returned in S_{n+1}, where n = w.rank().
// Throws std::invalid_argument unless 1 <= r <= n.
TransitionSides transition_sides(const Permutation& w, int r);

// Whether the forward Little move maps the marked reduced words of the left
// side (deleting to a word of w) bijectively onto those of the right side
// and of the extra term (deleting to a word of 1 x w).
bool little_bijection_check(const Permutation& w, int r);

}  // namespace affstan
