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

#include "affstan/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace affstan {

std::string to_string(const Word& w) {
  const bool digits =
      std::all_of(w.begin(), w.end(), [](int a) { return a >= 0 && a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated word list");
    s = s.substr(1, s.size() - 2);
  }
  Word w;
  if (s.empty()) return w;
  const bool commas = s.find(',') != std::string::npos;
  if (!commas) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("word letters must be digits: " +
                                    std::string(text));
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("malformed word letter '" + tok + "'");
    w.push_back(std::stoi(tok));
    pos = next + 1;
  }
  return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<int> descent_set(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

}  // namespace affstan
