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

#include "affstan/affstan.h"

#include <cstring>
#include <string>

#include "affstan/error.hpp"
#include "affstan/json_io.hpp"
#include "affstan/nilcoxeter.hpp"
#include "affstan/nilhecke.hpp"
#include "affstan/stanley.hpp"
#include "affstan/verify.hpp"

struct affstan_perm {
  affstan::Permutation w;
};

struct affstan_affperm {
  affstan::AffinePermutation w;
};

struct affstan_value {
  nlohmann::json json;
  std::string text;
};

namespace {

using affstan::json_io::Json;
using affstan::json_io::to_json;

thread_local std::string last_error;
affstan_caps caps{0, 0, 0};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_cap(int value, int cap, const char* what) {
  if (cap > 0 && value > cap)
    throw CapExceeded(std::string(what) + " " + std::to_string(value) +
                      " exceeds the cap " + std::to_string(cap));
}

template <class F>
affstan_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return AFFSTAN_OK;
  } catch (const CapExceeded& e) {
    last_error = e.what();
    return AFFSTAN_ERR_CAP;
  } catch (const affstan::ContractViolation& e) {
    last_error = e.what();
    return AFFSTAN_ERR_CONTRACT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return AFFSTAN_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return AFFSTAN_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return AFFSTAN_ERR_INVALID;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return AFFSTAN_ERR_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AFFSTAN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return AFFSTAN_ERR_INTERNAL;
  }
}

affstan_status null_error() {
  last_error = "null argument";
  return AFFSTAN_ERR_NULL;
}

// Signed integer list: "[a,b,...]" or "a,b,...".
std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  const Json j = Json::parse(s);
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("window entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

affstan::Partition parse_partition(const char* text) {
  auto parts = affstan::parse_word(text);
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing: " + std::string(text));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return affstan::Partition(parts);
}

void check_finite(const affstan::Permutation& w) {
  check_cap(w.rank(), caps.max_rank_finite, "rank");
}

void check_affine(const affstan::AffinePermutation& w) {
  check_cap(w.rank(), caps.max_rank_affine, "rank");
  check_cap(w.length(), caps.max_degree, "length");
}

affstan_value* symfunc_value(const affstan::SymFunc& f) {
  return new affstan_value{to_json(f), to_string(f)};
}

affstan_value* words_value(const std::vector<affstan::Word>& words) {
  auto* v = new affstan_value{Json::array(), ""};
  for (const auto& w : words) {
    v->json.push_back(w);
    v->text += affstan::to_string(w) + "\n";
  }
  return v;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* affstan_version(void) { return "0.1.0"; }

const char* affstan_last_error(void) { return last_error.c_str(); }

void affstan_set_caps(const affstan_caps* c) {
  if (c) caps = *c;
}

void affstan_get_caps(affstan_caps* c) {
  if (c) *c = caps;
}

affstan_status affstan_perm_parse(const char* text, affstan_perm** out) {
  if (!text || !out) return null_error();
  return guard([&] {
    auto w = affstan::parse_permutation(text);
    if (w.rank() == 0) throw std::invalid_argument("permutation must have at least one entry");
    *out = new affstan_perm{std::move(w)};
  });
}

void affstan_perm_free(affstan_perm* w) { delete w; }

int affstan_perm_rank(const affstan_perm* w) { return w ? w->w.rank() : -1; }

int affstan_perm_length(const affstan_perm* w) { return w ? w->w.length() : -1; }

affstan_status affstan_affperm_parse(int n, const char* text, const char* as,
                                     affstan_affperm** out) {
  if (!text || !out) return null_error();
  return guard([&] {
    std::string mode = as ? as : "";
    if (mode.empty()) mode = text[0] == '[' ? "window" : "word";
    if (mode == "window") {
      affstan::AffinePermutation w(parse_int_list(text));
      if (n > 0 && w.rank() != n)
        throw std::invalid_argument("window has " + std::to_string(w.rank()) +
                                    " entries but the rank is " + std::to_string(n));
      *out = new affstan_affperm{w};
    } else if (mode == "word") {
      const auto word = affstan::parse_word(text);
      for (int a : word)
        if (a >= n)
          throw std::invalid_argument("generator " + std::to_string(a) +
                                      " is not a residue mod " + std::to_string(n));
      const auto w = affstan::affine_reduced_product(n, word);
      if (!w) throw std::invalid_argument("word " + affstan::to_string(word) + " is not reduced");
      *out = new affstan_affperm{*w};
    } else {
      throw std::invalid_argument("unknown input kind \"" + mode + "\"; use word or window");
    }
  });
}

void affstan_affperm_free(affstan_affperm* w) { delete w; }

int affstan_affperm_rank(const affstan_affperm* w) { return w ? w->w.rank() : -1; }

int affstan_affperm_length(const affstan_affperm* w) { return w ? w->w.length() : -1; }

affstan_status affstan_stanley(const affstan_perm* w, const char* method, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_finite(w->w);
    const auto m = method ? affstan::parse_stanley_method(method)
                          : affstan::StanleyMethod::decreasing;
    *out = symfunc_value(affstan::stanley(w->w, m));
  });
}

affstan_status affstan_schur_expand(const affstan_perm* w, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_finite(w->w);
    *out = symfunc_value(affstan::schur_expand(w->w));
  });
}

affstan_status affstan_reduced_words(const affstan_perm* w, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_finite(w->w);
    *out = words_value(affstan::reduced_words(w->w));
  });
}

affstan_status affstan_affine_stanley(const affstan_affperm* w, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_affine(w->w);
    *out = symfunc_value(affstan::affine_stanley(w->w));
  });
}

affstan_status affstan_affine_schur_expand(const affstan_affperm* w, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_affine(w->w);
    *out = symfunc_value(affstan::affine_schur_expand(w->w));
  });
}

affstan_status affstan_affine_reduced_words(const affstan_affperm* w, affstan_value** out) {
  if (!w || !out) return null_error();
  return guard([&] {
    check_affine(w->w);
    *out = words_value(affstan::reduced_words(w->w));
  });
}

affstan_status affstan_eg_insert(const char* word, affstan_value** out) {
  if (!word || !out) return null_error();
  return guard([&] {
    const auto w = affstan::parse_word(word);
    int rank = 1;
    for (int a : w) rank = std::max(rank, a + 1);
    check_cap(rank, caps.max_rank_finite, "rank");
    const auto r = affstan::eg_insert(w);
    *out = new affstan_value{{{"P", to_json(r.p)}, {"Q", to_json(r.q)}},
                             "P:\n" + to_string(r.p) + "Q:\n" + to_string(r.q)};
  });
}

affstan_status affstan_little_move(const char* word, int mark, affstan_value** out) {
  if (!word || !out) return null_error();
  return guard([&] {
    const affstan::MarkedWord m{affstan::parse_word(word), mark};
    const auto path = affstan::little_path(m);
    Json steps = Json::array();
    std::string text;
    for (const auto& s : path) {
      steps.push_back(to_json(s));
      text += to_string(s) + "\n";
    }
    const auto moved = affstan::little_move(m);
    text += "result: " + to_string(moved) + "\n";
    *out = new affstan_value{{{"path", steps}, {"result", to_json(moved)}}, text};
  });
}

affstan_status affstan_kschur(int n, const char* partition, affstan_value** out) {
  if (!partition || !out) return null_error();
  return guard([&] {
    check_cap(n, caps.max_rank_affine, "rank");
    const auto lam = parse_partition(partition);
    check_cap(lam.size(), caps.max_degree, "degree");
    const auto f = affstan::k_schur(n, lam);
    const auto a = affstan::noncommutative_schur(n, lam, true);
    *out = new affstan_value{{{"kschur", to_json(f)}, {"nilcoxeter", to_json(a)}},
                             "s = " + to_string(f) + "\nA = " + to_string(a) + "\n"};
  });
}

affstan_status affstan_jbasis(int n, const char* partition, affstan_value** out) {
  if (!partition || !out) return null_error();
  return guard([&] {
    check_cap(n, caps.max_rank_affine, "rank");
    const auto lam = parse_partition(partition);
    check_cap(lam.size(), caps.max_degree, "degree");
    const auto w = affstan::grassmannian_from_partition(n, lam);
    const auto j = affstan::j_basis_element(n, w);
    const auto k = affstan::kappa(j);
    *out = new affstan_value{
        {{"grassmannian", to_json(w)}, {"j", to_json(j)}, {"kappa", to_json(k)}},
        "w = " + to_string(w) + "\nj = " + to_string(j) + "\nkappa = " + to_string(k) + "\n"};
  });
}

affstan_status affstan_verify(const char* suite, affstan_value** out, int* passed) {
  if (!suite || !out || !passed) return null_error();
  return guard([&] {
    const auto report = affstan::run_suite(suite);
    Json checks = Json::array();
    std::string text;
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      text += (c.passed ? "PASS " : "FAIL ") + c.name;
      if (!c.passed) text += ": " + c.detail;
      text += "\n";
    }
    *passed = report.passed() ? 1 : 0;
    *out = new affstan_value{
        {{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}}, text};
  });
}

char* affstan_value_json(const affstan_value* v) {
  if (!v) return nullptr;
  return copy_string(v->json.dump(2));
}

char* affstan_value_text(const affstan_value* v) {
  if (!v) return nullptr;
  return copy_string(v->text);
}

void affstan_value_free(affstan_value* v) { delete v; }

void affstan_string_free(char* s) { delete[] s; }

}  // extern "C"
