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

// affstan command-line frontend. Exit status: 0 on success, 1 when a
// verification or internal consistency check fails, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "affstan/affstan.h"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int exit_code(affstan_status s) {
  switch (s) {
    case AFFSTAN_OK:
      return kOk;
    case AFFSTAN_ERR_CONTRACT:
    case AFFSTAN_ERR_INTERNAL:
      return kFailed;
    default:
      return kUsage;
  }
}

int cap_from_env(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(name) + " must be an integer, got \"" + v + "\"");
  }
}

// Defaults, then the config file, then environment overrides.
affstan_caps load_caps() {
  affstan_caps caps{5, 4, 8};
  const char* env_path = std::getenv("AFFSTAN_CONFIG");
  const std::string path = env_path && *env_path ? env_path : AFFSTAN_DEFAULT_CONFIG;
  std::ifstream in(path);
  if (in) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    caps.max_rank_finite = j.value("max_rank_finite", caps.max_rank_finite);
    caps.max_rank_affine = j.value("max_rank_affine", caps.max_rank_affine);
    caps.max_degree = j.value("max_degree", caps.max_degree);
  } else if (env_path && *env_path) {
    throw std::runtime_error("cannot open config file " + path);
  }
  caps.max_rank_finite = cap_from_env("AFFSTAN_MAX_RANK_FINITE", caps.max_rank_finite);
  caps.max_rank_affine = cap_from_env("AFFSTAN_MAX_RANK_AFFINE", caps.max_rank_affine);
  caps.max_degree = cap_from_env("AFFSTAN_MAX_DEGREE", caps.max_degree);
  return caps;
}

struct Output {
  std::string format = "text";

  // Prints v, or the error for status s; returns the exit code.
  int emit(affstan_status s, affstan_value* v) const {
    if (s != AFFSTAN_OK) {
      std::cerr << "error: " << affstan_last_error() << "\n";
      return exit_code(s);
    }
    char* text = format == "json" ? affstan_value_json(v) : affstan_value_text(v);
    std::string_view shown(text);
    std::cout << shown;
    if (shown.empty() || shown.back() != '\n') std::cout << "\n";
    affstan_string_free(text);
    affstan_value_free(v);
    return kOk;
  }
};

int with_perm(const std::string& text, const Output& out,
              const std::function<affstan_status(const affstan_perm*, affstan_value**)>& f) {
  affstan_perm* w = nullptr;
  if (const auto s = affstan_perm_parse(text.c_str(), &w); s != AFFSTAN_OK)
    return out.emit(s, nullptr);
  affstan_value* v = nullptr;
  const auto s = f(w, &v);
  affstan_perm_free(w);
  return out.emit(s, v);
}

int with_affperm(int n, const std::string& text, const std::string& as, const Output& out,
                 const std::function<affstan_status(const affstan_affperm*, affstan_value**)>& f) {
  affstan_affperm* w = nullptr;
  const auto parsed =
      affstan_affperm_parse(n, text.c_str(), as.empty() ? nullptr : as.c_str(), &w);
  if (parsed != AFFSTAN_OK) return out.emit(parsed, nullptr);
  affstan_value* v = nullptr;
  const auto s = f(w, &v);
  affstan_affperm_free(w);
  return out.emit(s, v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley symmetric functions and nilCoxeter/nilHecke computations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", affstan_version());

  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string perm, word, partition, suite, as, method = "decreasing";
  int n = 0, mark = 0;
  std::function<int()> action;

  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function in the m basis");
  stanley->add_option("perm", perm, "Permutation in one-line notation")->required();
  stanley->add_option("--method", method, "original, decreasing or quasisym")
      ->check(CLI::IsMember({"original", "decreasing", "quasisym"}));
  stanley->callback([&] {
    action = [&] {
      return with_perm(perm, out, [&](auto* w, auto** v) {
        return affstan_stanley(w, method.c_str(), v);
      });
    };
  });

  auto* schur = app.add_subcommand("schur-expand", "Stanley symmetric function in the Schur basis");
  schur->add_option("perm", perm, "Permutation in one-line notation")->required();
  schur->callback([&] { action = [&] { return with_perm(perm, out, affstan_schur_expand); }; });

  auto* words = app.add_subcommand("reduced-words", "Reduced words of a permutation");
  words->add_option("perm", perm, "Permutation, or affine element with -n")->required();
  words->add_option("-n", n, "Rank of the affine symmetric group");
  words->add_option("--as", as, "Affine input kind")->check(CLI::IsMember({"word", "window"}));
  words->callback([&] {
    action = [&] {
      if (n > 0) return with_affperm(n, perm, as, out, affstan_affine_reduced_words);
      return with_perm(perm, out, affstan_reduced_words);
    };
  });

  auto* affine = app.add_subcommand("affine-stanley", "Affine Stanley symmetric function");
  affine->add_option("-n", n, "Rank")->required();
  affine->add_option("element", perm, "Generator word or window")->required();
  affine->add_option("--as", as, "Input kind")->check(CLI::IsMember({"word", "window"}));
  affine->callback([&] {
    action = [&] { return with_affperm(n, perm, as, out, affstan_affine_stanley); };
  });

  auto* affine_schur =
      app.add_subcommand("affine-schur-expand", "Affine Stanley function in the affine Schur basis");
  affine_schur->add_option("-n", n, "Rank")->required();
  affine_schur->add_option("element", perm, "Generator word or window")->required();
  affine_schur->add_option("--as", as, "Input kind")->check(CLI::IsMember({"word", "window"}));
  affine_schur->callback([&] {
    action = [&] { return with_affperm(n, perm, as, out, affstan_affine_schur_expand); };
  });

  auto* eg = app.add_subcommand("eg-insert", "Edelman-Greene insertion of a reduced word");
  eg->add_option("word", word, "Reduced word")->required();
  eg->callback([&] {
    action = [&] {
      affstan_value* v = nullptr;
      const auto s = affstan_eg_insert(word.c_str(), &v);
      return out.emit(s, v);
    };
  });

  auto* little = app.add_subcommand("little-move", "Little move of a marked reduced word");
  little->add_option("word", word, "Reduced word")->required();
  little->add_option("mark", mark, "1-based position of the marked letter")->required();
  little->callback([&] {
    action = [&] {
      affstan_value* v = nullptr;
      const auto s = affstan_little_move(word.c_str(), mark, &v);
      return out.emit(s, v);
    };
  });

  auto* kschur = app.add_subcommand("kschur", "k-Schur function and its nilCoxeter image");
  kschur->add_option("-n", n, "Rank")->required();
  kschur->add_option("partition", partition, "Partition, e.g. 221 or 2,2,1")->required();
  kschur->callback([&] {
    action = [&] {
      affstan_value* v = nullptr;
      const auto s = affstan_kschur(n, partition.c_str(), &v);
      return out.emit(s, v);
    };
  });

  auto* jbasis = app.add_subcommand("jbasis", "Constant-term j-basis element and its finite projection");
  jbasis->add_option("-n", n, "Rank")->required();
  jbasis->add_option("partition", partition, "Partition, e.g. 221 or 2,2,1")->required();
  jbasis->callback([&] {
    action = [&] {
      affstan_value* v = nullptr;
      const auto s = affstan_jbasis(n, partition.c_str(), &v);
      return out.emit(s, v);
    };
  });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"examples", "symmetry", "eg", "transition", "nilcoxeter",
                             "nilhecke", "conjectures", "all"}));
  verify->callback([&] {
    action = [&] {
      affstan_value* v = nullptr;
      int passed = 0;
      const auto s = affstan_verify(suite.c_str(), &v, &passed);
      const int code = out.emit(s, v);
      return code == kOk && !passed ? kFailed : code;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const affstan_caps caps = load_caps();
    affstan_set_caps(&caps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return action();
}
