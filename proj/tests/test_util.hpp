// Copyright 2026 The Concept2Text Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the test binaries.

#ifndef C2T_TESTS_TEST_UTIL_HPP_
#define C2T_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "c2t/knowledge.hpp"
#include "c2t/packs.hpp"
#include "c2t/term.hpp"

#ifndef C2T_SOURCE_DIR
#define C2T_SOURCE_DIR "."
#endif

namespace c2t::testing {

inline std::filesystem::path source_path(const std::string& rel) {
  return std::filesystem::path(C2T_SOURCE_DIR) / rel;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Tree load_concept(const std::string& rel) {
  return parse_concept(read_file(source_path(rel)));
}

inline KnowledgeBase bundled_kb() {
  return KnowledgeBase::load(read_file(source_path("data/kb.facts")));
}

inline LanguagePack bundled_pack(const std::string& lang) {
  return load_pack(source_path("packs/" + lang));
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Random concept trees for round-trip properties. Symbols, integers,
// decimals with short binary fractions, quoted text and nested arguments.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  Tree tree(int depth) {
    Tree t(term_(2));
    if (depth > 0) {
      int n = pick(0, 3);
      for (int i = 0; i < n; ++i) t.children.push_back(tree(depth - 1));
    }
    return t;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string symbol() {
    static const std::vector<std::string> names = {
        "class", "rel", "attribute", "range", "uom", "number", "year", "x", "a_b", "info"};
    return names[static_cast<std::size_t>(pick(0, static_cast<int>(names.size()) - 1))];
  }

  std::string text() {
    static const std::vector<std::string> texts = {
        "explainable AI", "it's", "a \"quoted\" word", "", "back\\slash", "Dallas"};
    return texts[static_cast<std::size_t>(pick(0, static_cast<int>(texts.size()) - 1))];
  }

  Arg arg(int depth) {
    switch (pick(0, depth > 0 ? 4 : 3)) {
      case 0: return Arg(atom(symbol()));
      case 1: return Arg(static_cast<std::int64_t>(pick(-5000, 5000)));
      case 2: return Arg(static_cast<double>(pick(-400, 400)) / 8.0 + 0.125);
      case 3: return Arg(Text{text()});
      default: return Arg(term_(depth - 1));
    }
  }

  Term term_(int depth) {
    Term t(symbol());
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) t.args.push_back(arg(depth));
    return t;
  }

  std::mt19937_64 rng_;
};

}  // namespace c2t::testing

#endif  // C2T_TESTS_TEST_UTIL_HPP_
