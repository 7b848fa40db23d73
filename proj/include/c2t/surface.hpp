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

// Final syntax stage: tree flattening, adjacent-word rewriting and
// sentence finalization.
//
// Pair-rule file lines:
//
//   pair a_an: "a" @vowel => "an" "$2"
//   pair dagli: "da" "gli" => "dagli"
//   pair i_gli: "i" "st*" => "gli" "$2"
//   except @vowel: hour honest
//   except @consonant: university one
//
// `$1` / `$2` in an output copy the matched left / right word.

#ifndef C2T_SURFACE_HPP_
#define C2T_SURFACE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "c2t/term.hpp"

namespace c2t {

struct Token {
  std::string text;
  std::string pos;
  // Markup keys opened before this token, outermost first.
  std::vector<std::string> opens;
  // Number of spans closed right after this token.
  std::size_t closes = 0;

  bool operator==(const Token&) const = default;
};

using WordSeq = std::vector<Token>;

WordSeq make_words(const std::vector<std::string>& words);
std::vector<std::string> texts(const WordSeq& w);

// Markup keys: `sub=<info subtype>`, `span=<tag>` for span(Tag) nodes and
// `pos=<tag>` for single words.
struct MarkupConfig {
  struct Tags {
    std::string open;
    std::string close;
  };
  std::map<std::string, Tags> tags;

  bool has(const std::string& key) const { return tags.contains(key); }
};

// DFS leaf sequence; leaves must be `word("text")` or `word("text",pos)`.
// Throws NonWordLeaf.
WordSeq flatten(const Tree& t, const MarkupConfig* markup = nullptr);

struct PairPattern {
  enum class Kind { kLiteral, kPrefix, kVowel, kConsonant, kAny };
  Kind kind = Kind::kLiteral;
  std::string literal;
};

struct PairRule {
  std::string name;
  PairPattern left;
  PairPattern right;
  std::vector<std::string> out;  // one or two words
};

struct PairRuleSet {
  std::vector<PairRule> rules;
  std::set<std::string> vowel_like;      // consonant letter, vowel sound
  std::set<std::string> consonant_like;  // vowel letter, consonant sound

  bool starts_with_vowel(std::string_view word) const;
  bool matches(const PairPattern& p, std::string_view word) const;
};

// Throws SyntaxError (position = line).
PairRuleSet load_pair_rules(std::string_view text);

struct PairStats {
  std::size_t scans = 0;
  std::size_t firings = 0;
  std::vector<std::string> fired;  // rule names in firing order
};

// Left-to-right scans until a scan fires nothing. Throws PairDivergence.
WordSeq apply_pair_rules(WordSeq w, const PairRuleSet& rules,
                         std::size_t cap = 100, PairStats* stats = nullptr);

enum class OutputFormat { kText, kHtml };

std::string finalize(const WordSeq& w, OutputFormat format = OutputFormat::kText,
                     const MarkupConfig* markup = nullptr);

}  // namespace c2t

#endif  // C2T_SURFACE_HPP_
