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

// Language packs: rule sets, order constraints, pair rules, lexicon and
// markup for one output language.
//
// A pack directory holds a `manifest` and the resource files below. A file
// missing from the pack directory is looked up in the shared directory
// named by the manifest, which is how the language-independent stages are
// shared between languages.
//
//   manifest           lang <code> / shared <dir> / markup <key> <open> <close>
//   rules.equiv        equiv_concept       (shared)
//   rules.structure    concept2structure   (shared)
//   rules.grammar      structure2grammar
//   rules.coord        coordination        (shared)
//   rules.inflect      inflection
//   rules.syntax       syntax tree rules   (optional)
//   order.constraints  word-order constraints
//   pairs.syntax       adjacent-word rules
//   lexicon.tsv        lexicon

#ifndef C2T_PACKS_HPP_
#define C2T_PACKS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "c2t/knowledge.hpp"
#include "c2t/lexicon.hpp"
#include "c2t/rule.hpp"
#include "c2t/surface.hpp"
#include "c2t/word_order.hpp"

namespace c2t {

struct LanguagePack {
  std::string lang;
  std::filesystem::path dir;
  // All stages, in stage order then file order.
  std::vector<Rule> rules;
  std::vector<OrderConstraint> order;
  PairRuleSet pairs;
  Lexicon lexicon;
  MarkupConfig markup;

  std::vector<Rule> rules_for(Stage s) const;
  std::size_t count(Stage s) const;
};

// Throws MissingResource, SyntaxError (with file and line) and
// RuleValidation.
LanguagePack load_pack(const std::filesystem::path& dir);

struct PackIssue {
  enum class Kind { kMissingLexeme, kSelfMatch, kDuplicateName, kOrderCycle };
  Kind kind;
  std::string rule;  // rule or constraint name(s)
  std::string message;

  // Self-matching rules are warnings; everything else is an error.
  bool is_error() const { return kind != Kind::kSelfMatch; }
};

std::string_view to_string(PackIssue::Kind k);

struct PackReport {
  std::vector<PackIssue> issues;

  bool empty() const { return issues.empty(); }
  bool has_errors() const;
  std::size_t count(PackIssue::Kind k) const;
};

PackReport validate_pack(const LanguagePack& pack, const KnowledgeBase& kb);

// Rules-only check shared by validate_pack and tests.
bool rule_rematches_itself(const Rule& r, const KnowledgeBase& kb);

}  // namespace c2t

#endif  // C2T_PACKS_HPP_
