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

// Phrase annotations and agreement.
//
// Phrase nodes are labelled info(Type, Sub, Gender, Number) where the last
// two arguments are feature references. An agreement request is a leaf
// svc(agree(antecedent_np)) or svc(agree(subject_np)) placed under the
// phrase that must agree.

#ifndef C2T_COORDINATION_HPP_
#define C2T_COORDINATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "c2t/features.hpp"
#include "c2t/lexicon.hpp"
#include "c2t/rule.hpp"
#include "c2t/term.hpp"

namespace c2t {

struct InfoView {
  std::string phrase;
  std::string sub;
  std::optional<FeatRef> gender;
  std::optional<FeatRef> number;
};

// Decodes an info/4 label; nullopt for any other term.
std::optional<InfoView> read_info(const Term& label);
bool is_svc(const Term& label);

// Subject/verb agreement and service-node requests. Removes every svc
// node. Throws UnifyConflict and MissingAntecedent.
void resolve_coordination(TracedTree& t, FeatStore& s);
std::pair<Tree, FeatStore> resolve_coordination(const Tree& t, FeatStore s);

// Number defaults to singular; gender to neut for en and masc otherwise.
void default_features(std::string_view lang, const TracedTree& t, FeatStore& s);
FeatStore default_features(std::string_view lang, const Tree& t, FeatStore s);

// Resolves the gender of each noun phrase from the lexicon gender of its
// first head noun, written w(noun, Lexeme).
void seed_lexical_gender(const TracedTree& t, const Lexicon& lex, FeatStore& s);

}  // namespace c2t

#endif  // C2T_COORDINATION_HPP_
