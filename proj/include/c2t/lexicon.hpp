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

// Lexeme dictionary with table-driven inflection.
//
// File format, one entry per line:
//
//   noun publication | pl=publications
//   noun pubblicazione | g=fem pl=pubblicazioni
//   verb aumentare | pres3sg=aumenta pres3pl=aumentano pp=aumentato aux=essere
//   adj stabile | pl=stabili
//
// The base form defaults to the lexeme. Form keys: sg, pl and their
// gender-prefixed variants (msg, fsg, mpl, fpl), pres3sg, pres3pl, past3sg,
// past3pl, pp and pp_<g><n>. Flags: g=<gender>, aux=<verb>, regular.
// Values containing spaces are written in double quotes.

#ifndef C2T_LEXICON_HPP_
#define C2T_LEXICON_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2t/features.hpp"

namespace c2t {

enum class Tense { kPresent, kPresentPerfect, kPast };

std::optional<Tense> tense_from(std::string_view s);

struct LexEntry {
  std::string lexeme;
  std::string pos;
  std::map<std::string, std::string> forms;  // always contains "base"
  std::optional<std::string> verb_aux;
  std::optional<FeatValue> gender;
  bool regular = false;

  const std::string& base() const { return forms.at("base"); }
};

struct InflectFeatures {
  FeatValue number = FeatValue::kSingular;
  std::optional<FeatValue> gender;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string lang) : lang_(std::move(lang)) {}

  // Throws SyntaxError (position = line) and DuplicateEntry.
  static Lexicon load(std::string_view text, std::string lang = "");

  void add(LexEntry e);
  const LexEntry* find(std::string_view lexeme, std::string_view pos) const;
  const LexEntry& at(std::string_view lexeme, std::string_view pos) const;

  const std::string& lang() const { return lang_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::pair<std::string, std::string>, LexEntry>& entries() const {
    return entries_;
  }

  // Throws MissingLexeme / MissingForm.
  std::string inflect(std::string_view lexeme, std::string_view pos,
                      const InflectFeatures& f) const;

  // Third-person verb group, auxiliaries first.
  std::vector<std::string> conjugate(std::string_view verb, Tense tense,
                                     FeatValue number,
                                     std::optional<FeatValue> gender) const;

 private:
  std::string participle(const LexEntry& e, FeatValue number,
                         std::optional<FeatValue> gender, bool agree) const;

  std::string lang_;
  std::map<std::pair<std::string, std::string>, LexEntry> entries_;
};

inline Lexicon load_lexicon(std::string_view text, std::string lang = "") {
  return Lexicon::load(text, std::move(lang));
}

}  // namespace c2t

#endif  // C2T_LEXICON_HPP_
