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

#include "c2t/lexicon.hpp"

#include <set>
#include <sstream>

#include "c2t/error.hpp"

namespace c2t {

namespace {

const std::set<std::string, std::less<>> kPos = {
    "noun", "adj", "verb", "det", "prep", "adv", "num", "conj", "pron"};

// Splits on whitespace; single or double quotes group (quotes removed).
std::vector<std::string> tokenize(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : s) {
    if (quote != 0) {
      if (c == quote) {
        quote = 0;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_token = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      if (in_token) out.push_back(std::move(cur));
      cur.clear();
      in_token = false;
    } else {
      cur.push_back(c);
      in_token = true;
    }
  }
  if (quote != 0) throw SyntaxError(line, "unterminated quote");
  if (in_token) out.push_back(std::move(cur));
  return out;
}

char gender_letter(FeatValue g) {
  switch (g) {
    case FeatValue::kFem: return 'f';
    case FeatValue::kNeut: return 'n';
    default: return 'm';
  }
}

std::string number_key(FeatValue n) {
  return n == FeatValue::kPlural ? "pl" : "sg";
}

}  // namespace

std::optional<Tense> tense_from(std::string_view s) {
  if (s == "present") return Tense::kPresent;
  if (s == "present_perfect") return Tense::kPresentPerfect;
  if (s == "past") return Tense::kPast;
  return std::nullopt;
}

Lexicon Lexicon::load(std::string_view text, std::string lang) {
  Lexicon lex(std::move(lang));
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto bar = line.find('|');
    auto head = tokenize(std::string_view(line).substr(0, bar), lineno);
    if (head.size() != 2)
      throw SyntaxError(lineno, "expected '<pos> <lexeme> | key=form ...'");
    if (!kPos.contains(head[0]))
      throw SyntaxError(lineno, "unknown part of speech '" + head[0] + "'");
    LexEntry e;
    e.pos = head[0];
    e.lexeme = head[1];
    if (bar != std::string::npos) {
      for (auto& tok :
           tokenize(std::string_view(line).substr(bar + 1), lineno)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
          if (tok == "regular") {
            e.regular = true;
            continue;
          }
          throw SyntaxError(lineno, "expected key=form, got '" + tok + "'");
        }
        std::string key = tok.substr(0, eq);
        std::string value = tok.substr(eq + 1);
        if (key.empty() || value.empty())
          throw SyntaxError(lineno, "empty key or form in '" + tok + "'");
        if (key == "aux") {
          e.verb_aux = value;
        } else if (key == "g") {
          auto g = feat_value_from(value);
          if (!g || !is_gender(*g))
            throw SyntaxError(lineno, "bad gender '" + value + "'");
          e.gender = g;
        } else {
          e.forms[key] = value;
        }
      }
    }
    if (!e.forms.contains("base")) e.forms["base"] = e.lexeme;
    try {
      lex.add(std::move(e));
    } catch (const DuplicateEntry& d) {
      throw DuplicateEntry(std::string(d.what()) + " (line " +
                           std::to_string(lineno) + ")");
    }
  }
  return lex;
}

void Lexicon::add(LexEntry e) {
  auto key = std::make_pair(e.lexeme, e.pos);
  if (entries_.contains(key))
    throw DuplicateEntry(e.lexeme + "/" + e.pos);
  if (!e.forms.contains("base")) e.forms["base"] = e.lexeme;
  entries_.emplace(std::move(key), std::move(e));
}

const LexEntry* Lexicon::find(std::string_view lexeme,
                              std::string_view pos) const {
  auto it = entries_.find(std::make_pair(std::string(lexeme), std::string(pos)));
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::at(std::string_view lexeme, std::string_view pos) const {
  const LexEntry* e = find(lexeme, pos);
  if (e == nullptr)
    throw MissingLexeme(std::string(lexeme) + "/" + std::string(pos) +
                        (lang_.empty() ? "" : " in " + lang_));
  return *e;
}

std::string Lexicon::inflect(std::string_view lexeme, std::string_view pos,
                             const InflectFeatures& f) const {
  const LexEntry& e = at(lexeme, pos);
  std::string nkey = number_key(f.number);
  std::optional<FeatValue> gender = f.gender ? f.gender : e.gender;
  if (gender) {
    auto it = e.forms.find(gender_letter(*gender) + nkey);
    if (it != e.forms.end()) return it->second;
  }
  if (auto it = e.forms.find(nkey); it != e.forms.end()) return it->second;
  if (f.number == FeatValue::kSingular) return e.base();
  // Plural without a listed form.
  if (e.pos == "noun") {
    if (e.regular) return e.base() + "s";
    throw MissingForm(std::string(lexeme) + "/" + e.pos + " pl");
  }
  return e.base();
}

std::string Lexicon::participle(const LexEntry& e, FeatValue number,
                                std::optional<FeatValue> gender,
                                bool agree) const {
  auto pp = e.forms.find("pp");
  if (!agree) {
    if (pp == e.forms.end()) throw MissingForm(e.lexeme + "/verb pp");
    return pp->second;
  }
  FeatValue g = gender.value_or(FeatValue::kMasc);
  std::string key = "pp_" + std::string(1, gender_letter(g)) + number_key(number);
  if (auto it = e.forms.find(key); it != e.forms.end()) return it->second;
  if (pp == e.forms.end() || pp->second.empty() || pp->second.back() != 'o')
    throw MissingForm(e.lexeme + "/verb " + key);
  std::string stem = pp->second.substr(0, pp->second.size() - 1);
  bool fem = g == FeatValue::kFem;
  if (number == FeatValue::kPlural) return stem + (fem ? "e" : "i");
  return stem + (fem ? "a" : "o");
}

std::vector<std::string> Lexicon::conjugate(std::string_view verb, Tense tense,
                                            FeatValue number,
                                            std::optional<FeatValue> gender) const {
  const LexEntry& e = at(verb, "verb");
  std::string nkey = number_key(number);
  auto finite = [&](const LexEntry& v, const std::string& prefix) {
    auto it = v.forms.find(prefix + "3" + nkey);
    if (it != v.forms.end()) return it->second;
    it = v.forms.find(prefix);
    if (it != v.forms.end()) return it->second;
    throw MissingForm(v.lexeme + "/verb " + prefix + "3" + nkey);
  };
  switch (tense) {
    case Tense::kPresent:
      return {finite(e, "pres")};
    case Tense::kPast:
      return {finite(e, "past")};
    case Tense::kPresentPerfect: {
      std::string aux_name =
          e.verb_aux.value_or(lang_ == "it" ? "avere" : "have");
      const LexEntry& aux = at(aux_name, "verb");
      bool agree = aux_name == "essere";
      return {finite(aux, "pres"), participle(e, number, gender, agree)};
    }
  }
  return {};
}

}  // namespace c2t
