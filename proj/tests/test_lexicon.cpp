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

#include <gtest/gtest.h>

#include <set>

#include "c2t/error.hpp"
#include "c2t/lexicon.hpp"
#include "test_util.hpp"

namespace c2t {
namespace {

using V = std::vector<std::string>;

const Lexicon& en() {
  static const Lexicon lex = testing::bundled_pack("en").lexicon;
  return lex;
}

const Lexicon& it() {
  static const Lexicon lex = testing::bundled_pack("it").lexicon;
  return lex;
}

TEST(LoadLexicon, TwoForms) {
  auto lex = Lexicon::load("noun publication | sg=publication pl=publications", "en");
  const LexEntry& e = lex.at("publication", "noun");
  EXPECT_EQ(e.forms.at("sg"), "publication");
  EXPECT_EQ(e.forms.at("pl"), "publications");
  EXPECT_EQ(e.base(), "publication");
}

TEST(LoadLexicon, EmptyText) {
  EXPECT_EQ(Lexicon::load("").size(), 0u);
}

TEST(LoadLexicon, Duplicate) {
  EXPECT_THROW(Lexicon::load("noun a\nnoun a | pl=as"), DuplicateEntry);
  EXPECT_NO_THROW(Lexicon::load("noun a\nadj a"));
}

TEST(LoadLexicon, SyntaxErrors) {
  try {
    Lexicon::load("noun a\nnoun\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(Lexicon::load("art the"), SyntaxError);
  EXPECT_THROW(Lexicon::load("noun a | g=plural"), SyntaxError);
  EXPECT_THROW(Lexicon::load("noun a | pl="), SyntaxError);
  EXPECT_THROW(Lexicon::load("noun a | base=\"open"), SyntaxError);
}

TEST(LoadLexicon, QuotedMultiwordForms) {
  auto lex = Lexicon::load("verb take_place | pres3sg=\"takes place\"", "en");
  EXPECT_EQ(lex.conjugate("take_place", Tense::kPresent, FeatValue::kSingular, std::nullopt),
            V{"takes place"});
}

TEST(Inflect, EnglishPlural) {
  EXPECT_EQ(en().inflect("publication", "noun", {FeatValue::kPlural, std::nullopt}),
            "publications");
  EXPECT_EQ(en().inflect("publication", "noun", {FeatValue::kSingular, std::nullopt}),
            "publication");
}

TEST(Inflect, ItalianFeminineNounPlural) {
  EXPECT_EQ(it().inflect("pubblicazione", "noun", {FeatValue::kPlural, FeatValue::kFem}),
            "pubblicazioni");
}

TEST(Inflect, EnglishAdjectivesInvariant) {
  EXPECT_EQ(en().inflect("steady", "adj", {FeatValue::kPlural, std::nullopt}), "steady");
  EXPECT_EQ(en().inflect("the", "det", {FeatValue::kPlural, FeatValue::kNeut}), "the");
}

TEST(Inflect, ItalianArticleAndAdjectiveForms) {
  EXPECT_EQ(it().inflect("il", "det", {FeatValue::kPlural, FeatValue::kFem}), "le");
  EXPECT_EQ(it().inflect("il", "det", {FeatValue::kPlural, FeatValue::kMasc}), "i");
  EXPECT_EQ(it().inflect("il", "det", {FeatValue::kSingular, FeatValue::kFem}), "la");
  EXPECT_EQ(it().inflect("excellent", "adj", {FeatValue::kSingular, FeatValue::kFem}), "ottima");
  EXPECT_EQ(it().inflect("stabile", "adj", {FeatValue::kPlural, FeatValue::kFem}), "stabili");
}

TEST(Inflect, RegularFallbackOnlyWhenFlagged) {
  auto lex = Lexicon::load("noun cat | regular\nnoun sheep\n", "en");
  EXPECT_EQ(lex.inflect("cat", "noun", {FeatValue::kPlural, std::nullopt}), "cats");
  EXPECT_THROW(lex.inflect("sheep", "noun", {FeatValue::kPlural, std::nullopt}), MissingForm);
  EXPECT_THROW(lex.inflect("dog", "noun", {FeatValue::kPlural, std::nullopt}), MissingLexeme);
}

TEST(Conjugate, EnglishPresentPerfectPlural) {
  EXPECT_EQ(en().conjugate("grow", Tense::kPresentPerfect, FeatValue::kPlural, std::nullopt),
            (V{"have", "grown"}));
  EXPECT_EQ(en().conjugate("grow", Tense::kPresentPerfect, FeatValue::kSingular, std::nullopt),
            (V{"has", "grown"}));
}

TEST(Conjugate, ItalianEssereAgreement) {
  EXPECT_EQ(it().conjugate("aumentare", Tense::kPresentPerfect, FeatValue::kPlural, FeatValue::kFem),
            (V{"sono", "aumentate"}));
}

TEST(Conjugate, EnglishCopula) {
  EXPECT_EQ(en().conjugate("be", Tense::kPresent, FeatValue::kPlural, std::nullopt), V{"are"});
  EXPECT_EQ(en().conjugate("be", Tense::kPresent, FeatValue::kSingular, std::nullopt), V{"is"});
}

TEST(Conjugate, MissingForms) {
  auto lex = Lexicon::load("verb have | pres3sg=has pres3pl=have\nverb go\n", "en");
  EXPECT_THROW(lex.conjugate("go", Tense::kPresentPerfect, FeatValue::kSingular, std::nullopt),
               MissingForm);
  EXPECT_THROW(lex.conjugate("run", Tense::kPresent, FeatValue::kSingular, std::nullopt),
               MissingLexeme);
}

TEST(Tense, Names) {
  EXPECT_EQ(tense_from("present"), Tense::kPresent);
  EXPECT_EQ(tense_from("present_perfect"), Tense::kPresentPerfect);
  EXPECT_EQ(tense_from("past"), Tense::kPast);
  EXPECT_FALSE(tense_from("future").has_value());
}

// Property: with essere the participle takes exactly the four regular
// endings over (gender, number); with avere it never varies.
TEST(LexiconProperty, ItalianParticipleAgreement) {
  struct Case {
    FeatValue g, n;
    char ending;
  };
  const Case cases[] = {{FeatValue::kMasc, FeatValue::kSingular, 'o'},
                        {FeatValue::kFem, FeatValue::kSingular, 'a'},
                        {FeatValue::kMasc, FeatValue::kPlural, 'i'},
                        {FeatValue::kFem, FeatValue::kPlural, 'e'}};
  for (const auto& [key, entry] : it().entries()) {
    if (entry.pos != "verb" || !entry.forms.contains("pp")) continue;
    std::set<std::string> participles;
    for (const auto& c : cases) {
      auto group = it().conjugate(entry.lexeme, Tense::kPresentPerfect, c.n, c.g);
      ASSERT_EQ(group.size(), 2u) << entry.lexeme;
      participles.insert(group.back());
      if (entry.verb_aux == "essere") {
        EXPECT_EQ(group.back().back(), c.ending) << entry.lexeme;
        EXPECT_EQ(group.front(), c.n == FeatValue::kPlural ? "sono" : "è");
      }
    }
    EXPECT_EQ(participles.size(), entry.verb_aux == "essere" ? 4u : 1u) << entry.lexeme;
  }
}

// Property: inflect is a pure lookup.
TEST(LexiconProperty, InflectIsPure) {
  for (const Lexicon* lex : {&en(), &it()}) {
    for (const auto& [key, entry] : lex->entries()) {
      if (entry.pos == "verb") continue;
      for (auto n : {FeatValue::kSingular, FeatValue::kPlural}) {
        for (auto g : {FeatValue::kMasc, FeatValue::kFem, FeatValue::kNeut}) {
          InflectFeatures f{n, g};
          std::string a, b;
          try {
            a = lex->inflect(entry.lexeme, entry.pos, f);
          } catch (const MissingForm&) {
            EXPECT_THROW(lex->inflect(entry.lexeme, entry.pos, f), MissingForm);
            continue;
          }
          b = lex->inflect(entry.lexeme, entry.pos, f);
          EXPECT_EQ(a, b);
          EXPECT_FALSE(a.empty());
        }
      }
    }
  }
}

}  // namespace
}  // namespace c2t
