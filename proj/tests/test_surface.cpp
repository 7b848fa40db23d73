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

#include <random>

#include "c2t/error.hpp"
#include "c2t/surface.hpp"
#include "test_util.hpp"

namespace c2t {
namespace {

using V = std::vector<std::string>;

const PairRuleSet& en_pairs() {
  static const PairRuleSet p = testing::bundled_pack("en").pairs;
  return p;
}

const PairRuleSet& it_pairs() {
  static const PairRuleSet p = testing::bundled_pack("it").pairs;
  return p;
}

V pairs(const V& words, const PairRuleSet& rules, PairStats* stats = nullptr) {
  return texts(apply_pair_rules(make_words(words), rules, 100, stats));
}

Tree word_leaf(const std::string& text) { return Tree(term("word", {Arg(Text{text})})); }

TEST(Flatten, StudentsLeaves) {
  Tree t(atom("np"), {word_leaf("the"), word_leaf("students"),
                      Tree(atom("pp"), {word_leaf("of"), Tree(atom("np"), {word_leaf("the"),
                                                                           word_leaf("course")})})});
  EXPECT_EQ(texts(flatten(t)), (V{"the", "students", "of", "the", "course"}));
}

TEST(Flatten, SingleWord) {
  EXPECT_EQ(texts(flatten(word_leaf("hello"))), V{"hello"});
}

TEST(Flatten, KeepsPartOfSpeech) {
  Tree t(atom("np"), {Tree(term("word", {Arg(Text{"1905"}), Arg(atom("num")), Arg(atom("n"))}))});
  auto w = flatten(t);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].pos, "num");
}

TEST(Flatten, NonWordLeaf) {
  Tree t(atom("np"), {word_leaf("the"), Tree(term("class", {atom("course")}))});
  try {
    flatten(t);
    FAIL();
  } catch (const NonWordLeaf& e) {
    EXPECT_NE(std::string(e.what()).find("/1"), std::string::npos);
  }
}

TEST(PairRules, EnglishArticle) {
  EXPECT_EQ(pairs({"a", "increase"}, en_pairs()), (V{"an", "increase"}));
  EXPECT_EQ(pairs({"a", "growth"}, en_pairs()), (V{"a", "growth"}));
  EXPECT_EQ(pairs({"a", "hour"}, en_pairs()), (V{"an", "hour"}));
  EXPECT_EQ(pairs({"a", "university"}, en_pairs()), (V{"a", "university"}));
}

TEST(PairRules, ItalianContractions) {
  EXPECT_EQ(pairs({"da", "gli", "anni"}, it_pairs()), (V{"dagli", "anni"}));
  EXPECT_EQ(pairs({"su", "la", "IA spiegabile"}, it_pairs()), (V{"sulla", "IA spiegabile"}));
  EXPECT_EQ(pairs({"a", "il", "2017"}, it_pairs()), (V{"al", "2017"}));
  EXPECT_EQ(pairs({"di", "le", "pubblicazioni"}, it_pairs()), (V{"delle", "pubblicazioni"}));
  EXPECT_EQ(pairs({"ci", "è", "stato"}, it_pairs()), (V{"c'è", "stato"}));
}

TEST(PairRules, ItalianElision) {
  EXPECT_EQ(pairs({"il", "anno"}, it_pairs()), (V{"l'", "anno"}));
  EXPECT_EQ(pairs({"la", "accuratezza"}, it_pairs()), (V{"l'", "accuratezza"}));
  EXPECT_EQ(pairs({"i", "anni"}, it_pairs()), (V{"gli", "anni"}));
  EXPECT_EQ(pairs({"il", "studio"}, it_pairs()), (V{"lo", "studio"}));
  EXPECT_EQ(pairs({"la", "IA spiegabile"}, it_pairs()), (V{"la", "IA spiegabile"}));
}

TEST(PairRules, ContractionThenElision) {
  PairStats st;
  EXPECT_EQ(pairs({"da", "il", "anno", "2014"}, it_pairs(), &st), (V{"dall'", "anno", "2014"}));
  EXPECT_EQ(st.fired, (V{"da_il", "dal_elided"}));
  EXPECT_LE(st.scans, 3u);
  EXPECT_EQ(pairs({"in", "il", "intervallo"}, it_pairs()), (V{"nell'", "intervallo"}));
  EXPECT_EQ(pairs({"da", "i", "anni"}, it_pairs()), (V{"dagli", "anni"}));
}

TEST(PairRules, Divergence) {
  auto rules = load_pair_rules("pair ab: \"a\" \"b\" => \"c\" \"b\"\npair cb: \"c\" \"b\" => \"a\" \"b\"\n");
  EXPECT_THROW(apply_pair_rules(make_words({"a", "b"}), rules, 10), PairDivergence);
}

TEST(PairRules, SyntaxErrors) {
  try {
    load_pair_rules("pair ok: \"a\" @vowel => \"an\" \"$2\"\npair bad \"x\"\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Finalize, CapitalizationAndPeriod) {
  EXPECT_EQ(finalize(make_words({"an", "increase"})), "An increase.");
  EXPECT_EQ(finalize(make_words({"done", "."})), "Done.");
}

TEST(Finalize, PunctuationSpacing) {
  V words = {"papers", "have", "grown", "(", "from", "0", "up to", "1905", ")",
             "[", "excellent", "accuracy", "]", ";", "in detail", ",", "x"};
  EXPECT_EQ(finalize(make_words(words)),
            "Papers have grown (from 0 up to 1905) [excellent accuracy]; in detail, x.");
}

TEST(Finalize, ApostropheGlues) {
  EXPECT_EQ(finalize(make_words({"nell'", "intervallo", "c'è"})), "Nell'intervallo c'è.");
}

TEST(Finalize, HtmlMarkup) {
  MarkupConfig markup;
  markup.tags["pos=num"] = {"<b>", "</b>"};
  Tree t(atom("s"), {Tree(term("word", {Arg(Text{"up to"}), Arg(atom("prep"))})),
                     Tree(term("word", {Arg(Text{"1905"}), Arg(atom("num"))}))});
  WordSeq w = flatten(t, &markup);
  EXPECT_EQ(finalize(w, OutputFormat::kHtml, &markup), "Up to <b>1905</b>.");
  EXPECT_EQ(finalize(w, OutputFormat::kText, &markup), "Up to 1905.");
}

// Properties: a pair rule only touches the pair it matched, and finalize
// yields exactly one terminal period and no double spaces.
TEST(SurfaceProperty, PairRulesAreLocal) {
  std::mt19937 rng(9);
  const V neutral = {"pubblicazioni", "sono", "2014", "stabili", "tempo", "(", ")"};
  for (int round = 0; round < 300; ++round) {
    V words;
    std::size_t n = rng() % 8;
    for (std::size_t i = 0; i < n; ++i) words.push_back(neutral[rng() % neutral.size()]);
    std::size_t at = words.empty() ? 0 : rng() % (words.size() + 1);
    V with = words;
    with.insert(with.begin() + static_cast<std::ptrdiff_t>(at), {"su", "la"});
    V expected = words;
    expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(at), "sulla");
    ASSERT_EQ(pairs(words, it_pairs()), words);
    ASSERT_EQ(pairs(with, it_pairs()), expected);
  }
}

TEST(SurfaceProperty, FinalizeSpacing) {
  std::mt19937 rng(4);
  const V vocab = {"a", "word", ",", ";", ".", "(", ")", "[", "]", "l'", "x", "1905"};
  for (int round = 0; round < 500; ++round) {
    V words;
    std::size_t n = 1 + rng() % 10;
    for (std::size_t i = 0; i < n; ++i) words.push_back(vocab[rng() % vocab.size()]);
    std::string s = finalize(make_words(words));
    ASSERT_EQ(s.find("  "), std::string::npos) << s;
    ASSERT_FALSE(s.empty());
    ASSERT_EQ(s.back(), '.') << s;
    if (s.size() >= 2) ASSERT_NE(s[s.size() - 2], '.') << s;
  }
}

}  // namespace
}  // namespace c2t
