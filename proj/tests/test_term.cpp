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
#include "c2t/term.hpp"
#include "test_util.hpp"

namespace c2t {
namespace {

const char* kStudents =
    "[class(student),[rel(attribute),attribute(plural)],"
    "[rel(attributive_spec),class(course)]]";

Tree students_tree() {
  return Tree(term("class", {atom("student")}),
              {Tree(term("rel", {atom("attribute")}), {Tree(term("attribute", {atom("plural")}))}),
               Tree(term("rel", {atom("attributive_spec")}),
                    {Tree(term("class", {atom("course")}))})});
}

TEST(ParseConcept, StudentsExample) {
  EXPECT_EQ(parse_concept(kStudents), students_tree());
}

TEST(ParseConcept, SingleNode) {
  Tree t = parse_concept("[class(x)]");
  EXPECT_EQ(t, Tree(term("class", {atom("x")})));
  EXPECT_TRUE(t.is_leaf());
}

TEST(ParseConcept, WhitespaceInsensitive) {
  EXPECT_EQ(parse_concept(" [ class( student ) ,\n [rel(attribute), attribute(plural)],\t"
                          "[rel(attributive_spec), class(course)] ] "),
            students_tree());
}

TEST(ParseConcept, LineComments) {
  EXPECT_EQ(parse_concept("% header\n[class(x), % trailing\n [class(y)]]"),
            Tree(term("class", {atom("x")}), {Tree(term("class", {atom("y")}))}));
  EXPECT_EQ(parse_term("f(\"50% off\")").args[0].text()->value, "50% off");
}

TEST(ParseConcept, ArgumentKinds) {
  Term t = parse_term("f(a, -3, 2.5, \"two words\", 'quoted sym', g(h))");
  ASSERT_EQ(t.args.size(), 6u);
  EXPECT_EQ(*t.args[0].term(), atom("a"));
  EXPECT_EQ(*t.args[1].integer(), -3);
  EXPECT_DOUBLE_EQ(*t.args[2].decimal(), 2.5);
  EXPECT_EQ(t.args[3].text()->value, "two words");
  EXPECT_EQ(t.args[4].term()->functor, "quoted sym");
  EXPECT_EQ(*t.args[5].term(), term("g", {atom("h")}));
}

TEST(ParseConcept, UnbalancedBracketReportsEnd) {
  std::string text = "[class(student)";
  try {
    parse_concept(text);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), text.size());
  }
}

TEST(ParseConcept, RejectsMalformedInput) {
  for (const char* bad : {"", "class(x)", "[]", "[class(x)] extra", "[Class(x)]", "[f(]",
                          "[f(a,)]", "[f(a) g]", "[\"open]"}) {
    EXPECT_THROW(parse_concept(bad), SyntaxError) << bad;
  }
}

TEST(PrintConcept, SingleNode) {
  EXPECT_EQ(print_concept(Tree(term("class", {atom("x")}))), "[class(x)]");
}

TEST(PrintConcept, StudentsExampleModuloWhitespace) {
  std::string printed = print_concept(students_tree());
  std::string squeezed;
  for (char c : printed) {
    if (c != ' ') squeezed.push_back(c);
  }
  EXPECT_EQ(squeezed, kStudents);
}

TEST(PrintConcept, RangeEndpoints) {
  Tree t(term("class", {atom("measure")}),
         {Tree(term("rel", {atom("attribute")}),
               {Tree(term("attribute", {term("range", {Arg(0), Arg(1905)})}))})});
  EXPECT_TRUE(testing::contains(print_concept(t), "range(0, 1905)") ||
              testing::contains(print_concept(t), "range(0,1905)"));
}

TEST(PrintConcept, QuotesSymbolsThatNeedIt) {
  EXPECT_EQ(print_term(atom("explainable AI")), "'explainable AI'");
  EXPECT_TRUE(is_plain_symbol("year"));
  EXPECT_FALSE(is_plain_symbol("Year"));
  EXPECT_FALSE(is_plain_symbol("two words"));
}

TEST(PrintConcept, UnresolvedFeatureDebugForm) {
  Term t = term("info", {atom("np"), atom("subject"), Arg(FeatRef{7}), Arg(FeatRef{8})});
  EXPECT_EQ(print_term(t), "info(np, subject, _G7, _G8)");
}

TEST(BfsNodes, SingleNode) {
  EXPECT_EQ(bfs_nodes(Tree(atom("x"))), std::vector<Address>{Address{}});
}

TEST(BfsNodes, StudentsTree) {
  std::vector<Address> expected = {{}, {0}, {1}, {0, 0}, {1, 0}};
  EXPECT_EQ(bfs_nodes(students_tree()), expected);
}

TEST(BfsNodes, Chain) {
  Tree t(atom("a"), {Tree(atom("b"), {Tree(atom("c"), {Tree(atom("d"))})})});
  std::vector<Address> expected = {{}, {0}, {0, 0}, {0, 0, 0}};
  EXPECT_EQ(bfs_nodes(t), expected);
}

TEST(Subtree, AddressLookup) {
  Tree t = students_tree();
  EXPECT_EQ(subtree_at(t, {1, 0}).label, term("class", {atom("course")}));
  EXPECT_EQ(t.size(), 5u);
}

// Property: parse(print(t)) == t over random trees.
TEST(TermProperty, PrintParseRoundTrip) {
  testing::TreeGen gen(20260101);
  for (int i = 0; i < 1000; ++i) {
    Tree t = gen.tree(3);
    std::string text = print_concept(t);
    Tree back = parse_concept(text);
    ASSERT_EQ(back, t) << text;
    ASSERT_EQ(print_concept(back), text);
  }
}

// Property: every node is visited once and parents come first.
TEST(TermProperty, BfsVisitsEachNodeOnceParentFirst) {
  testing::TreeGen gen(77);
  for (int i = 0; i < 300; ++i) {
    Tree t = gen.tree(4);
    auto order = bfs_nodes(t);
    ASSERT_EQ(order.size(), t.size());
    std::set<Address> seen;
    for (const auto& a : order) {
      ASSERT_TRUE(seen.insert(a).second);
      if (!a.empty()) {
        Address parent(a.begin(), a.end() - 1);
        ASSERT_TRUE(seen.contains(parent));
      }
    }
    for (std::size_t k = 1; k < order.size(); ++k) {
      ASSERT_LE(order[k - 1].size(), order[k].size());
    }
  }
}

}  // namespace
}  // namespace c2t
