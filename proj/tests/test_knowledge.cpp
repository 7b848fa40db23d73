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
#include <set>

#include "c2t/error.hpp"
#include "c2t/knowledge.hpp"

namespace c2t {
namespace {

TEST(KnowledgeLoad, SingleIsaFact) {
  auto kb = KnowledgeBase::load("isa(year,time)");
  ASSERT_EQ(kb.isa_facts().size(), 1u);
  EXPECT_EQ(kb.isa_facts()[0], std::make_pair(std::string("year"), std::string("time")));
}

TEST(KnowledgeLoad, EmptyText) {
  EXPECT_TRUE(KnowledgeBase::load("").empty());
  EXPECT_TRUE(KnowledgeBase::load("# comment only\n\n").empty());
}

TEST(KnowledgeLoad, DeduplicatesFacts) {
  auto kb = KnowledgeBase::load("isa(year,time)\nisa(year, time)\n");
  EXPECT_EQ(kb.isa_facts().size(), 1u);
}

TEST(KnowledgeLoad, TwoCycleRejected) {
  EXPECT_THROW(KnowledgeBase::load("isa(a,b)\nisa(b,a)"), CycleError);
}

TEST(KnowledgeLoad, LongerCycleRejected) {
  EXPECT_THROW(KnowledgeBase::load("isa(a,b)\nisa(b,c)\nisa(c,a)"), CycleError);
}

TEST(KnowledgeLoad, SyntaxErrorCarriesLine) {
  try {
    KnowledgeBase::load("isa(a,b)\nnonsense(\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(KnowledgeBase::load("likes(a,b)"), SyntaxError);
}

TEST(KnowledgeLoad, EquivFacts) {
  auto kb = KnowledgeBase::load("equiv(interval(time), period)");
  auto to = kb.equiv_of(term("interval", {atom("time")}));
  ASSERT_TRUE(to.has_value());
  EXPECT_EQ(*to, atom("period"));
  EXPECT_FALSE(kb.equiv_of(atom("period")).has_value());
}

TEST(IsaParent, DirectParent) {
  auto kb = KnowledgeBase::load("isa(year,time)");
  EXPECT_EQ(kb.isa_parent("year"), "time");
  EXPECT_FALSE(kb.isa_parent("month").has_value());
}

TEST(IsaParent, LoadOrderTieBreak) {
  auto kb = KnowledgeBase::load("isa(a,b)\nisa(a,c)");
  EXPECT_EQ(kb.isa_parent("a"), "b");
}

TEST(IsaQuery, Examples) {
  auto kb = KnowledgeBase::load("isa(year,time)");
  EXPECT_TRUE(kb.isa_query("year", "time"));
  EXPECT_TRUE(kb.isa_query("c", "c"));
  EXPECT_FALSE(kb.isa_query("time", "year"));
  auto chain = KnowledgeBase::load("isa(a,b)\nisa(b,c)");
  EXPECT_TRUE(chain.isa_query("a", "c"));
}

// Property: isa_query matches a reachability oracle computed by
// Floyd-Warshall over random acyclic fact sets (edges only go from a
// lower to a higher index).
TEST(KnowledgeProperty, IsaQueryIsReflexiveTransitiveClosure) {
  std::mt19937 rng(5);
  const int n = 8;
  for (int round = 0; round < 100; ++round) {
    bool reach[n][n] = {};
    std::string text;
    for (int i = 0; i < n; ++i) {
      reach[i][i] = true;
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) {
          reach[i][j] = true;
          text += "isa(n" + std::to_string(i) + ",n" + std::to_string(j) + ")\n";
        }
      }
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    auto kb = KnowledgeBase::load(text);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(kb.isa_query("n" + std::to_string(i), "n" + std::to_string(j)), reach[i][j])
            << text;
      }
    }
  }
}

}  // namespace
}  // namespace c2t
