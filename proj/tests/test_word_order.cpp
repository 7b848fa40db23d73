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

#include <algorithm>
#include <numeric>
#include <random>

#include "c2t/error.hpp"
#include "c2t/word_order.hpp"

namespace c2t {
namespace {

using Order = std::vector<std::size_t>;
using Edges = std::set<std::pair<std::size_t, std::size_t>>;

OrderElement word(const std::string& lexeme, const std::string& pos) {
  return OrderElement{pos, lexeme, "", ""};
}

OrderProblem en_dog() {
  auto cs = load_order_constraints(
      "order det_adj: pos=det < pos=adj\n"
      "order det_noun: pos=det < pos=noun\n"
      "order adj_noun: pos=adj < pos=noun\n");
  return build_order_problem({word("dog", "noun"), word("big", "adj"), word("the", "det")}, cs);
}

// Brute-force oracle: all permutations that respect every edge.
std::vector<Order> brute_force(std::size_t n, const Edges& edges) {
  Order perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Order> out;
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](const auto& e) { return pos[e.first] < pos[e.second]; });
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TEST(BuildOrderProblem, EnglishDeterminerAdjectiveNoun) {
  OrderProblem p = en_dog();
  EXPECT_EQ(p.edges, (Edges{{2, 1}, {2, 0}, {1, 0}}));
}

TEST(BuildOrderProblem, NoConstraintsNoEdges) {
  EXPECT_TRUE(build_order_problem({word("a", "det"), word("b", "noun")}, {}).edges.empty());
}

TEST(BuildOrderProblem, ItalianPostnominalAdjective) {
  auto cs = load_order_constraints("order noun_adj: pos=noun < pos=adj in np\n");
  OrderProblem p = build_order_problem({word("importante", "adj"), word("incremento", "noun")},
                                       cs, "np", "subject");
  EXPECT_EQ(p.edges, (Edges{{1, 0}}));
  EXPECT_EQ(p.sources, std::vector<std::string>{"noun_adj"});
}

TEST(BuildOrderProblem, ScopeAndSelectors) {
  auto cs = load_order_constraints(
      "order in_np: pos=det < pos=noun in np\n"
      "order by_lex: lex=very < pos=adj\n"
      "order by_role: role=subject < role=main in clause\n");
  std::vector<OrderElement> words = {word("dog", "noun"), word("the", "det")};
  EXPECT_TRUE(build_order_problem(words, cs, "vp", "main").edges.empty());
  EXPECT_EQ(build_order_problem(words, cs, "np", "x").edges.size(), 1u);
  EXPECT_EQ(build_order_problem({word("big", "adj"), word("very", "adv")}, cs).edges,
            (Edges{{1, 0}}));
  std::vector<OrderElement> phrases = {{"", "", "vp", "main"}, {"", "", "np", "subject"}};
  EXPECT_EQ(build_order_problem(phrases, cs, "s", "clause").edges, (Edges{{1, 0}}));
}

TEST(BuildOrderProblem, NoSelfEdges) {
  auto cs = load_order_constraints("order adj_adj: pos=adj < pos=adj\n");
  EXPECT_TRUE(build_order_problem({word("a", "adj"), word("b", "adj")}, cs).edges.size() == 2u);
  EXPECT_TRUE(build_order_problem({word("a", "adj")}, cs).edges.empty());
}

TEST(LoadOrderConstraints, Errors) {
  try {
    load_order_constraints("order a: pos=det < pos=noun\norder broken pos=det\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(load_order_constraints("order a: kind=det < pos=noun\n"), SyntaxError);
}

TEST(SolveOrder, UniqueTopologicalOrder) {
  EXPECT_EQ(solve_order(en_dog()), (Order{2, 1, 0}));
}

TEST(SolveOrder, StableWithoutEdges) {
  OrderProblem p;
  p.elements = {word("a", "x"), word("b", "x"), word("c", "x")};
  EXPECT_EQ(solve_order(p), (Order{0, 1, 2}));
}

TEST(SolveOrder, CycleNamesConstraints) {
  auto cs = load_order_constraints("order one: pos=a < pos=b\norder two: pos=b < pos=a\n");
  OrderProblem p = build_order_problem({word("x", "a"), word("y", "b")}, cs);
  try {
    solve_order(p);
    FAIL();
  } catch (const OrderCycle& e) {
    EXPECT_NE(std::string(e.what()).find("one"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("two"), std::string::npos);
  }
}

TEST(EnumerateOrders, Examples) {
  EXPECT_EQ(enumerate_orders(en_dog()).size(), 1u);
  OrderProblem free;
  free.elements.resize(3);
  EXPECT_EQ(enumerate_orders(free).size(), 6u);
  OrderProblem chain;
  chain.elements.resize(4);
  chain.edges = {{3, 2}, {2, 1}, {1, 0}};
  EXPECT_EQ(enumerate_orders(chain), (std::vector<Order>{{3, 2, 1, 0}}));
}

TEST(EnumerateOrders, SizeLimit) {
  OrderProblem p;
  p.elements.resize(9);
  EXPECT_THROW(enumerate_orders(p), SizeLimit);
}

// Properties over random DAGs: enumerate_orders equals the brute-force
// filter, solve_order is one of its orders, and adding an edge never adds
// orders.
TEST(WordOrderProperty, RandomDags) {
  std::mt19937 rng(3);
  for (int round = 0; round < 400; ++round) {
    std::size_t n = 1 + rng() % 7;
    OrderProblem p;
    p.elements.resize(n);
    // Edges follow a hidden random ranking, so the graph is acyclic.
    Order rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (rank[a] < rank[b] && rng() % 3 == 0) p.edges.insert({a, b});
      }
    }
    auto all = enumerate_orders(p);
    ASSERT_EQ(all, brute_force(n, p.edges));
    ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
    Order solved = solve_order(p);
    ASSERT_NE(std::find(all.begin(), all.end(), solved), all.end());
    if (p.edges.empty()) ASSERT_TRUE(std::is_sorted(solved.begin(), solved.end()));

    std::size_t a = rng() % n, b = rng() % n;
    if (a != b && rank[a] < rank[b]) {
      OrderProblem q = p;
      q.edges.insert({a, b});
      ASSERT_LE(enumerate_orders(q).size(), all.size());
    }
  }
}

}  // namespace
}  // namespace c2t
