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

// Phrase-local word ordering from partial-order constraints.
//
// Constraint file lines:
//
//   order det_first: pos=det < pos=noun in np
//
// Selectors: pos=<tag>, lex=<lexeme>, role=<phrase type or subtype>.

#ifndef C2T_WORD_ORDER_HPP_
#define C2T_WORD_ORDER_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c2t {

// One orderable child of a phrase: either a word (pos + lexeme) or a
// nested phrase (phrase type + subtype).
struct OrderElement {
  std::string pos;
  std::string lexeme;
  std::string phrase;
  std::string sub;
};

struct Selector {
  enum class Kind { kPos, kLexeme, kRole };
  Kind kind = Kind::kPos;
  std::string value;

  bool matches(const OrderElement& e) const;
  std::string to_string() const;
};

struct OrderConstraint {
  std::string name;
  Selector before;
  Selector after;
  std::optional<std::string> scope;  // phrase type or subtype
};

struct OrderProblem {
  std::vector<OrderElement> elements;
  // (before, after) index pairs.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  // Constraint names that contributed at least one edge.
  std::vector<std::string> sources;
};

// Throws SyntaxError (position = line).
std::vector<OrderConstraint> load_order_constraints(std::string_view text);

bool constraint_applies(const OrderConstraint& c, std::string_view phrase,
                        std::string_view sub);

// Edges from every constraint whose scope matches (phrase, sub); pass empty
// strings to ignore scope.
OrderProblem build_order_problem(std::vector<OrderElement> elements,
                                 const std::vector<OrderConstraint>& constraints,
                                 std::string_view phrase = {},
                                 std::string_view sub = {});

// Stable topological order. Throws OrderCycle.
std::vector<std::size_t> solve_order(const OrderProblem& p);

// Every order consistent with the edges, lexicographic. Throws SizeLimit
// above 8 elements.
std::vector<std::vector<std::size_t>> enumerate_orders(const OrderProblem& p);

}  // namespace c2t

#endif  // C2T_WORD_ORDER_HPP_
