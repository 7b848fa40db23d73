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

#include "c2t/knowledge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "c2t/error.hpp"

namespace c2t {

namespace {

std::string symbol_of(const Arg& a, std::size_t line) {
  const Term* t = a.term();
  if (t == nullptr || !t->is_atom())
    throw SyntaxError(line, "isa arguments must be symbols");
  return t->functor;
}

}  // namespace

KnowledgeBase KnowledgeBase::load(std::string_view text) {
  KnowledgeBase kb;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Term fact;
    try {
      fact = parse_term(line);
    } catch (const SyntaxError& e) {
      throw SyntaxError(lineno, e.what());
    }
    if ((fact.functor == "isa" || fact.functor == "is_a") &&
        fact.args.size() == 2) {
      kb.add_isa(symbol_of(fact.args[0], lineno),
                 symbol_of(fact.args[1], lineno));
    } else if (fact.functor == "equiv" && fact.args.size() == 2 &&
               fact.args[0].term() && fact.args[1].term()) {
      kb.add_equiv(*fact.args[0].term(), *fact.args[1].term());
    } else {
      throw SyntaxError(lineno, "expected isa(child,parent) or equiv(term,term)");
    }
  }
  kb.check_acyclic();
  return kb;
}

void KnowledgeBase::add_isa(std::string child, std::string parent) {
  std::pair<std::string, std::string> f{std::move(child), std::move(parent)};
  if (std::find(isa_.begin(), isa_.end(), f) == isa_.end())
    isa_.push_back(std::move(f));
}

void KnowledgeBase::add_equiv(Term from, Term to) {
  std::pair<Term, Term> f{std::move(from), std::move(to)};
  if (std::find(equiv_.begin(), equiv_.end(), f) == equiv_.end())
    equiv_.push_back(std::move(f));
}

std::optional<std::string> KnowledgeBase::isa_parent(std::string_view c) const {
  for (const auto& [child, parent] : isa_) {
    if (child == c) return parent;
  }
  return std::nullopt;
}

bool KnowledgeBase::isa_query(std::string_view c,
                              std::string_view ancestor) const {
  std::vector<std::string> frontier{std::string(c)};
  std::set<std::string> seen{std::string(c)};
  while (!frontier.empty()) {
    std::string cur = std::move(frontier.back());
    frontier.pop_back();
    if (cur == ancestor) return true;
    for (const auto& [child, parent] : isa_) {
      if (child == cur && seen.insert(parent).second) frontier.push_back(parent);
    }
  }
  return false;
}

std::optional<Term> KnowledgeBase::equiv_of(const Term& t) const {
  for (const auto& [from, to] : equiv_) {
    if (from == t) return to;
  }
  return std::nullopt;
}

void KnowledgeBase::check_acyclic() const {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& [child, parent] : isa_) edges[child].push_back(parent);
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::string, int> state;
  std::vector<std::string> stack;
  auto visit = [&](auto&& self, const std::string& node) -> void {
    state[node] = 1;
    stack.push_back(node);
    for (const auto& next : edges[node]) {
      if (state[next] == 1) {
        std::string cycle;
        auto it = std::find(stack.begin(), stack.end(), next);
        for (; it != stack.end(); ++it) cycle += *it + " -> ";
        throw CycleError("isa cycle " + cycle + next);
      }
      if (state[next] == 0) self(self, next);
    }
    stack.pop_back();
    state[node] = 2;
  };
  for (const auto& [child, parent] : isa_) {
    if (state[child] == 0) visit(visit, child);
  }
}

}  // namespace c2t
