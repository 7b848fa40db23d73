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

#include "c2t/word_order.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <regex>
#include <sstream>

#include "c2t/error.hpp"

namespace c2t {

bool Selector::matches(const OrderElement& e) const {
  switch (kind) {
    case Kind::kPos: return e.pos == value;
    case Kind::kLexeme: return e.lexeme == value;
    case Kind::kRole: return e.phrase == value || e.sub == value;
  }
  return false;
}

std::string Selector::to_string() const {
  switch (kind) {
    case Kind::kPos: return "pos=" + value;
    case Kind::kLexeme: return "lex=" + value;
    case Kind::kRole: return "role=" + value;
  }
  return {};
}

namespace {

Selector parse_selector(const std::string& s, std::size_t line) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw SyntaxError(line, "bad selector '" + s + "'");
  std::string key = s.substr(0, eq);
  Selector sel;
  sel.value = s.substr(eq + 1);
  if (key == "pos") {
    sel.kind = Selector::Kind::kPos;
  } else if (key == "lex") {
    sel.kind = Selector::Kind::kLexeme;
  } else if (key == "role") {
    sel.kind = Selector::Kind::kRole;
  } else {
    throw SyntaxError(line, "unknown selector kind '" + key + "'");
  }
  if (sel.value.empty()) throw SyntaxError(line, "empty selector value");
  return sel;
}

}  // namespace

std::vector<OrderConstraint> load_order_constraints(std::string_view text) {
  static const std::regex kLine(
      R"(^\s*order\s+([A-Za-z0-9_]+)\s*:\s*(\S+)\s*<\s*(\S+)(?:\s+in\s+(\S+))?\s*$)");
  std::vector<OrderConstraint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, kLine))
      throw SyntaxError(lineno, "expected 'order <name>: <sel> < <sel> [in <phrase>]'");
    OrderConstraint c;
    c.name = m[1];
    c.before = parse_selector(m[2], lineno);
    c.after = parse_selector(m[3], lineno);
    if (m[4].matched) c.scope = m[4];
    out.push_back(std::move(c));
  }
  return out;
}

bool constraint_applies(const OrderConstraint& c, std::string_view phrase,
                        std::string_view sub) {
  if (!c.scope) return true;
  if (phrase.empty() && sub.empty()) return true;
  return *c.scope == phrase || *c.scope == sub;
}

OrderProblem build_order_problem(std::vector<OrderElement> elements,
                                 const std::vector<OrderConstraint>& constraints,
                                 std::string_view phrase, std::string_view sub) {
  OrderProblem p;
  p.elements = std::move(elements);
  for (const auto& c : constraints) {
    if (!constraint_applies(c, phrase, sub)) continue;
    bool used = false;
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
      if (!c.before.matches(p.elements[i])) continue;
      for (std::size_t j = 0; j < p.elements.size(); ++j) {
        if (i == j || !c.after.matches(p.elements[j])) continue;
        p.edges.emplace(i, j);
        used = true;
      }
    }
    if (used) p.sources.push_back(c.name);
  }
  return p;
}

std::vector<std::size_t> solve_order(const OrderProblem& p) {
  const std::size_t n = p.elements.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : p.edges) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (order.size() != n) {
    std::string msg = "elements";
    for (std::size_t i = 0; i < n; ++i) {
      if (indegree[i] == 0) continue;
      const auto& e = p.elements[i];
      msg += " " + (e.lexeme.empty() ? e.phrase : e.lexeme) + "#" + std::to_string(i);
    }
    if (!p.sources.empty()) {
      msg += "; constraints";
      for (const auto& s : p.sources) msg += " " + s;
    }
    throw OrderCycle(msg);
  }
  return order;
}

std::vector<std::vector<std::size_t>> enumerate_orders(const OrderProblem& p) {
  const std::size_t n = p.elements.size();
  if (n > 8) throw SizeLimit(std::to_string(n) + " elements (max 8)");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rank(n);
  do {
    for (std::size_t k = 0; k < n; ++k) rank[perm[k]] = k;
    bool ok = std::all_of(p.edges.begin(), p.edges.end(),
                          [&](const auto& e) { return rank[e.first] < rank[e.second]; });
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace c2t
