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

#ifndef C2T_KNOWLEDGE_HPP_
#define C2T_KNOWLEDGE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2t/term.hpp"

namespace c2t {

// Common-knowledge facts consulted by rule guards. Facts keep load order;
// the isa relation is acyclic.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // One fact per line: `isa(child,parent)` or `equiv(term,term)`. Blank
  // lines and lines starting with `#` are ignored. Throws SyntaxError
  // (position = line number) and CycleError.
  static KnowledgeBase load(std::string_view text);

  void add_isa(std::string child, std::string parent);
  void add_equiv(Term from, Term to);

  std::optional<std::string> isa_parent(std::string_view c) const;
  // Reflexive, transitive.
  bool isa_query(std::string_view c, std::string_view ancestor) const;
  // First `to` whose `from` equals `t`, by load order.
  std::optional<Term> equiv_of(const Term& t) const;

  const std::vector<std::pair<std::string, std::string>>& isa_facts() const {
    return isa_;
  }
  const std::vector<std::pair<Term, Term>>& equiv_facts() const {
    return equiv_;
  }
  bool empty() const { return isa_.empty() && equiv_.empty(); }

 private:
  void check_acyclic() const;

  std::vector<std::pair<std::string, std::string>> isa_;
  std::vector<std::pair<Term, Term>> equiv_;
};

inline KnowledgeBase load_kb(std::string_view text) {
  return KnowledgeBase::load(text);
}

}  // namespace c2t

#endif  // C2T_KNOWLEDGE_HPP_
