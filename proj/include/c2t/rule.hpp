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

// Rewrite rules: tree patterns, guards and variant templates, plus the
// rule-file reader.
//
// A rule file is a sequence of blocks:
//
//   rule measure_range
//   match [class(measure), [rel(attribute), attribute(range(N1,N2))],
//          ?Uom: [rel(attribute), attribute(uom(_))], ...Rest]
//   variant [rel(source_compl),
//             [class(measure), [rel(attribute), attribute(number(N1))],
//               [rel(goal_compl), [class(measure),
//                 [rel(attribute), attribute(number(N2))], ...Uom]],
//               ...Uom, ...Rest]]
//   end
//
// Pattern items inside a list:
//   [..]  or term      required child (a bare term matches the label only)
//   X = <item>         required child, bound to X
//   X                  any child, bound to X
//   ?P: <item>         optional child; P binds a list of zero or one trees
//   ...R               the unmatched children, in order
// Uppercase identifiers are variables, `_` is anonymous. A list head may be
// a variable, which binds the label term.
//
// Template items:
//   [..]  or term      new node / leaf
//   X                  a bound tree, list (spliced) or term (as a leaf)
//   ...X               splice a bound list
//   if X: <item>       only when X is bound (and nonempty)
//   unless X: <item>   only when X is unbound (or empty)
// `$G` allocates a fresh feature variable, shared within one instantiation.
//
// Guards: isa_parent(C, Out), isa(C, Anc), equiv(T, Out), lt/le/gt/ge/eq/ne
// (A, B), present(P), absent(P). Prefix `try` makes a guard optional: when
// it fails its output stays unbound.

#ifndef C2T_RULE_HPP_
#define C2T_RULE_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "c2t/term.hpp"

namespace c2t {

enum class Stage {
  kEquivConcept,
  kConcept2Structure,
  kStructure2Grammar,
  kCoordination,
  kInflection,
  kSyntax,
};

inline constexpr std::array<Stage, 6> kAllStages = {
    Stage::kEquivConcept,  Stage::kConcept2Structure, Stage::kStructure2Grammar,
    Stage::kCoordination,  Stage::kInflection,        Stage::kSyntax};

std::string_view to_string(Stage s);
std::optional<Stage> stage_from(std::string_view s);
// Stages whose rules carry no language code.
bool is_shared_stage(Stage s);

// Tree annotated with the names of the rules that produced each node. The
// engine rewrites these so the derivation trace stays isomorphic.
struct TracedTree {
  Term label;
  std::vector<std::string> rules;
  std::vector<TracedTree> children;

  bool operator==(const TracedTree&) const = default;
};

struct TraceTree {
  std::vector<std::string> rules;
  std::vector<TraceTree> children;

  bool operator==(const TraceTree&) const = default;
};

TracedTree to_traced(const Tree& t);
Tree strip_trace(const TracedTree& t);
TraceTree trace_of(const TracedTree& t);
bool same_shape(const Tree& t, const TraceTree& trace);

struct TreePattern {
  enum class Kind {
    kNode,       // [root, items...]
    kLabelOnly,  // bare term: label must match, children unconstrained
    kAny,        // variable: any tree
  };
  Kind kind = Kind::kAny;
  Arg root = Arg(Var{"_"});
  std::optional<std::string> bind;  // tree variable, or list variable if optional
  bool optional = false;            // as a child item: `?P: ...`
  std::vector<TreePattern> items;
  std::optional<std::string> rest;
};

struct Guard {
  enum class Kind { kIsaParent, kIsaQuery, kEquiv, kNumCompare, kPresent, kAbsent };
  Kind kind = Kind::kPresent;
  bool soft = false;
  std::string op;  // for kNumCompare
  std::vector<Arg> args;
};

struct TreeTemplate {
  enum class Kind { kNode, kVar, kSplice, kIf, kUnless };
  Kind kind = Kind::kNode;
  Arg label = Arg(Term());
  std::string var;
  std::vector<TreeTemplate> children;  // kIf / kUnless hold one child
};

struct Rule {
  std::optional<std::string> lang;
  Stage stage = Stage::kEquivConcept;
  std::string name;
  TreePattern pattern;
  std::vector<Guard> guards;
  std::vector<TreeTemplate> variants;
  std::string source;  // file:line, for messages
};

// Value bound to a pattern variable.
using Bound = std::variant<Arg, TracedTree, std::vector<TracedTree>>;

class Binding {
 public:
  bool has(const std::string& name) const { return values_.contains(name); }
  const Bound* get(const std::string& name) const;
  void set(const std::string& name, Bound v) {
    if (values_.insert_or_assign(name, std::move(v)).second) added_.push_back(name);
  }

  // Undo support for backtracking: names added after `mark()` are removed
  // by `rollback`. Values overwritten in between are not restored.
  std::size_t mark() const { return added_.size(); }
  void rollback(std::size_t m) {
    while (added_.size() > m) {
      values_.erase(added_.back());
      added_.pop_back();
    }
  }

  // Convenience accessors; nullptr when absent or of another kind.
  const Arg* arg(const std::string& name) const;
  const TracedTree* tree(const std::string& name) const;
  const std::vector<TracedTree>* list(const std::string& name) const;

  const std::map<std::string, Bound>& values() const { return values_; }

 private:
  std::map<std::string, Bound> values_;
  std::vector<std::string> added_;
};

// Parses one pattern / template / guard from text (exposed for tests).
TreePattern parse_pattern(std::string_view text);
TreeTemplate parse_template(std::string_view text);
Guard parse_guard(std::string_view text);

// Variables a pattern binds, in first-occurrence order. Duplicates are
// reported through `duplicates`.
std::vector<std::string> pattern_vars(const TreePattern& p,
                                      std::vector<std::string>* duplicates = nullptr);
std::vector<std::string> template_vars(const TreeTemplate& t);

// Parses a rule file for one stage. `lang` is assigned to every rule.
// Throws SyntaxError (position = line) and RuleValidation.
std::vector<Rule> parse_rules(std::string_view text, Stage stage,
                              std::optional<std::string> lang = std::nullopt,
                              std::string_view source_name = "rules");

// Static checks run at load: nonempty variants, unique pattern variables,
// every template variable bound by the pattern or a guard. Throws
// RuleValidation.
void check_rule(const Rule& r);

}  // namespace c2t

#endif  // C2T_RULE_HPP_
