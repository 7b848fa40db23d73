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

// Rule application and per-stage fixpoint scheduling.
//
// A stage repeats breadth-first passes over the tree. At each node the
// rules are tried in pack order and the first one whose pattern and guards
// succeed fires: one of its variants replaces the subtree at that node and
// the pass continues with the next node in BFS order. The stage ends after
// a pass in which nothing fired.

#ifndef C2T_ENGINE_HPP_
#define C2T_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "c2t/features.hpp"
#include "c2t/knowledge.hpp"
#include "c2t/rule.hpp"
#include "c2t/term.hpp"

namespace c2t {

inline constexpr std::uint64_t kDefaultSeed = 2024;
inline constexpr std::size_t kDefaultPassCap = 100;

// Picks an index in [0, n) for a rule with n >= 2 variants; `last` is the
// variant this rule chose the previous time it fired, if any.
using ChoiceFn =
    std::function<std::size_t(const Rule&, std::size_t n, std::optional<std::size_t> last)>;

// Per-generation state. Not shared between generations.
struct GenContext {
  explicit GenContext(std::uint64_t seed = kDefaultSeed,
                      std::size_t pass_cap = kDefaultPassCap)
      : seed(seed), rng(seed), pass_cap(pass_cap) {}

  std::uint64_t seed;
  std::mt19937_64 rng;
  std::map<std::string, std::size_t> history;
  std::size_t pass_cap;
  FeatStore store;
  // Replaces the random choice when set (used by enumeration).
  ChoiceFn chooser;
};

struct Application {
  Address address;
  std::string rule;
  std::size_t variant = 0;
  std::size_t pass = 0;

  bool operator==(const Application&) const = default;
};

std::optional<Binding> match_pattern(const TreePattern& p, const TracedTree& t);
std::optional<Binding> match_pattern(const TreePattern& p, const Tree& t);

// Evaluates the rule's guards in order, extending `b`. Returns false when a
// hard guard fails.
bool eval_guards(const std::vector<Guard>& guards, Binding& b,
                 const KnowledgeBase& kb);

// Builds the replacement subtree. New nodes are annotated with `rule_name`.
// Throws UnboundVariable.
TracedTree instantiate(const TreeTemplate& tpl, const Binding& b, FeatStore& store,
                       std::string_view rule_name = {});

// All variant trees when pattern and guards succeed; nullopt otherwise.
std::optional<std::vector<Tree>> apply_rule(const Rule& r, const Tree& t,
                                            const KnowledgeBase& kb,
                                            FeatStore& store);

// Variant index for a rule that fired: uniform, avoiding the previous
// choice when there are at least two variants. Updates the history.
std::size_t select_variant(const Rule& r, std::size_t n, GenContext& ctx);
Tree select_variant(const Rule& r, const std::vector<Tree>& variants,
                    GenContext& ctx);

struct StageResult {
  TracedTree tree;
  std::vector<Application> applied;
  std::size_t passes = 0;
};

// Called after every firing with the tree as it stands.
using StepObserver = std::function<void(const Application&, const TracedTree&)>;

// Rules not belonging to `stage`, or carrying a language other than `lang`,
// are skipped. Throws StageDivergence when ctx.pass_cap passes all fire.
StageResult run_stage(Stage stage, std::string_view lang, TracedTree t,
                      const std::vector<Rule>& rules, const KnowledgeBase& kb,
                      GenContext& ctx, const StepObserver& observer = nullptr);

}  // namespace c2t

#endif  // C2T_ENGINE_HPP_
