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

// The six-stage generation pipeline and derivation enumeration.
//
// Lexical leaves produced by the grammar stage:
//
//   w(Pos, Lexeme)          inflected with the enclosing phrase features
//   w(verb, Lexeme, Tense)  conjugated verb group (auxiliaries included)
//   w(verb, Lexeme)         base form
//   w(num, N)               a number, printed as is
//   w(punct|open|close, S)  punctuation, printed as the symbol S
//   w(lit, "text")          literal text
//
// The inflection stage turns them into word("text", Pos, Lexeme) leaves and
// sorts the children of every phrase node.

#ifndef C2T_PIPELINE_HPP_
#define C2T_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "c2t/engine.hpp"
#include "c2t/error.hpp"
#include "c2t/knowledge.hpp"
#include "c2t/packs.hpp"
#include "c2t/surface.hpp"

namespace c2t {

struct StageOutput {
  Stage stage;
  TracedTree tree;
  std::vector<Application> applied;
};

struct PipelineResult {
  std::string sentence;
  std::vector<StageOutput> stages;
  WordSeq words;
  FeatStore store;
  PairStats pair_stats;
};

struct PipelineOptions {
  OutputFormat format = OutputFormat::kText;
  std::size_t pair_cap = 100;
  // Sees every rule firing of every stage.
  std::function<void(Stage, const Application&, const TracedTree&)> observer;
};

// Raised by run_pipeline; carries the failing stage and the outputs of the
// stages that completed. kind() is the underlying error kind.
// Prefixes the stage name unless the message already starts with it.
std::string with_stage(const std::string& message, Stage stage);

class PipelineError : public Error {
 public:
  PipelineError(const Error& cause, Stage stage, std::vector<StageOutput> partial)
      : Error(cause.kind(), with_stage(cause.message(), stage)),
        stage_(stage),
        partial_(std::move(partial)) {}

  Stage stage() const { return stage_; }
  const std::vector<StageOutput>& partial() const { return partial_; }

 private:
  Stage stage_;
  std::vector<StageOutput> partial_;
};

PipelineResult run_pipeline(const Tree& t, const LanguagePack& pack,
                            const KnowledgeBase& kb, GenContext& ctx,
                            const PipelineOptions& opts = {});

// Word realization and phrase sorting (the built-in part of the inflection
// stage). Words take the features of the nearest enclosing np, vp or rp.
void realize_words(TracedTree& t, const Lexicon& lex, const FeatStore& store);
void sort_phrases(TracedTree& t, const std::vector<OrderConstraint>& order);

struct EnumerateOptions {
  OutputFormat format = OutputFormat::kText;
  std::size_t pass_cap = kDefaultPassCap;
  // Upper bound on explored choice paths per stage and input, 0 = none.
  std::size_t max_paths = 0;
};

// Every distinct sentence reachable by variant choices, in choice order
// (earlier choice points vary slowest, lower variant indices first),
// truncated at `limit`.
std::vector<std::string> enumerate_derivations(const Tree& t, const LanguagePack& pack,
                                               const KnowledgeBase& kb, std::size_t limit,
                                               const EnumerateOptions& opts = {});

// Distinct outputs of a single stage (used by tests that inspect one
// stage, e.g. the equivalence rewritings). With `steps`, every
// intermediate tree after a rule firing is collected too.
std::vector<Tree> enumerate_stage(Stage stage, const Tree& t, const LanguagePack& pack,
                                  const KnowledgeBase& kb, std::size_t limit,
                                  std::vector<Tree>* steps = nullptr);

// Canonical text of a tree with feature references numbered by first
// occurrence and shown with their values; equal keys mean the remaining
// pipeline behaves identically.
std::string canonical_key(const TracedTree& t, const FeatStore& s);

}  // namespace c2t

#endif  // C2T_PIPELINE_HPP_
