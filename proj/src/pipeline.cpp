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

#include "c2t/pipeline.hpp"

#include <array>
#include <set>
#include <unordered_map>

#include "c2t/coordination.hpp"

namespace c2t {

namespace {

struct Features {
  FeatValue number = FeatValue::kSingular;
  std::optional<FeatValue> gender;
};

const Term* atom_arg(const Term& t, std::size_t i) {
  if (i >= t.args.size()) return nullptr;
  const Term* a = t.args[i].term();
  return (a != nullptr && a->is_atom()) ? a : nullptr;
}

std::string arg_text(const Arg& a) {
  if (const Text* x = a.text()) return x->value;
  if (const Term* t = a.term()) return t->functor;
  return print_arg(a);
}

TracedTree word_node(const std::string& text, const std::string& pos,
                     const std::string& lexeme, const std::vector<std::string>& rules) {
  TracedTree n;
  n.label = term("word", {Arg(Text{text}), Arg(atom(pos)), Arg(atom(lexeme))});
  n.rules = rules;
  n.rules.emplace_back("inflection.word");
  return n;
}

std::vector<TracedTree> expand_word(const TracedTree& leaf, const Lexicon& lex,
                                    const Features& f) {
  const Term& l = leaf.label;
  const Term* pos = atom_arg(l, 0);
  if (pos == nullptr || l.args.size() < 2) {
    throw MissingLexeme("malformed lexical leaf " + print_term(l));
  }
  const std::string& p = pos->functor;
  const Arg& what = l.args[1];
  if (p == "punct" || p == "open" || p == "close" || p == "lit" || p == "num") {
    std::string text = arg_text(what);
    return {word_node(text, p, text, leaf.rules)};
  }
  const Term* lexeme = what.term();
  if (lexeme == nullptr || !lexeme->is_atom()) {
    throw MissingLexeme("lexeme must be a symbol in " + print_term(l));
  }
  const std::string& name = lexeme->functor;
  if (p == "verb" && l.args.size() >= 3) {
    const Term* tense_term = atom_arg(l, 2);
    auto tense = tense_term ? tense_from(tense_term->functor) : std::nullopt;
    if (!tense) throw MissingForm("unknown tense in " + print_term(l));
    auto group = lex.conjugate(name, *tense, f.number, f.gender);
    std::vector<TracedTree> out;
    for (std::size_t i = 0; i < group.size(); ++i) {
      bool last = i + 1 == group.size();
      out.push_back(word_node(group[i], last ? "verb" : "aux", last ? name : "aux",
                              leaf.rules));
    }
    return out;
  }
  if (p == "verb") return {word_node(lex.at(name, "verb").base(), p, name, leaf.rules)};
  InflectFeatures inf{f.number, f.gender};
  return {word_node(lex.inflect(name, p, inf), p, name, leaf.rules)};
}

void realize(TracedTree& t, const Lexicon& lex, const FeatStore& s, Features f) {
  if (auto info = read_info(t.label);
      info && (info->phrase == "np" || info->phrase == "vp" || info->phrase == "rp")) {
    f = Features{};
    if (info->number) f.number = s.value(*info->number).value_or(FeatValue::kSingular);
    if (info->gender) f.gender = s.value(*info->gender);
  }
  std::vector<TracedTree> children;
  children.reserve(t.children.size());
  for (auto& c : t.children) {
    if (c.children.empty() && c.label.functor == "w") {
      for (auto& w : expand_word(c, lex, f)) children.push_back(std::move(w));
    } else {
      realize(c, lex, s, f);
      children.push_back(std::move(c));
    }
  }
  t.children = std::move(children);
}

OrderElement element_of(const TracedTree& c) {
  OrderElement e;
  const Term& l = c.label;
  if (auto info = read_info(l)) {
    e.phrase = info->phrase;
    e.sub = info->sub;
  } else if (l.functor == "word" && l.args.size() == 3) {
    if (const Term* p = atom_arg(l, 1)) e.pos = p->functor;
    if (const Term* x = atom_arg(l, 2)) e.lexeme = x->functor;
  } else if (l.functor == "w" && l.args.size() >= 2) {
    if (const Term* p = atom_arg(l, 0)) e.pos = p->functor;
    if (const Term* x = atom_arg(l, 1)) e.lexeme = x->functor;
  }
  return e;
}

// Canonical feature printing: references numbered by class in order of
// first occurrence.
struct KeyContext {
  const FeatStore* store;
  std::unordered_map<std::uint32_t, std::size_t> index;
};

std::optional<std::string> key_feat(const void* ctx, FeatRef f) {
  auto* k = static_cast<KeyContext*>(const_cast<void*>(ctx));
  auto [it, fresh] = k->index.try_emplace(k->store->root(f), k->index.size());
  std::string out = "F" + std::to_string(it->second);
  if (auto v = k->store->value(f)) out += "=" + std::string(to_string(*v));
  return out;
}

void key_of(const TracedTree& t, const PrintOptions& opts, std::string& out) {
  out += '[';
  out += print_term(t.label, opts);
  for (const auto& c : t.children) {
    out += ',';
    key_of(c, opts, out);
  }
  out += ']';
}

void apply_stage(Stage stage, TracedTree& t, GenContext& ctx, const LanguagePack& pack,
                 const KnowledgeBase& kb, const StepObserver& obs,
                 std::vector<Application>* applied) {
  StageResult r = run_stage(stage, pack.lang, std::move(t), pack.rules, kb, ctx, obs);
  t = std::move(r.tree);
  if (applied != nullptr) *applied = std::move(r.applied);
  switch (stage) {
    case Stage::kStructure2Grammar:
      seed_lexical_gender(t, pack.lexicon, ctx.store);
      break;
    case Stage::kCoordination:
      resolve_coordination(t, ctx.store);
      break;
    case Stage::kInflection:
      default_features(pack.lang, t, ctx.store);
      realize_words(t, pack.lexicon, ctx.store);
      sort_phrases(t, pack.order);
      break;
    default:
      break;
  }
}

std::string surface(const TracedTree& t, const LanguagePack& pack, OutputFormat format,
                    std::size_t pair_cap, WordSeq* words, PairStats* stats) {
  WordSeq w = flatten(strip_trace(t), &pack.markup);
  w = apply_pair_rules(std::move(w), pack.pairs, pair_cap, stats);
  std::string sentence = finalize(w, format, &pack.markup);
  if (words != nullptr) *words = std::move(w);
  return sentence;
}

// Replays choice sequences in lexicographic order. Each position holds the
// rank among the allowed variants (the previous choice of a rule excluded).
class Odometer {
 public:
  ChoiceFn chooser() {
    return [this](const Rule&, std::size_t n, std::optional<std::size_t> last) {
      std::size_t k = last ? n - 1 : n;
      if (pos_ == seq_.size()) seq_.push_back(0);
      if (pos_ == counts_.size()) counts_.push_back(k);
      counts_[pos_] = k;
      std::size_t c = seq_[pos_++];
      if (last && c >= *last) ++c;
      return c;
    };
  }
  void rewind() { pos_ = 0; }
  // True when the path just taken had no alternatives left.
  bool last_path() const {
    for (std::size_t i = 0; i < pos_; ++i) {
      if (seq_[i] + 1 < counts_[i]) return false;
    }
    return true;
  }
  bool advance() {
    seq_.resize(pos_);
    counts_.resize(pos_);
    while (!seq_.empty() && seq_.back() + 1 >= counts_.back()) {
      seq_.pop_back();
      counts_.pop_back();
    }
    if (seq_.empty()) return false;
    ++seq_.back();
    return true;
  }

 private:
  std::vector<std::size_t> seq_;
  std::vector<std::size_t> counts_;
  std::size_t pos_ = 0;
};

struct State {
  TracedTree tree;
  FeatStore store;
};

// Runs every choice path of one stage from `in`, calling `emit` for each
// output not seen before (by canonical key). Stops when `emit` returns
// false.
template <typename Emit>
void explore_stage(Stage stage, const State& in, const LanguagePack& pack,
                   const KnowledgeBase& kb, std::size_t pass_cap, std::size_t max_paths,
                   std::set<std::string>* seen, const StepObserver& obs, const Emit& emit) {
  Odometer od;
  std::size_t paths = 0;
  bool first = true;
  do {
    od.rewind();
    GenContext ctx(0, pass_cap);
    ctx.store = in.store;
    ctx.chooser = od.chooser();
    TracedTree t = in.tree;
    apply_stage(stage, t, ctx, pack, kb, obs, nullptr);
    // A stage with a single path cannot produce duplicates of its own.
    bool single = first && od.last_path();
    first = false;
    if (seen == nullptr || single || seen->insert(canonical_key(t, ctx.store)).second) {
      if (!emit(State{std::move(t), std::move(ctx.store)})) return;
    }
    if (max_paths != 0 && ++paths >= max_paths) return;
  } while (od.advance());
}

}  // namespace

void realize_words(TracedTree& t, const Lexicon& lex, const FeatStore& store) {
  realize(t, lex, store, Features{});
}

void sort_phrases(TracedTree& t, const std::vector<OrderConstraint>& order) {
  for (auto& c : t.children) sort_phrases(c, order);
  auto info = read_info(t.label);
  if (!info || t.children.size() < 2) return;
  std::vector<OrderElement> elements;
  for (const auto& c : t.children) elements.push_back(element_of(c));
  OrderProblem p = build_order_problem(std::move(elements), order, info->phrase, info->sub);
  if (p.edges.empty()) return;
  auto idx = solve_order(p);
  bool identity = true;
  for (std::size_t i = 0; i < idx.size(); ++i) identity = identity && idx[i] == i;
  if (identity) return;
  std::vector<TracedTree> sorted;
  sorted.reserve(idx.size());
  for (auto i : idx) sorted.push_back(std::move(t.children[i]));
  t.children = std::move(sorted);
  t.rules.emplace_back("inflection.order");
}

std::string with_stage(const std::string& message, Stage stage) {
  std::string name(to_string(stage));
  if (message.starts_with(name + ":")) return message;
  return name + ": " + message;
}

std::string canonical_key(const TracedTree& t, const FeatStore& s) {
  KeyContext ctx{&s, {}};
  PrintOptions opts;
  opts.feat_printer = &key_feat;
  opts.feat_ctx = &ctx;
  std::string out;
  key_of(t, opts, out);
  return out;
}

PipelineResult run_pipeline(const Tree& input, const LanguagePack& pack,
                            const KnowledgeBase& kb, GenContext& ctx,
                            const PipelineOptions& opts) {
  PipelineResult res;
  TracedTree t = to_traced(input);
  Stage current = Stage::kEquivConcept;
  try {
    for (Stage stage : kAllStages) {
      current = stage;
      StepObserver obs;
      if (opts.observer) {
        obs = [&](const Application& a, const TracedTree& tree) { opts.observer(stage, a, tree); };
      }
      StageOutput out{stage, {}, {}};
      apply_stage(stage, t, ctx, pack, kb, obs, &out.applied);
      out.tree = t;
      res.stages.push_back(std::move(out));
    }
    res.sentence = surface(t, pack, opts.format, opts.pair_cap, &res.words, &res.pair_stats);
  } catch (const PipelineError&) {
    throw;
  } catch (const Error& e) {
    throw PipelineError(e, current, std::move(res.stages));
  }
  res.store = ctx.store;
  return res;
}

std::vector<std::string> enumerate_derivations(const Tree& t, const LanguagePack& pack,
                                               const KnowledgeBase& kb, std::size_t limit,
                                               const EnumerateOptions& opts) {
  std::vector<std::string> out;
  if (limit == 0) return out;
  std::set<std::string> sentences;
  std::array<std::set<std::string>, kAllStages.size()> seen;

  std::function<bool(std::size_t, const State&)> descend = [&](std::size_t k,
                                                              const State& st) -> bool {
    if (k == kAllStages.size()) {
      std::string s = surface(st.tree, pack, opts.format, 100, nullptr, nullptr);
      if (sentences.insert(s).second) out.push_back(std::move(s));
      return out.size() < limit;
    }
    bool more = true;
    // Sentences are compared directly, so the last stage is not keyed.
    auto* keys = k + 1 < kAllStages.size() ? &seen[k] : nullptr;
    explore_stage(kAllStages[k], st, pack, kb, opts.pass_cap, opts.max_paths, keys,
                  nullptr, [&](State next) {
                    more = descend(k + 1, next);
                    return more;
                  });
    return more;
  };
  descend(0, State{to_traced(t), FeatStore{}});
  return out;
}

std::vector<Tree> enumerate_stage(Stage stage, const Tree& t, const LanguagePack& pack,
                                  const KnowledgeBase& kb, std::size_t limit,
                                  std::vector<Tree>* steps) {
  std::vector<Tree> out;
  std::set<std::string> seen;
  std::set<std::string> step_seen;
  StepObserver obs;
  if (steps != nullptr) {
    obs = [&](const Application&, const TracedTree& tree) {
      Tree plain = strip_trace(tree);
      if (step_seen.insert(print_concept(plain)).second) steps->push_back(std::move(plain));
    };
  }
  explore_stage(stage, State{to_traced(t), FeatStore{}}, pack, kb, kDefaultPassCap, 0, &seen,
                obs, [&](State next) {
                  out.push_back(strip_trace(next.tree));
                  return out.size() < limit;
                });
  return out;
}

}  // namespace c2t
