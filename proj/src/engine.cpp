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

#include "c2t/engine.hpp"

#include <deque>
#include <map>

#include "c2t/error.hpp"

namespace c2t {

namespace {

bool match_arg(const Arg& pat, const Arg& val, Binding& b) {
  if (const Var* v = pat.var()) {
    if (v->name == "_") return true;
    if (const Bound* prev = b.get(v->name)) {
      const Arg* a = std::get_if<Arg>(prev);
      return a != nullptr && *a == val;
    }
    b.set(v->name, val);
    return true;
  }
  if (const Term* pt = pat.term()) {
    const Term* vt = val.term();
    if (vt == nullptr || vt->functor != pt->functor ||
        vt->args.size() != pt->args.size()) {
      return false;
    }
    for (std::size_t i = 0; i < pt->args.size(); ++i) {
      if (!match_arg(pt->args[i], vt->args[i], b)) return false;
    }
    return true;
  }
  return pat == val;
}

// Cheap rejection before any binding is copied.
bool label_may_match(const Arg& root, const Term& label) {
  const Term* t = root.term();
  return t == nullptr ||
         (t->functor == label.functor && t->args.size() == label.args.size());
}

bool match_node(const TreePattern& p, const TracedTree& t, Binding& b);

bool match_children(const TreePattern& p, const TracedTree& t, Binding& b) {
  std::vector<bool> used(t.children.size(), false);
  for (const auto& item : p.items) {
    bool found = false;
    for (std::size_t i = 0; i < t.children.size() && !found; ++i) {
      if (used[i]) continue;
      if (item.kind != TreePattern::Kind::kAny &&
          !label_may_match(item.root, t.children[i].label)) {
        continue;
      }
      std::size_t m = b.mark();
      if (!match_node(item, t.children[i], b)) {
        b.rollback(m);
      } else {
        used[i] = true;
        found = true;
        if (item.optional && item.bind) {
          b.set(*item.bind, std::vector<TracedTree>{t.children[i]});
        }
      }
    }
    if (!found) {
      if (!item.optional) return false;
      if (item.bind) b.set(*item.bind, std::vector<TracedTree>{});
    }
  }
  if (p.rest) {
    std::vector<TracedTree> rest;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (!used[i]) rest.push_back(t.children[i]);
    }
    b.set(*p.rest, std::move(rest));
  }
  return true;
}

bool match_node(const TreePattern& p, const TracedTree& t, Binding& b) {
  switch (p.kind) {
    case TreePattern::Kind::kAny:
      break;
    case TreePattern::Kind::kLabelOnly:
      if (!match_arg(p.root, Arg(t.label), b)) return false;
      break;
    case TreePattern::Kind::kNode:
      if (!match_arg(p.root, Arg(t.label), b)) return false;
      if (!match_children(p, t, b)) return false;
      break;
  }
  // Optional items bind a list; the caller handles that case.
  if (p.bind && !p.optional) {
    if (b.has(*p.bind)) return false;
    b.set(*p.bind, t);
  }
  return true;
}

// Resolves variables in an argument. Variables bound to trees stand for
// their label. Returns nullopt when a variable is unbound.
std::optional<Arg> resolve(const Arg& a, const Binding& b) {
  if (const Var* v = a.var()) {
    const Bound* bound = b.get(v->name);
    if (bound == nullptr) return std::nullopt;
    if (const Arg* x = std::get_if<Arg>(bound)) return *x;
    if (const TracedTree* t = std::get_if<TracedTree>(bound)) return Arg(t->label);
    const auto& list = std::get<std::vector<TracedTree>>(*bound);
    if (list.size() == 1) return Arg(list.front().label);
    return std::nullopt;
  }
  if (const Term* t = a.term()) {
    Term out(t->functor);
    for (const auto& x : t->args) {
      auto r = resolve(x, b);
      if (!r) return std::nullopt;
      out.args.push_back(std::move(*r));
    }
    return Arg(std::move(out));
  }
  return a;
}

std::optional<double> as_number(const Arg& a) {
  if (const auto* i = a.integer()) return static_cast<double>(*i);
  if (const auto* d = a.decimal()) return *d;
  return std::nullopt;
}

bool is_present(const Binding& b, const Arg& a) {
  const Var* v = a.var();
  if (v == nullptr) return true;
  const Bound* bound = b.get(v->name);
  if (bound == nullptr) return false;
  if (const auto* list = std::get_if<std::vector<TracedTree>>(bound)) {
    return !list->empty();
  }
  return true;
}

bool bind_output(Binding& b, const Arg& out, Arg value) {
  return match_arg(out, value, b);
}

bool eval_guard(const Guard& g, Binding& b, const KnowledgeBase& kb) {
  switch (g.kind) {
    case Guard::Kind::kPresent:
      return is_present(b, g.args.at(0));
    case Guard::Kind::kAbsent:
      return !is_present(b, g.args.at(0));
    case Guard::Kind::kIsaParent: {
      auto c = resolve(g.args.at(0), b);
      if (!c || c->term() == nullptr) return false;
      auto parent = kb.isa_parent(c->term()->functor);
      if (!parent) return false;
      return bind_output(b, g.args.at(1), Arg(atom(*parent)));
    }
    case Guard::Kind::kIsaQuery: {
      auto c = resolve(g.args.at(0), b);
      auto anc = resolve(g.args.at(1), b);
      if (!c || !anc || c->term() == nullptr || anc->term() == nullptr) return false;
      return kb.isa_query(c->term()->functor, anc->term()->functor);
    }
    case Guard::Kind::kEquiv: {
      auto t = resolve(g.args.at(0), b);
      if (!t || t->term() == nullptr) return false;
      auto to = kb.equiv_of(*t->term());
      if (!to) return false;
      return bind_output(b, g.args.at(1), Arg(*to));
    }
    case Guard::Kind::kNumCompare: {
      auto x = resolve(g.args.at(0), b);
      auto y = resolve(g.args.at(1), b);
      if (!x || !y) return false;
      auto dx = as_number(*x);
      auto dy = as_number(*y);
      if (!dx || !dy) {
        if (g.op == "eq") return *x == *y;
        if (g.op == "ne") return !(*x == *y);
        return false;
      }
      if (g.op == "lt") return *dx < *dy;
      if (g.op == "le") return *dx <= *dy;
      if (g.op == "gt") return *dx > *dy;
      if (g.op == "ge") return *dx >= *dy;
      if (g.op == "eq") return *dx == *dy;
      return *dx != *dy;
    }
  }
  return false;
}

class Instantiator {
 public:
  Instantiator(const Binding& b, FeatStore& store, std::string_view rule)
      : b_(b), store_(store), rule_(rule) {}

  TracedTree root(const TreeTemplate& tpl) {
    auto items = expand(tpl);
    if (items.size() != 1) {
      throw UnboundVariable("template root must be exactly one tree in rule " +
                            rule_);
    }
    TracedTree out = std::move(items.front());
    if (tpl.kind != TreeTemplate::Kind::kNode) annotate(out);
    return out;
  }

 private:
  void annotate(TracedTree& t) const {
    if (!rule_.empty() && (t.rules.empty() || t.rules.back() != rule_)) {
      t.rules.push_back(rule_);
    }
  }

  TracedTree leaf(Term label) const {
    TracedTree t;
    t.label = std::move(label);
    annotate(t);
    return t;
  }

  [[noreturn]] void unbound(const std::string& name) const {
    throw UnboundVariable("variable " + name + " is unbound in rule " + rule_);
  }

  Arg subst(const Arg& a) {
    if (const Var* v = a.var()) {
      if (v->fresh) {
        auto it = fresh_.find(v->name);
        if (it == fresh_.end()) it = fresh_.emplace(v->name, store_.fresh()).first;
        return Arg(it->second);
      }
      auto r = resolve(a, b_);
      if (!r) unbound(v->name);
      return *r;
    }
    if (const Term* t = a.term()) {
      Term out(t->functor);
      for (const auto& x : t->args) out.args.push_back(subst(x));
      return Arg(std::move(out));
    }
    return a;
  }

  Term label(const Arg& a) {
    Arg r = subst(a);
    const Term* t = r.term();
    if (t == nullptr) {
      throw UnboundVariable("node label is not a term in rule " + rule_);
    }
    Term out = *t;
    // Feature slots of phrase info written as plain values become fresh
    // resolved variables so coordination can unify them.
    if (out.functor == "info" && out.args.size() == 4) {
      for (std::size_t i = 2; i < 4; ++i) {
        const Term* v = out.args[i].term();
        if (v == nullptr || !v->is_atom()) continue;
        if (auto fv = feat_value_from(v->functor)) out.args[i] = Arg(store_.fresh(*fv));
      }
    }
    return out;
  }

  std::vector<TracedTree> from_var(const std::string& name, bool splice) {
    const Bound* bound = b_.get(name);
    if (bound == nullptr) unbound(name);
    if (const auto* list = std::get_if<std::vector<TracedTree>>(bound)) {
      return *list;
    }
    if (const auto* t = std::get_if<TracedTree>(bound)) return {*t};
    if (splice) unbound(name);
    return {leaf(label(std::get<Arg>(*bound)))};
  }

  std::vector<TracedTree> expand(const TreeTemplate& tpl) {
    switch (tpl.kind) {
      case TreeTemplate::Kind::kVar:
        return from_var(tpl.var, false);
      case TreeTemplate::Kind::kSplice:
        return from_var(tpl.var, true);
      case TreeTemplate::Kind::kIf:
      case TreeTemplate::Kind::kUnless: {
        bool present = is_present(b_, Arg(Var{tpl.var}));
        if (present != (tpl.kind == TreeTemplate::Kind::kIf)) return {};
        std::vector<TracedTree> out;
        for (const auto& c : tpl.children) {
          auto part = expand(c);
          for (auto& p : part) out.push_back(std::move(p));
        }
        return out;
      }
      case TreeTemplate::Kind::kNode: {
        TracedTree t = leaf(label(tpl.label));
        for (const auto& c : tpl.children) {
          auto part = expand(c);
          for (auto& p : part) t.children.push_back(std::move(p));
        }
        return {std::move(t)};
      }
    }
    return {};
  }

  const Binding& b_;
  FeatStore& store_;
  std::string rule_;
  std::map<std::string, FeatRef> fresh_;
};

bool rule_applies_to(const Rule& r, Stage stage, std::string_view lang) {
  return r.stage == stage && (!r.lang || *r.lang == lang);
}

TracedTree& node_at(TracedTree& t, const Address& a) {
  TracedTree* cur = &t;
  for (std::size_t i : a) cur = &cur->children.at(i);
  return *cur;
}

}  // namespace

std::optional<Binding> match_pattern(const TreePattern& p, const TracedTree& t) {
  if (p.kind != TreePattern::Kind::kAny && !label_may_match(p.root, t.label)) {
    return std::nullopt;
  }
  Binding b;
  if (!match_node(p, t, b)) return std::nullopt;
  return b;
}

std::optional<Binding> match_pattern(const TreePattern& p, const Tree& t) {
  return match_pattern(p, to_traced(t));
}

bool eval_guards(const std::vector<Guard>& guards, Binding& b,
                 const KnowledgeBase& kb) {
  for (const auto& g : guards) {
    std::size_t m = b.mark();
    if (!eval_guard(g, b, kb)) {
      b.rollback(m);
      if (!g.soft) return false;
    }
  }
  return true;
}

TracedTree instantiate(const TreeTemplate& tpl, const Binding& b, FeatStore& store,
                       std::string_view rule_name) {
  return Instantiator(b, store, rule_name).root(tpl);
}

std::optional<std::vector<Tree>> apply_rule(const Rule& r, const Tree& t,
                                            const KnowledgeBase& kb,
                                            FeatStore& store) {
  auto b = match_pattern(r.pattern, t);
  if (!b || !eval_guards(r.guards, *b, kb)) return std::nullopt;
  std::vector<Tree> out;
  for (const auto& v : r.variants) {
    out.push_back(strip_trace(instantiate(v, *b, store, r.name)));
  }
  return out;
}

std::size_t select_variant(const Rule& r, std::size_t n, GenContext& ctx) {
  if (n <= 1) {
    ctx.history[r.name] = 0;
    return 0;
  }
  std::optional<std::size_t> last;
  if (auto it = ctx.history.find(r.name); it != ctx.history.end() && it->second < n) {
    last = it->second;
  }
  std::size_t pick = 0;
  if (ctx.chooser) {
    pick = ctx.chooser(r, n, last);
  } else {
    std::size_t k = last ? n - 1 : n;
    pick = static_cast<std::size_t>(ctx.rng() % k);
    if (last && pick >= *last) ++pick;
  }
  ctx.history[r.name] = pick;
  return pick;
}

Tree select_variant(const Rule& r, const std::vector<Tree>& variants,
                    GenContext& ctx) {
  return variants.at(select_variant(r, variants.size(), ctx));
}

StageResult run_stage(Stage stage, std::string_view lang, TracedTree t,
                      const std::vector<Rule>& rules, const KnowledgeBase& kb,
                      GenContext& ctx, const StepObserver& observer) {
  std::vector<const Rule*> active;
  for (const auto& r : rules) {
    if (rule_applies_to(r, stage, lang)) active.push_back(&r);
  }
  StageResult res;
  if (active.empty()) {
    res.tree = std::move(t);
    return res;
  }
  for (std::size_t pass = 0;; ++pass) {
    if (pass >= ctx.pass_cap) {
      throw StageDivergence(std::string(to_string(stage)) + ": no fixpoint after " +
                            std::to_string(ctx.pass_cap) + " passes");
    }
    bool fired = false;
    std::deque<Address> queue{Address{}};
    while (!queue.empty()) {
      Address addr = std::move(queue.front());
      queue.pop_front();
      TracedTree& node = node_at(t, addr);
      for (const Rule* r : active) {
        auto b = match_pattern(r->pattern, node);
        if (!b || !eval_guards(r->guards, *b, kb)) continue;
        std::size_t idx = select_variant(*r, r->variants.size(), ctx);
        TracedTree repl = instantiate(r->variants[idx], *b, ctx.store, r->name);
        std::vector<std::string> merged = node.rules;
        for (auto& name : repl.rules) {
          if (merged.empty() || merged.back() != name) merged.push_back(name);
        }
        repl.rules = std::move(merged);
        node = std::move(repl);
        Application app{addr, r->name, idx, pass};
        res.applied.push_back(app);
        fired = true;
        if (observer) observer(app, t);
        break;
      }
      const TracedTree& cur = node_at(t, addr);
      for (std::size_t i = 0; i < cur.children.size(); ++i) {
        Address child = addr;
        child.push_back(i);
        queue.push_back(std::move(child));
      }
    }
    res.passes = pass + 1;
    if (!fired) break;
  }
  res.tree = std::move(t);
  return res;
}

}  // namespace c2t
