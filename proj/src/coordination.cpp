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

#include "c2t/coordination.hpp"

#include <vector>

#include "c2t/error.hpp"

namespace c2t {

namespace {

std::string addr_string(const Address& a) {
  std::string out;
  for (auto i : a) out += "/" + std::to_string(i);
  return out.empty() ? "/" : out;
}

struct Visit {
  TracedTree* node;
  Address addr;
  std::vector<std::size_t> ancestors;  // indices into the preorder list
};

void preorder(TracedTree& t, Address& addr, std::vector<std::size_t>& stack,
              std::vector<Visit>& out) {
  std::size_t me = out.size();
  out.push_back({&t, addr, stack});
  stack.push_back(me);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    addr.push_back(i);
    preorder(t.children[i], addr, stack, out);
    addr.pop_back();
  }
  stack.pop_back();
}

void unify_pair(FeatStore& s, std::optional<FeatRef> a, std::optional<FeatRef> b,
                const Address& where_a, const Address& where_b) {
  if (!a || !b) return;
  try {
    s.unify(*a, *b);
  } catch (const UnifyConflict& e) {
    throw UnifyConflict(std::string(e.what()) + " between " + addr_string(where_a) +
                        " and " + addr_string(where_b));
  }
}

void mark(TracedTree& t, const char* name) {
  if (t.rules.empty() || t.rules.back() != name) t.rules.emplace_back(name);
}

void remove_svc(TracedTree& t) {
  std::erase_if(t.children, [](const TracedTree& c) { return is_svc(c.label); });
  for (auto& c : t.children) remove_svc(c);
}

template <typename Fn>
void each_info(const TracedTree& t, const Fn& fn) {
  if (auto info = read_info(t.label)) fn(t, *info);
  for (const auto& c : t.children) each_info(c, fn);
}

}  // namespace

std::optional<InfoView> read_info(const Term& label) {
  if (label.functor != "info" || label.args.size() != 4) return std::nullopt;
  InfoView v;
  if (const Term* p = label.args[0].term()) v.phrase = p->functor;
  if (const Term* s = label.args[1].term()) v.sub = s->functor;
  if (const FeatRef* g = label.args[2].feat()) v.gender = *g;
  if (const FeatRef* n = label.args[3].feat()) v.number = *n;
  return v;
}

bool is_svc(const Term& label) {
  return label.functor == "svc" && label.args.size() == 1;
}

void resolve_coordination(TracedTree& t, FeatStore& s) {
  std::vector<Visit> nodes;
  Address addr;
  std::vector<std::size_t> stack;
  preorder(t, addr, stack, nodes);
  // Subtree size of every preorder entry, so siblings can be stepped over.
  std::vector<std::size_t> sizes(nodes.size(), 1);
  for (std::size_t j = nodes.size(); j-- > 0;) {
    if (!nodes[j].ancestors.empty()) sizes[nodes[j].ancestors.back()] += sizes[j];
  }

  // Subject and verb phrases that are siblings agree.
  for (auto& v : nodes) {
    TracedTree& parent = *v.node;
    const TracedTree* subject = nullptr;
    std::size_t subject_index = 0;
    for (std::size_t i = 0; i < parent.children.size(); ++i) {
      auto info = read_info(parent.children[i].label);
      if (info && info->phrase == "np" && info->sub == "subject") {
        subject = &parent.children[i];
        subject_index = i;
        break;
      }
    }
    if (subject == nullptr) continue;
    auto np = *read_info(subject->label);
    for (std::size_t i = 0; i < parent.children.size(); ++i) {
      auto info = read_info(parent.children[i].label);
      if (!info || info->phrase != "vp") continue;
      Address a = v.addr, b = v.addr;
      a.push_back(subject_index);
      b.push_back(i);
      unify_pair(s, np.number, info->number, a, b);
      unify_pair(s, np.gender, info->gender, a, b);
      mark(parent.children[i], "coordination.subject_verb");
    }
  }

  // Service requests.
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Term& label = nodes[k].node->label;
    if (!is_svc(label)) continue;
    const Term* req = label.args[0].term();
    const Term* sel = (req != nullptr && req->functor == "agree" && req->args.size() == 1)
                          ? req->args[0].term()
                          : nullptr;
    if (sel == nullptr) {
      throw MissingAntecedent("unknown service request " + print_term(label) + " at " +
                              addr_string(nodes[k].addr));
    }
    // The requesting phrase is the nearest info ancestor.
    std::optional<std::size_t> target;
    for (auto it = nodes[k].ancestors.rbegin(); it != nodes[k].ancestors.rend(); ++it) {
      if (read_info(nodes[*it].node->label)) {
        target = *it;
        break;
      }
    }
    if (!target) {
      throw MissingAntecedent("service request outside any phrase at " +
                              addr_string(nodes[k].addr));
    }
    std::optional<std::size_t> source;
    if (sel->functor == "antecedent_np") {
      for (std::size_t j = *target; j-- > 0;) {
        auto info = read_info(nodes[j].node->label);
        if (info && info->phrase == "np") {
          source = j;
          break;
        }
      }
    } else if (sel->functor == "subject_np") {
      const auto& chain = nodes[*target].ancestors;
      for (auto it = chain.rbegin(); it != chain.rend() && !source; ++it) {
        std::size_t end = *it + sizes[*it];
        for (std::size_t j = *it + 1; j < end; j += sizes[j]) {
          auto info = read_info(nodes[j].node->label);
          if (j != *target && info && info->phrase == "np" && info->sub == "subject") {
            source = j;
            break;
          }
        }
      }
    } else {
      throw MissingAntecedent("unknown agreement selector " + sel->functor);
    }
    if (!source) {
      throw MissingAntecedent(sel->functor + " not found for phrase at " +
                              addr_string(nodes[*target].addr));
    }
    auto to = *read_info(nodes[*target].node->label);
    auto from = *read_info(nodes[*source].node->label);
    unify_pair(s, from.gender, to.gender, nodes[*source].addr, nodes[*target].addr);
    unify_pair(s, from.number, to.number, nodes[*source].addr, nodes[*target].addr);
    mark(*nodes[*target].node, "coordination.agree");
  }
  remove_svc(t);
}

std::pair<Tree, FeatStore> resolve_coordination(const Tree& t, FeatStore s) {
  TracedTree tt = to_traced(t);
  resolve_coordination(tt, s);
  return {strip_trace(tt), std::move(s)};
}

void default_features(std::string_view lang, const TracedTree& t, FeatStore& s) {
  FeatValue gender = lang == "en" ? FeatValue::kNeut : FeatValue::kMasc;
  each_info(t, [&](const TracedTree&, const InfoView& info) {
    if (info.gender && !s.value(*info.gender)) s.bind(*info.gender, gender);
    if (info.number && !s.value(*info.number)) s.bind(*info.number, FeatValue::kSingular);
  });
}

FeatStore default_features(std::string_view lang, const Tree& t, FeatStore s) {
  default_features(lang, to_traced(t), s);
  return s;
}

void seed_lexical_gender(const TracedTree& t, const Lexicon& lex, FeatStore& s) {
  each_info(t, [&](const TracedTree& node, const InfoView& info) {
    if (info.phrase != "np" || !info.gender || s.value(*info.gender)) return;
    for (const auto& c : node.children) {
      const Term& l = c.label;
      if (l.functor != "w" || l.args.size() < 2) continue;
      const Term* pos = l.args[0].term();
      const Term* lexeme = l.args[1].term();
      if (pos == nullptr || lexeme == nullptr || pos->functor != "noun") continue;
      const LexEntry* e = lex.find(lexeme->functor, "noun");
      if (e != nullptr && e->gender) s.bind(*info.gender, *e->gender);
      return;
    }
  });
}

}  // namespace c2t
