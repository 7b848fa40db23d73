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

#include "c2t/rule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "c2t/error.hpp"
#include "reader.hpp"

namespace c2t {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kEquivConcept: return "equiv_concept";
    case Stage::kConcept2Structure: return "concept2structure";
    case Stage::kStructure2Grammar: return "structure2grammar";
    case Stage::kCoordination: return "coordination";
    case Stage::kInflection: return "inflection";
    case Stage::kSyntax: return "syntax";
  }
  return "?";
}

std::optional<Stage> stage_from(std::string_view s) {
  for (Stage st : kAllStages) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

bool is_shared_stage(Stage s) {
  return s == Stage::kEquivConcept || s == Stage::kConcept2Structure ||
         s == Stage::kCoordination;
}

TracedTree to_traced(const Tree& t) {
  TracedTree out{t.label, {}, {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(to_traced(c));
  return out;
}

Tree strip_trace(const TracedTree& t) {
  Tree out(t.label);
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(strip_trace(c));
  return out;
}

TraceTree trace_of(const TracedTree& t) {
  TraceTree out{t.rules, {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(trace_of(c));
  return out;
}

bool same_shape(const Tree& t, const TraceTree& trace) {
  if (t.children.size() != trace.children.size()) return false;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (!same_shape(t.children[i], trace.children[i])) return false;
  }
  return true;
}

const Bound* Binding::get(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

const Arg* Binding::arg(const std::string& name) const {
  const Bound* b = get(name);
  return b != nullptr ? std::get_if<Arg>(b) : nullptr;
}

const TracedTree* Binding::tree(const std::string& name) const {
  const Bound* b = get(name);
  return b != nullptr ? std::get_if<TracedTree>(b) : nullptr;
}

const std::vector<TracedTree>* Binding::list(const std::string& name) const {
  const Bound* b = get(name);
  return b != nullptr ? std::get_if<std::vector<TracedTree>>(b) : nullptr;
}

namespace {

using detail::Reader;

bool next_is_var(Reader& r) {
  char c = r.peek();
  return (c >= 'A' && c <= 'Z') || c == '_';
}

std::string read_var_name(Reader& r) {
  Arg a = r.read_arg();
  const Var* v = a.var();
  if (v == nullptr || v->fresh) r.fail("variable");
  return v->name;
}

TreePattern read_pattern_item(Reader& r, bool child);

TreePattern read_list_pattern(Reader& r) {
  r.expect('[');
  TreePattern p;
  p.kind = TreePattern::Kind::kNode;
  p.root = r.read_arg();
  if (p.root.var() == nullptr && p.root.term() == nullptr) r.fail("term or variable");
  if (const Var* v = p.root.var(); v != nullptr && v->fresh) r.fail("pattern variable");
  while (r.consume(',')) {
    if (r.consume("...")) {
      p.rest = read_var_name(r);
      if (r.peek() != ']') r.fail("']' after rest variable");
      break;
    }
    p.items.push_back(read_pattern_item(r, true));
  }
  r.expect(']');
  return p;
}

TreePattern read_pattern_item(Reader& r, bool child) {
  if (child && r.consume('?')) {
    std::string name = read_var_name(r);
    r.expect(':');
    TreePattern p = read_pattern_item(r, false);
    if (p.bind) r.fail("single binding per optional child");
    p.bind = name;
    p.optional = true;
    return p;
  }
  if (r.peek() == '[') return read_list_pattern(r);
  if (next_is_var(r)) {
    std::string name = read_var_name(r);
    if (r.peek() == '=' ) {
      r.expect('=');
      TreePattern p = read_pattern_item(r, false);
      if (p.bind) r.fail("single binding per child");
      p.bind = name;
      return p;
    }
    TreePattern p;
    p.kind = TreePattern::Kind::kAny;
    if (name != "_") p.bind = name;
    return p;
  }
  TreePattern p;
  p.kind = TreePattern::Kind::kLabelOnly;
  p.root = Arg(r.read_term());
  return p;
}

TreeTemplate read_template_item(Reader& r) {
  TreeTemplate t;
  if (r.consume("...")) {
    t.kind = TreeTemplate::Kind::kSplice;
    t.var = read_var_name(r);
    return t;
  }
  bool is_if = r.consume_keyword("if");
  if (is_if || r.consume_keyword("unless")) {
    t.kind = is_if ? TreeTemplate::Kind::kIf : TreeTemplate::Kind::kUnless;
    t.var = read_var_name(r);
    r.expect(':');
    t.children.push_back(read_template_item(r));
    return t;
  }
  if (r.consume('[')) {
    t.kind = TreeTemplate::Kind::kNode;
    t.label = r.read_arg();
    if (t.label.var() == nullptr && t.label.term() == nullptr) r.fail("term or variable");
    while (r.consume(',')) t.children.push_back(read_template_item(r));
    r.expect(']');
    return t;
  }
  if (next_is_var(r)) {
    t.kind = TreeTemplate::Kind::kVar;
    t.var = read_var_name(r);
    if (t.var == "_") r.fail("named variable");
    return t;
  }
  t.kind = TreeTemplate::Kind::kNode;
  t.label = Arg(r.read_term());
  return t;
}

Guard make_guard(const Term& t, std::size_t pos) {
  Guard g;
  g.args = t.args;
  auto need = [&](std::size_t n) {
    if (g.args.size() != n)
      throw SyntaxError(pos, "guard " + t.functor + " takes " + std::to_string(n) + " arguments");
  };
  if (t.functor == "isa_parent") {
    g.kind = Guard::Kind::kIsaParent;
    need(2);
  } else if (t.functor == "isa") {
    g.kind = Guard::Kind::kIsaQuery;
    need(2);
  } else if (t.functor == "equiv") {
    g.kind = Guard::Kind::kEquiv;
    need(2);
  } else if (t.functor == "lt" || t.functor == "le" || t.functor == "gt" ||
             t.functor == "ge" || t.functor == "eq" || t.functor == "ne") {
    g.kind = Guard::Kind::kNumCompare;
    g.op = t.functor;
    need(2);
  } else if (t.functor == "present" || t.functor == "absent") {
    g.kind = t.functor == "present" ? Guard::Kind::kPresent : Guard::Kind::kAbsent;
    need(1);
    if (g.args[0].var() == nullptr) throw SyntaxError(pos, t.functor + " needs a variable");
  } else {
    throw SyntaxError(pos, "unknown guard '" + t.functor + "'");
  }
  if ((g.kind == Guard::Kind::kIsaParent || g.kind == Guard::Kind::kEquiv) &&
      (g.args[1].var() == nullptr || g.args[1].var()->name == "_")) {
    throw SyntaxError(pos, t.functor + " needs an output variable");
  }
  return g;
}

void collect_term_vars(const Arg& a, std::vector<std::string>& out) {
  if (const Var* v = a.var()) {
    if (v->name != "_" && !v->fresh) out.push_back(v->name);
    return;
  }
  if (const Term* t = a.term()) {
    for (const auto& x : t->args) collect_term_vars(x, out);
  }
}

void collect_pattern_vars(const TreePattern& p, std::vector<std::string>& out) {
  if (p.bind) out.push_back(*p.bind);
  if (p.kind != TreePattern::Kind::kAny) collect_term_vars(p.root, out);
  for (const auto& item : p.items) collect_pattern_vars(item, out);
  if (p.rest) out.push_back(*p.rest);
}

void collect_template_vars(const TreeTemplate& t, std::vector<std::string>& out) {
  switch (t.kind) {
    case TreeTemplate::Kind::kNode:
      collect_term_vars(t.label, out);
      break;
    case TreeTemplate::Kind::kVar:
    case TreeTemplate::Kind::kSplice:
      out.push_back(t.var);
      break;
    case TreeTemplate::Kind::kIf:
    case TreeTemplate::Kind::kUnless:
      break;  // the condition may legitimately be unbound
  }
  for (const auto& c : t.children) collect_template_vars(c, out);
}

// Variables usable only under `if`/`unless` of themselves are fine even if
// they come from a soft guard; the static check treats soft outputs as bound.
void collect_guard_outputs(const Guard& g, std::vector<std::string>& out) {
  if (g.kind == Guard::Kind::kIsaParent || g.kind == Guard::Kind::kEquiv)
    out.push_back(g.args[1].var()->name);
}

}  // namespace

TreePattern parse_pattern(std::string_view text) {
  Reader r(text, true);
  TreePattern p = read_pattern_item(r, false);
  if (!r.at_end()) r.fail("end of pattern");
  return p;
}

TreeTemplate parse_template(std::string_view text) {
  Reader r(text, true);
  TreeTemplate t = read_template_item(r);
  if (!r.at_end()) r.fail("end of template");
  if (t.kind == TreeTemplate::Kind::kSplice || t.kind == TreeTemplate::Kind::kIf ||
      t.kind == TreeTemplate::Kind::kUnless)
    throw SyntaxError(0, "a variant must produce exactly one tree");
  return t;
}

Guard parse_guard(std::string_view text) {
  Reader r(text, true);
  bool soft = r.consume_keyword("try");
  Term t = r.read_term();
  if (!r.at_end()) r.fail("end of guard");
  Guard g = make_guard(t, 0);
  g.soft = soft;
  return g;
}

std::vector<std::string> pattern_vars(const TreePattern& p,
                                      std::vector<std::string>* duplicates) {
  std::vector<std::string> all;
  collect_pattern_vars(p, all);
  std::vector<std::string> out;
  for (auto& v : all) {
    if (std::find(out.begin(), out.end(), v) != out.end()) {
      if (duplicates != nullptr) duplicates->push_back(v);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::string> template_vars(const TreeTemplate& t) {
  std::vector<std::string> all;
  collect_template_vars(t, all);
  std::vector<std::string> out;
  for (auto& v : all) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void check_rule(const Rule& r) {
  std::string where = r.name + (r.source.empty() ? "" : " (" + r.source + ")");
  if (r.variants.empty()) throw RuleValidation(where + ": no variants");
  std::vector<std::string> dups;
  auto bound = pattern_vars(r.pattern, &dups);
  if (!dups.empty()) throw RuleValidation(where + ": variable " + dups[0] + " bound twice");
  for (const auto& g : r.guards) {
    std::vector<std::string> used;
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      bool is_output = i == 1 && (g.kind == Guard::Kind::kIsaParent ||
                                  g.kind == Guard::Kind::kEquiv);
      if (!is_output) collect_term_vars(g.args[i], used);
    }
    for (const auto& v : used) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end())
        throw RuleValidation(where + ": guard uses unbound variable " + v);
    }
    collect_guard_outputs(g, bound);
  }
  for (std::size_t i = 0; i < r.variants.size(); ++i) {
    for (const auto& v : template_vars(r.variants[i])) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end())
        throw RuleValidation(where + ": variant " + std::to_string(i + 1) +
                             " uses unbound variable " + v);
    }
  }
}

std::vector<Rule> parse_rules(std::string_view text, Stage stage,
                              std::optional<std::string> lang,
                              std::string_view source_name) {
  struct Clause {
    std::string keyword;
    std::string body;
    std::size_t line;
  };
  std::vector<Rule> rules;
  std::optional<Rule> current;
  std::vector<Clause> clauses;

  auto at = [&](std::size_t line) {
    return std::string(source_name) + ":" + std::to_string(line);
  };
  auto flush_clause = [&](const Clause& c) {
    try {
      if (c.keyword == "match") {
        current->pattern = parse_pattern(c.body);
      } else if (c.keyword == "guard") {
        current->guards.push_back(parse_guard(c.body));
      } else if (c.keyword == "variant") {
        current->variants.push_back(parse_template(c.body));
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(c.line, std::string(source_name) + ": rule " + current->name +
                                    ": " + c.keyword + ": " + e.what());
    }
  };
  auto finish_rule = [&] {
    for (const auto& c : clauses) flush_clause(c);
    clauses.clear();
    check_rule(*current);
    rules.push_back(std::move(*current));
    current.reset();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool saw_match = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string trimmed = line.substr(first);
    std::string keyword = trimmed.substr(0, trimmed.find_first_of(" \t"));
    std::string rest =
        keyword.size() < trimmed.size() ? trimmed.substr(keyword.size() + 1) : "";
    if (keyword == "rule") {
      if (current) throw SyntaxError(lineno, at(lineno) + ": missing 'end' before new rule");
      std::istringstream head(rest);
      std::string name, kw, code;
      head >> name;
      if (name.empty() || !is_plain_symbol(name))
        throw SyntaxError(lineno, at(lineno) + ": bad rule name");
      current.emplace();
      current->name = name;
      current->stage = stage;
      current->lang = lang;
      current->source = at(lineno);
      if (head >> kw) {
        if (kw != "lang" || !(head >> code))
          throw SyntaxError(lineno, at(lineno) + ": expected 'lang <code>'");
        current->lang = code;
      }
      saw_match = false;
    } else if (keyword == "match" || keyword == "guard" || keyword == "variant") {
      if (!current) throw SyntaxError(lineno, at(lineno) + ": " + keyword + " outside rule");
      if (keyword == "match") {
        if (saw_match) throw SyntaxError(lineno, at(lineno) + ": second match clause");
        saw_match = true;
      }
      clauses.push_back({keyword, rest, lineno});
    } else if (keyword == "end") {
      if (!current) throw SyntaxError(lineno, at(lineno) + ": 'end' outside rule");
      if (!saw_match) throw SyntaxError(lineno, at(lineno) + ": rule without match");
      finish_rule();
    } else {
      if (clauses.empty()) throw SyntaxError(lineno, at(lineno) + ": unexpected text");
      clauses.back().body += "\n" + line;
    }
  }
  if (current) throw SyntaxError(lineno, at(lineno) + ": missing 'end'");
  return rules;
}

}  // namespace c2t
