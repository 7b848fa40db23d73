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

#include "c2t/packs.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "c2t/engine.hpp"
#include "c2t/error.hpp"

namespace c2t {

namespace fs = std::filesystem;

namespace {

struct RuleFile {
  const char* name;
  Stage stage;
  bool required;
};

constexpr RuleFile kRuleFiles[] = {
    {"rules.equiv", Stage::kEquivConcept, true},
    {"rules.structure", Stage::kConcept2Structure, true},
    {"rules.grammar", Stage::kStructure2Grammar, true},
    {"rules.coord", Stage::kCoordination, true},
    {"rules.inflect", Stage::kInflection, true},
    {"rules.syntax", Stage::kSyntax, false},
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw MissingResource("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Manifest {
  std::string lang;
  std::optional<fs::path> shared;
  MarkupConfig markup;
};

Manifest parse_manifest(const std::string& text, const fs::path& dir) {
  Manifest m;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    auto bad = [&](const std::string& msg) {
      return SyntaxError(lineno, (dir / "manifest").string() + ":" +
                                     std::to_string(lineno) + ": " + msg);
    };
    if (key == "lang") {
      if (!(ls >> m.lang)) throw bad("expected language code");
    } else if (key == "shared") {
      std::string d;
      if (!(ls >> std::quoted(d))) throw bad("expected directory");
      m.shared = dir / d;
    } else if (key == "markup") {
      std::string k;
      MarkupConfig::Tags tags;
      if (!(ls >> k >> std::quoted(tags.open) >> std::quoted(tags.close))) {
        throw bad("expected 'markup <key> <open> <close>'");
      }
      m.markup.tags[k] = tags;
    } else {
      throw bad("unknown manifest key '" + key + "'");
    }
  }
  if (m.lang.empty()) throw SyntaxError(0, (dir / "manifest").string() + ": no lang");
  return m;
}

template <typename Fn>
auto with_file(const fs::path& p, const Fn& fn) {
  try {
    return fn(read_file(p));
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.position(), p.string() + ":" + std::to_string(e.position()) +
                                        ": " + e.what());
  }
}

// Ground instance of a pattern: variables become placeholder atoms.
Arg ground(const Arg& a) {
  if (const Var* v = a.var()) {
    std::string name = "v";
    for (char c : v->name) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return Arg(atom(name));
  }
  if (const Term* t = a.term()) {
    Term out(t->functor);
    for (const auto& x : t->args) out.args.push_back(ground(x));
    return Arg(std::move(out));
  }
  return a;
}

TracedTree instance_of(const TreePattern& p) {
  TracedTree t;
  if (p.kind == TreePattern::Kind::kAny) {
    t.label = atom("v" + std::string(p.bind ? "any_" + *p.bind : "any"));
    return t;
  }
  t.label = *ground(p.root).term();
  if (p.kind == TreePattern::Kind::kNode) {
    for (const auto& item : p.items) t.children.push_back(instance_of(item));
  }
  return t;
}

void collect_w(const TreeTemplate& t, std::vector<Term>& out) {
  if (t.kind == TreeTemplate::Kind::kNode) {
    if (const Term* l = t.label.term(); l != nullptr && l->functor == "w") out.push_back(*l);
  }
  for (const auto& c : t.children) collect_w(c, out);
}

bool has_cycle(const std::map<std::string, std::set<std::string>>& g) {
  std::map<std::string, int> state;
  std::function<bool(const std::string&)> dfs = [&](const std::string& n) {
    state[n] = 1;
    if (auto it = g.find(n); it != g.end()) {
      for (const auto& m : it->second) {
        if (state[m] == 1) return true;
        if (state[m] == 0 && dfs(m)) return true;
      }
    }
    state[n] = 2;
    return false;
  };
  for (const auto& [n, _] : g) {
    if (state[n] == 0 && dfs(n)) return true;
  }
  return false;
}

void find_nodes_by(const TracedTree& t, const std::string& rule,
                   std::vector<const TracedTree*>& out) {
  for (const auto& r : t.rules) {
    if (r == rule) {
      out.push_back(&t);
      break;
    }
  }
  for (const auto& c : t.children) find_nodes_by(c, rule, out);
}

}  // namespace

std::vector<Rule> LanguagePack::rules_for(Stage s) const {
  std::vector<Rule> out;
  for (const auto& r : rules) {
    if (r.stage == s) out.push_back(r);
  }
  return out;
}

std::size_t LanguagePack::count(Stage s) const {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.stage == s ? 1 : 0;
  return n;
}

LanguagePack load_pack(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw MissingResource("pack directory " + dir.string());
  fs::path manifest_path = dir / "manifest";
  if (!fs::exists(manifest_path)) throw MissingResource("manifest in " + dir.string());
  Manifest m = parse_manifest(read_file(manifest_path), dir);

  auto locate = [&](const std::string& name, bool required) -> std::optional<fs::path> {
    if (fs::exists(dir / name)) return dir / name;
    if (m.shared && fs::exists(*m.shared / name)) return *m.shared / name;
    if (required) throw MissingResource(name + " (pack " + dir.string() + ")");
    return std::nullopt;
  };

  LanguagePack pack;
  pack.lang = m.lang;
  pack.dir = dir;
  pack.markup = m.markup;

  // Locate everything first so a missing resource is reported before any
  // parse error.
  std::vector<std::pair<const RuleFile*, std::optional<fs::path>>> rule_paths;
  for (const auto& rf : kRuleFiles) rule_paths.emplace_back(&rf, locate(rf.name, rf.required));
  fs::path order_path = *locate("order.constraints", true);
  fs::path pairs_path = *locate("pairs.syntax", true);
  fs::path lexicon_path = *locate("lexicon.tsv", true);

  for (const auto& [rf, path] : rule_paths) {
    if (!path) continue;
    std::optional<std::string> lang;
    if (!is_shared_stage(rf->stage)) lang = m.lang;
    auto rules = parse_rules(read_file(*path), rf->stage, lang, path->string());
    for (auto& r : rules) pack.rules.push_back(std::move(r));
  }
  pack.order = with_file(order_path, [](const std::string& s) { return load_order_constraints(s); });
  pack.pairs = with_file(pairs_path, [](const std::string& s) { return load_pair_rules(s); });
  pack.lexicon = with_file(lexicon_path,
                           [&](const std::string& s) { return Lexicon::load(s, m.lang); });
  return pack;
}

std::string_view to_string(PackIssue::Kind k) {
  switch (k) {
    case PackIssue::Kind::kMissingLexeme:
      return "missing_lexeme";
    case PackIssue::Kind::kSelfMatch:
      return "self_match";
    case PackIssue::Kind::kDuplicateName:
      return "duplicate_name";
    case PackIssue::Kind::kOrderCycle:
      return "order_cycle";
  }
  return "?";
}

bool PackReport::has_errors() const {
  for (const auto& i : issues) {
    if (i.is_error()) return true;
  }
  return false;
}

std::size_t PackReport::count(PackIssue::Kind k) const {
  std::size_t n = 0;
  for (const auto& i : issues) n += i.kind == k ? 1 : 0;
  return n;
}

bool rule_rematches_itself(const Rule& r, const KnowledgeBase& kb) {
  (void)kb;  // guards are assumed satisfiable
  TracedTree inst = instance_of(r.pattern);
  auto b = match_pattern(r.pattern, inst);
  if (!b) return false;
  for (const auto& g : r.guards) {
    if ((g.kind == Guard::Kind::kIsaParent || g.kind == Guard::Kind::kEquiv) &&
        g.args.size() == 2) {
      if (const Var* out = g.args[1].var(); out != nullptr && !b->has(out->name)) {
        b->set(out->name, Arg(atom("v" + out->name)));
      }
    }
  }
  for (const auto& v : r.variants) {
    FeatStore store;
    TracedTree out;
    try {
      out = instantiate(v, *b, store, r.name);
    } catch (const Error&) {
      continue;
    }
    std::vector<const TracedTree*> created;
    find_nodes_by(out, r.name, created);
    for (const TracedTree* n : created) {
      if (match_pattern(r.pattern, *n)) return true;
    }
  }
  return false;
}

PackReport validate_pack(const LanguagePack& pack, const KnowledgeBase& kb) {
  PackReport report;

  std::map<std::string, std::size_t> seen;
  for (const auto& r : pack.rules) {
    if (++seen[r.name] == 2) {
      report.issues.push_back({PackIssue::Kind::kDuplicateName, r.name,
                               "rule name " + r.name + " used more than once"});
    }
  }

  static const std::set<std::string> kNoLexicon = {"punct", "open", "close", "num", "lit"};
  std::set<std::pair<std::string, std::string>> reported;
  for (const auto& r : pack.rules) {
    if (r.stage != Stage::kStructure2Grammar && r.stage != Stage::kInflection) continue;
    std::vector<Term> ws;
    for (const auto& v : r.variants) collect_w(v, ws);
    for (const auto& w : ws) {
      if (w.args.size() < 2) continue;
      const Term* pos = w.args[0].term();
      const Term* lex = w.args[1].term();
      if (pos == nullptr || lex == nullptr || !pos->is_atom() || !lex->is_atom()) continue;
      if (kNoLexicon.contains(pos->functor)) continue;
      if (pack.lexicon.find(lex->functor, pos->functor) != nullptr) continue;
      if (!reported.emplace(lex->functor, pos->functor).second) continue;
      report.issues.push_back({PackIssue::Kind::kMissingLexeme, r.name,
                               pos->functor + " " + lex->functor + " (rule " + r.name +
                                   ") is not in the lexicon"});
    }
  }

  for (const auto& r : pack.rules) {
    if (rule_rematches_itself(r, kb)) {
      report.issues.push_back({PackIssue::Kind::kSelfMatch, r.name,
                               "a variant of " + r.name + " matches its own pattern"});
    }
  }

  // Selector graph per scope; unscoped constraints join every scope.
  std::set<std::string> scopes;
  for (const auto& c : pack.order) scopes.insert(c.scope.value_or(""));
  for (const auto& scope : scopes) {
    std::map<std::string, std::set<std::string>> g;
    std::string names;
    for (const auto& c : pack.order) {
      if (c.scope && *c.scope != scope) continue;
      g[c.before.to_string()].insert(c.after.to_string());
      names += (names.empty() ? "" : " ") + c.name;
    }
    if (has_cycle(g)) {
      report.issues.push_back({PackIssue::Kind::kOrderCycle, names,
                               "order constraints" +
                                   (scope.empty() ? std::string() : " in " + scope) +
                                   " form a cycle: " + names});
    }
  }
  return report;
}

}  // namespace c2t
