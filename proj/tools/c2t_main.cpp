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

// c2t: command-line driver.
//
//   c2t generate  CONCEPT  [--lang en|it] [--seed N] [--trace FILE] [--format F]
//   c2t analyze   CSV      (same flags)
//   c2t enumerate CONCEPT  [--limit N]
//   c2t stages    CONCEPT  --out DIR
//   c2t validate           [--lang/--pack]
//
// Exit status: 0 success, 1 pipeline or user error, 2 pack validation
// failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "c2t/data2concept.hpp"
#include "c2t/pipeline.hpp"
#include "json.hpp"

#ifndef C2T_DATA_DIR
#define C2T_DATA_DIR "."
#endif

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Config {
  std::string lang = "en";
  std::uint64_t seed = c2t::kDefaultSeed;
  std::string pack;
  std::string kb;
  std::string input;
  std::string trace;
  std::string format = "text";
  std::size_t limit = 1000;
  std::string out;
  bool warnings = false;
};

// Validation failures are reported with their own exit status.
struct ValidationFailed {};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw c2t::MissingResource("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw c2t::MissingResource("cannot write " + path.string());
  out << text;
}

struct Env {
  c2t::LanguagePack pack;
  c2t::KnowledgeBase kb;
};

Env load_env(const Config& cfg) {
  fs::path pack_dir = cfg.pack.empty() ? fs::path(C2T_DATA_DIR) / "packs" / cfg.lang : fs::path(cfg.pack);
  std::string kb_path =
      cfg.kb.empty() ? (fs::path(C2T_DATA_DIR) / "data" / "kb.facts").string() : cfg.kb;
  Env env{c2t::load_pack(pack_dir), c2t::KnowledgeBase::load(read_text(kb_path))};
  auto report = c2t::validate_pack(env.pack, env.kb);
  for (const auto& issue : report.issues) {
    if (issue.is_error() || cfg.warnings) {
      std::cerr << (issue.is_error() ? "error: " : "warning: ") << to_string(issue.kind) << ": "
                << issue.message << "\n";
    }
  }
  if (report.has_errors()) throw ValidationFailed{};
  return env;
}

c2t::OutputFormat output_format(const Config& cfg) {
  return cfg.format == "html" ? c2t::OutputFormat::kHtml : c2t::OutputFormat::kText;
}

// Feature references print with their value when bound.
std::optional<std::string> feat_value(const void* ctx, c2t::FeatRef f) {
  const auto* store = static_cast<const c2t::FeatStore*>(ctx);
  if (auto v = store->value(f)) return std::string(c2t::to_string(*v));
  return std::nullopt;
}

json traced_json(const c2t::TracedTree& t, const c2t::PrintOptions& opts) {
  json children = json::array();
  for (const auto& c : t.children) children.push_back(traced_json(c, opts));
  return {{"label", c2t::print_term(t.label, opts)}, {"rules", t.rules}, {"children", children}};
}

std::string trace_lines(const c2t::TracedTree& t, const c2t::PrintOptions& opts, int depth = 0) {
  std::string out(static_cast<std::size_t>(depth) * 2, ' ');
  out += c2t::print_term(t.label, opts);
  if (!t.rules.empty()) {
    out += "   <-";
    for (const auto& r : t.rules) out += " " + r;
  }
  out += "\n";
  for (const auto& c : t.children) out += trace_lines(c, opts, depth + 1);
  return out;
}

std::string address_text(const c2t::Address& a) {
  std::string out;
  for (auto i : a) out += "/" + std::to_string(i);
  return out.empty() ? "/" : out;
}

void write_trace(const std::string& path, const c2t::PipelineResult& res, const Config& cfg) {
  c2t::PrintOptions opts{&feat_value, &res.store};
  if (fs::path(path).extension() == ".json") {
    json doc;
    doc["lang"] = cfg.lang;
    doc["seed"] = cfg.seed;
    doc["sentence"] = res.sentence;
    for (const auto& s : res.stages) {
      json applied = json::array();
      for (const auto& a : s.applied) {
        applied.push_back({{"rule", a.rule},
                           {"variant", a.variant},
                           {"pass", a.pass},
                           {"address", address_text(a.address)}});
      }
      doc["stages"].push_back({{"stage", std::string(c2t::to_string(s.stage))},
                               {"tree", traced_json(s.tree, opts)},
                               {"applied", applied}});
    }
    doc["pair_rules"] = res.pair_stats.fired;
    write_text(path, doc.dump(2) + "\n");
    return;
  }
  std::string text;
  for (const auto& s : res.stages) {
    text += "== " + std::string(c2t::to_string(s.stage)) + "\n";
    for (const auto& a : s.applied) {
      text += "   " + a.rule + " #" + std::to_string(a.variant) + " at " +
              address_text(a.address) + " (pass " + std::to_string(a.pass) + ")\n";
    }
    text += trace_lines(s.tree, opts);
  }
  text += "== sentence\n" + res.sentence + "\n";
  write_text(path, text);
}

void print_result(const c2t::PipelineResult& res, const Config& cfg) {
  if (cfg.format == "json") {
    json words = json::array();
    for (const auto& w : res.words) words.push_back({{"text", w.text}, {"pos", w.pos}});
    json doc{{"sentence", res.sentence}, {"lang", cfg.lang}, {"seed", cfg.seed}, {"words", words}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << res.sentence << "\n";
  }
}

int run_tree(const c2t::Tree& input_tree, const Config& cfg) {
  Env env = load_env(cfg);
  c2t::GenContext ctx(cfg.seed);
  c2t::PipelineOptions opts;
  opts.format = output_format(cfg);
  auto res = c2t::run_pipeline(input_tree, env.pack, env.kb, ctx, opts);
  if (!cfg.trace.empty()) write_trace(cfg.trace, res, cfg);
  print_result(res, cfg);
  return 0;
}

int cmd_generate(const Config& cfg) {
  return run_tree(c2t::parse_concept(read_text(cfg.input)), cfg);
}

int cmd_analyze(const Config& cfg) {
  c2t::Series s = c2t::load_series_csv(cfg.input);
  return run_tree(c2t::analyze_series(s), cfg);
}

int cmd_enumerate(const Config& cfg) {
  Env env = load_env(cfg);
  c2t::Tree input_tree = c2t::parse_concept(read_text(cfg.input));
  c2t::EnumerateOptions opts;
  opts.format = output_format(cfg);
  for (const auto& s : c2t::enumerate_derivations(input_tree, env.pack, env.kb, cfg.limit, opts)) {
    std::cout << s << "\n";
  }
  return 0;
}

int cmd_stages(const Config& cfg) {
  Env env = load_env(cfg);
  c2t::Tree input_tree = c2t::parse_concept(read_text(cfg.input));
  c2t::GenContext ctx(cfg.seed);
  c2t::PipelineOptions opts;
  opts.format = output_format(cfg);
  auto res = c2t::run_pipeline(input_tree, env.pack, env.kb, ctx, opts);
  fs::path dir = cfg.out.empty() ? fs::path("stages") : fs::path(cfg.out);
  fs::create_directories(dir);
  c2t::PrintOptions opts_values{&feat_value, &res.store};
  int n = 0;
  for (const auto& s : res.stages) {
    std::string base = std::to_string(++n) + "_" + std::string(c2t::to_string(s.stage));
    write_text(dir / (base + ".tree"), c2t::print_concept(c2t::strip_trace(s.tree)) + "\n");
    write_text(dir / (base + ".trace"), trace_lines(s.tree, opts_values));
    std::cout << base << ".tree\n";
  }
  if (!cfg.trace.empty()) write_trace(cfg.trace, res, cfg);
  std::cout << res.sentence << "\n";
  return 0;
}

int cmd_validate(const Config& cfg) {
  Env env = load_env(cfg);
  std::cout << env.pack.lang << ": " << env.pack.rules.size() << " rules, "
            << env.pack.lexicon.size() << " lexicon entries, ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concept-to-text generator"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", cfg.input, "input file")->required();
    sub->add_option("--lang", cfg.lang, "output language")->check(CLI::IsMember({"en", "it"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--pack", cfg.pack, "language pack directory");
    sub->add_option("--kb", cfg.kb, "knowledge base file");
    sub->add_option("--format", cfg.format, "text, html or json")
        ->check(CLI::IsMember({"text", "html", "json"}));
    sub->add_flag("--warnings", cfg.warnings, "print pack validation warnings");
  };

  auto* gen = app.add_subcommand("generate", "realize a concept file");
  common(gen, true);
  gen->add_option("--trace", cfg.trace, "write the derivation trace (.json for JSON)");

  auto* ana = app.add_subcommand("analyze", "describe a data series CSV");
  common(ana, true);
  ana->add_option("--trace", cfg.trace, "write the derivation trace (.json for JSON)");

  auto* en = app.add_subcommand("enumerate", "list distinct realizations");
  common(en, true);
  en->add_option("--limit", cfg.limit, "maximum number of sentences")->check(CLI::PositiveNumber);

  auto* st = app.add_subcommand("stages", "dump the tree after every stage");
  common(st, true);
  st->add_option("--out", cfg.out, "output directory");
  st->add_option("--trace", cfg.trace, "write the derivation trace (.json for JSON)");

  auto* val = app.add_subcommand("validate", "check a language pack");
  common(val, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*ana) return cmd_analyze(cfg);
    if (*en) return cmd_enumerate(cfg);
    if (*st) return cmd_stages(cfg);
    if (*val) return cmd_validate(cfg);
  } catch (const ValidationFailed&) {
    return 2;
  } catch (const c2t::PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
