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

#include "c2t/surface.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "c2t/error.hpp"

namespace c2t {

WordSeq make_words(const std::vector<std::string>& words) {
  WordSeq w;
  for (const auto& s : words) w.push_back(Token{s, {}, {}, 0});
  return w;
}

std::vector<std::string> texts(const WordSeq& w) {
  std::vector<std::string> out;
  for (const auto& t : w) out.push_back(t.text);
  return out;
}

namespace {

std::optional<std::string> markup_key(const Term& label,
                                      const MarkupConfig* markup) {
  if (markup == nullptr) return std::nullopt;
  std::string key;
  if (label.functor == "info" && label.args.size() == 4 && label.args[1].term()) {
    key = "sub=" + label.args[1].term()->functor;
  } else if (label.functor == "span" && label.args.size() == 1 &&
             label.args[0].term()) {
    key = "span=" + label.args[0].term()->functor;
  } else {
    return std::nullopt;
  }
  if (!markup->has(key)) return std::nullopt;
  return key;
}

void flatten_into(const Tree& t, const MarkupConfig* markup, Address& addr,
                  WordSeq& out) {
  if (t.is_leaf()) {
    const Term& l = t.label;
    const Text* text = (l.functor == "word" && !l.args.empty()) ? l.args[0].text()
                                                                : nullptr;
    if (text == nullptr || text->value.empty() || l.args.size() > 3) {
      std::string where;
      for (auto i : addr) where += "/" + std::to_string(i);
      throw NonWordLeaf(print_term(l) + " at " + (where.empty() ? "/" : where));
    }
    Token tok{text->value, {}, {}, 0};
    if (l.args.size() >= 2 && l.args[1].term()) tok.pos = l.args[1].term()->functor;
    if (markup != nullptr && !tok.pos.empty() && markup->has("pos=" + tok.pos)) {
      tok.opens.push_back("pos=" + tok.pos);
      tok.closes = 1;
    }
    out.push_back(std::move(tok));
    return;
  }
  auto key = markup_key(t.label, markup);
  std::size_t first = out.size();
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    addr.push_back(i);
    flatten_into(t.children[i], markup, addr, out);
    addr.pop_back();
  }
  if (key && out.size() > first) {
    auto& opens = out[first].opens;
    opens.insert(opens.begin(), *key);
    out.back().closes += 1;
  }
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

PairPattern parse_pattern(const std::string& s, std::size_t line) {
  PairPattern p;
  if (s == "@vowel") {
    p.kind = PairPattern::Kind::kVowel;
  } else if (s == "@consonant") {
    p.kind = PairPattern::Kind::kConsonant;
  } else if (s == "@any") {
    p.kind = PairPattern::Kind::kAny;
  } else if (s.size() >= 2 && s.front() == '"') {
    p.literal = unquote(s);
    if (p.literal.size() > 1 && p.literal.back() == '*') {
      p.kind = PairPattern::Kind::kPrefix;
      p.literal.pop_back();
    }
    if (p.literal.empty()) throw SyntaxError(line, "empty literal");
  } else {
    throw SyntaxError(line, "bad pair pattern " + s);
  }
  return p;
}

std::string expand(const std::string& out, const Token& a, const Token& b) {
  if (out == "$1") return a.text;
  if (out == "$2") return b.text;
  return out;
}

bool is_alpha_start(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) ||
                        static_cast<unsigned char>(s[0]) >= 0x80);
}

}  // namespace

WordSeq flatten(const Tree& t, const MarkupConfig* markup) {
  WordSeq out;
  Address addr;
  flatten_into(t, markup, addr, out);
  return out;
}

bool PairRuleSet::starts_with_vowel(std::string_view word) const {
  std::string lower;
  for (char c : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const auto& w : vowel_like) {
    if (lower.starts_with(w)) return true;
  }
  for (const auto& w : consonant_like) {
    if (lower.starts_with(w)) return false;
  }
  return !lower.empty() && std::string_view("aeiou").find(lower[0]) != std::string_view::npos;
}

bool PairRuleSet::matches(const PairPattern& p, std::string_view word) const {
  switch (p.kind) {
    case PairPattern::Kind::kLiteral: return word == p.literal;
    case PairPattern::Kind::kPrefix: return word.starts_with(p.literal);
    case PairPattern::Kind::kVowel: return starts_with_vowel(word);
    case PairPattern::Kind::kConsonant:
      return is_alpha_start(std::string(word)) && !starts_with_vowel(word);
    case PairPattern::Kind::kAny: return true;
  }
  return false;
}

PairRuleSet load_pair_rules(std::string_view text) {
  static const std::regex kPair(
      R"RE(^\s*pair\s+([A-Za-z0-9_]+)\s*:\s*("[^"]*"|@\w+)\s+("[^"]*"|@\w+)\s*=>\s*("[^"]*")(?:\s+("[^"]*"))?\s*$)RE");
  static const std::regex kExcept(R"RE(^\s*except\s+(@vowel|@consonant)\s*:(.*)$)RE");
  PairRuleSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (std::regex_match(line, m, kExcept)) {
      std::istringstream words(m[2].str());
      std::string w;
      auto& target = m[1] == "@vowel" ? set.vowel_like : set.consonant_like;
      while (words >> w) target.insert(w);
      continue;
    }
    if (!std::regex_match(line, m, kPair))
      throw SyntaxError(lineno, "expected 'pair <name>: \"<left>\" \"<right>\" => \"<out>\" [\"<out>\"]'");
    PairRule r;
    r.name = m[1];
    r.left = parse_pattern(m[2], lineno);
    r.right = parse_pattern(m[3], lineno);
    r.out.push_back(unquote(m[4]));
    if (m[5].matched) r.out.push_back(unquote(m[5]));
    for (const auto& o : r.out) {
      if (o.empty()) throw SyntaxError(lineno, "empty output word in " + r.name);
    }
    set.rules.push_back(std::move(r));
  }
  // A two-word output that matches its own patterns would fire forever.
  for (const auto& r : set.rules) {
    if (r.out.size() != 2) continue;
    bool left_again = r.out[0] == "$1" ||
                      (r.out[0] != "$2" && set.matches(r.left, r.out[0]));
    bool right_again =
        r.out[1] == "$2" || (r.out[1] != "$1" && set.matches(r.right, r.out[1]));
    if (left_again && right_again)
      throw SyntaxError(0, "pair rule " + r.name + " re-matches its own output");
  }
  return set;
}

WordSeq apply_pair_rules(WordSeq w, const PairRuleSet& rules, std::size_t cap,
                         PairStats* stats) {
  PairStats local;
  PairStats& st = stats != nullptr ? *stats : local;
  while (true) {
    if (st.scans >= cap) throw PairDivergence("no fixpoint after " + std::to_string(cap) + " scans");
    ++st.scans;
    bool fired = false;
    std::size_t i = 0;
    while (i + 1 < w.size()) {
      const PairRule* hit = nullptr;
      for (const auto& r : rules.rules) {
        if (rules.matches(r.left, w[i].text) && rules.matches(r.right, w[i + 1].text)) {
          hit = &r;
          break;
        }
      }
      if (hit == nullptr) {
        ++i;
        continue;
      }
      fired = true;
      ++st.firings;
      st.fired.push_back(hit->name);
      Token a = w[i];
      Token b = w[i + 1];
      if (hit->out.size() == 1) {
        Token merged{expand(hit->out[0], a, b), b.pos, a.opens, a.closes + b.closes};
        merged.opens.insert(merged.opens.end(), b.opens.begin(), b.opens.end());
        w[i] = std::move(merged);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      } else {
        w[i].text = expand(hit->out[0], a, b);
        w[i + 1].text = expand(hit->out[1], a, b);
        ++i;
      }
    }
    if (!fired) break;
  }
  return w;
}

namespace {

bool no_space_before(const std::string& s) {
  return s == "," || s == ";" || s == "." || s == ")" || s == "]" || s == ":" ||
         s == "!" || s == "?";
}

bool no_space_after(const std::string& s) {
  return s == "(" || s == "[" || (!s.empty() && s.back() == '\'');
}

}  // namespace

std::string finalize(const WordSeq& w, OutputFormat format,
                     const MarkupConfig* markup) {
  WordSeq words = w;
  for (auto& t : words) {
    if (is_alpha_start(t.text)) {
      t.text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t.text[0])));
      break;
    }
  }
  // Trailing separators give way to a single terminal period.
  while (!words.empty() && words.back().closes == 0 &&
         (words.back().text == "." || words.back().text == "," ||
          words.back().text == ";" || words.back().text == ":")) {
    words.pop_back();
  }
  if (words.empty() || (words.back().text != "!" && words.back().text != "?")) {
    words.push_back(Token{".", "punct", {}, 0});
  }
  bool html = format == OutputFormat::kHtml && markup != nullptr;
  std::string out;
  std::vector<std::string> open_stack;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Token& t = words[i];
    if (i > 0 && !no_space_before(t.text) && !no_space_after(words[i - 1].text))
      out += ' ';
    if (html) {
      for (const auto& key : t.opens) {
        out += markup->tags.at(key).open;
        open_stack.push_back(key);
      }
    }
    out += t.text;
    if (html) {
      for (std::size_t k = 0; k < t.closes && !open_stack.empty(); ++k) {
        out += markup->tags.at(open_stack.back()).close;
        open_stack.pop_back();
      }
    }
  }
  return out;
}

}  // namespace c2t
