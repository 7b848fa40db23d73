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

#include "c2t/term.hpp"

#include <cctype>
#include <charconv>
#include <deque>

#include "c2t/error.hpp"
#include "reader.hpp"

namespace c2t {

namespace detail {

namespace {
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
}  // namespace

// Whitespace and Prolog-style `%` line comments.
void Reader::skip_ws() {
  while (pos_ < text_.size()) {
    if (text_[pos_] == '%') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    } else {
      break;
    }
  }
}

bool Reader::consume(char c) {
  if (peek() == c) {
    ++pos_;
    return true;
  }
  return false;
}

bool Reader::consume(std::string_view s) {
  skip_ws();
  if (text_.substr(pos_, s.size()) == s) {
    pos_ += s.size();
    return true;
  }
  return false;
}

bool Reader::consume_keyword(std::string_view kw) {
  skip_ws();
  std::size_t end = pos_ + kw.size();
  if (text_.substr(pos_, kw.size()) == kw && end < text_.size() &&
      std::isspace(static_cast<unsigned char>(text_[end]))) {
    pos_ = end;
    return true;
  }
  return false;
}

void Reader::expect(char c) {
  if (!consume(c)) fail(std::string("'") + c + "'");
}

void Reader::fail(const std::string& expected) const {
  std::string found = pos_ < text_.size()
                          ? "'" + std::string(1, text_[pos_]) + "'"
                          : std::string("end of input");
  throw SyntaxError(pos_, "expected " + expected + ", found " + found);
}

bool Reader::at_identifier_start() {
  char c = peek();
  return is_lower(c) || is_upper(c) || c == '\'';
}

std::string Reader::read_identifier() {
  skip_ws();
  std::size_t start = pos_;
  while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
  if (start == pos_) fail("identifier");
  return std::string(text_.substr(start, pos_ - start));
}

std::string Reader::read_quoted(char quote) {
  // Opening quote already consumed.
  std::string out;
  while (true) {
    if (pos_ >= text_.size()) fail(std::string("closing ") + quote);
    char c = text_[pos_++];
    if (c == quote) return out;
    if (c == '\\') {
      if (pos_ >= text_.size()) fail("escaped character");
      c = text_[pos_++];
    }
    out.push_back(c);
  }
}

Term Reader::read_term() {
  char c = peek();
  Term t;
  if (c == '\'') {
    ++pos_;
    t.functor = read_quoted('\'');
    if (t.functor.empty()) fail("nonempty quoted symbol");
  } else if (is_lower(c)) {
    t.functor = read_identifier();
  } else {
    fail("functor");
  }
  // Arguments must follow the functor directly.
  if (peek_raw() == '(') {
    ++pos_;
    do {
      t.args.push_back(read_arg());
    } while (consume(','));
    expect(')');
  }
  return t;
}

Arg Reader::read_arg() {
  char c = peek();
  if (is_digit(c) || (c == '-' && is_digit(peek_raw(1)))) {
    std::size_t start = pos_;
    if (c == '-') ++pos_;
    bool decimal = false;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        is_digit(text_[pos_ + 1])) {
      decimal = true;
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      decimal = true;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        ++pos_;
      if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("exponent");
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (decimal) {
      double d = 0;
      std::from_chars(first, last, d);
      return Arg(d);
    }
    std::int64_t i = 0;
    auto res = std::from_chars(first, last, i);
    if (res.ec != std::errc()) {
      pos_ = start;
      fail("integer in range");
    }
    return Arg(i);
  }
  if (c == '"') {
    ++pos_;
    return Arg(Text{read_quoted('"')});
  }
  if (c == '$' && allow_vars_) {
    ++pos_;
    if (!is_upper(peek_raw())) fail("variable name after '$'");
    return Arg(Var{read_identifier(), true});
  }
  if (is_upper(c)) {
    std::size_t start = pos_;
    std::string name = read_identifier();
    if (allow_vars_) return Arg(Var{name, false});
    if (name.size() > 2 && name[0] == '_' && name[1] == 'G') {
      std::uint32_t id = 0;
      auto res = std::from_chars(name.data() + 2, name.data() + name.size(), id);
      if (res.ec == std::errc() && res.ptr == name.data() + name.size())
        return Arg(FeatRef{id});
    }
    pos_ = start;
    fail("functor");
  }
  return Arg(read_term());
}

}  // namespace detail

Term atom(std::string name) { return Term(std::move(name)); }

Term term(std::string functor, std::vector<Arg> args) {
  return Term(std::move(functor), std::move(args));
}

std::size_t Tree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

const Tree& subtree_at(const Tree& t, const Address& a) {
  const Tree* cur = &t;
  for (std::size_t i : a) cur = &cur->children.at(i);
  return *cur;
}

Tree& subtree_at(Tree& t, const Address& a) {
  Tree* cur = &t;
  for (std::size_t i : a) cur = &cur->children.at(i);
  return *cur;
}

std::vector<Address> bfs_nodes(const Tree& t) {
  std::vector<Address> out;
  std::deque<std::pair<const Tree*, Address>> queue;
  queue.emplace_back(&t, Address{});
  while (!queue.empty()) {
    auto [node, addr] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < node->children.size(); ++i) {
      Address child = addr;
      child.push_back(i);
      queue.emplace_back(&node->children[i], std::move(child));
    }
    out.push_back(std::move(addr));
  }
  return out;
}

bool is_plain_symbol(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

namespace {

std::string quote(std::string_view s, char q) {
  std::string out(1, q);
  for (char c : s) {
    if (c == q || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back(q);
  return out;
}

std::string print_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void print_tree(const Tree& t, const PrintOptions& opts, std::string& out) {
  out += '[';
  out += print_term(t.label, opts);
  for (const auto& c : t.children) {
    out += ", ";
    if (c.is_leaf()) {
      out += print_term(c.label, opts);
    } else {
      print_tree(c, opts, out);
    }
  }
  out += ']';
}

void print_indent(const Tree& t, const PrintOptions& opts, int depth,
                  std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += print_term(t.label, opts);
  out += '\n';
  for (const auto& c : t.children) print_indent(c, opts, depth + 1, out);
}

}  // namespace

std::string print_arg(const Arg& a, const PrintOptions& opts) {
  if (const Term* t = a.term()) return print_term(*t, opts);
  if (const auto* i = a.integer()) return std::to_string(*i);
  if (const auto* d = a.decimal()) return print_double(*d);
  if (const Text* x = a.text()) return quote(x->value, '"');
  if (const FeatRef* f = a.feat()) {
    if (opts.feat_printer != nullptr) {
      if (auto s = opts.feat_printer(opts.feat_ctx, *f)) return *s;
    }
    return "_G" + std::to_string(f->id);
  }
  const Var* v = a.var();
  return (v->fresh ? "$" : "") + v->name;
}

std::string print_term(const Term& t, const PrintOptions& opts) {
  std::string out =
      is_plain_symbol(t.functor) ? t.functor : quote(t.functor, '\'');
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += print_arg(t.args[i], opts);
    }
    out += ')';
  }
  return out;
}

std::string print_concept(const Tree& t, const PrintOptions& opts) {
  std::string out;
  print_tree(t, opts, out);
  return out;
}

std::string print_indented(const Tree& t, const PrintOptions& opts) {
  std::string out;
  print_indent(t, opts, 0, out);
  return out;
}

namespace {

Tree read_tree(detail::Reader& r) {
  r.expect('[');
  Tree t(r.read_term());
  while (r.consume(',')) {
    if (r.peek() == '[') {
      t.children.push_back(read_tree(r));
    } else {
      t.children.emplace_back(r.read_term());
    }
  }
  r.expect(']');
  return t;
}

}  // namespace

Tree parse_concept(std::string_view text) {
  detail::Reader r(text, false);
  Tree t = read_tree(r);
  if (!r.at_end()) r.fail("end of input");
  return t;
}

Term parse_term(std::string_view text) {
  detail::Reader r(text, false);
  Term t = r.read_term();
  if (!r.at_end()) r.fail("end of input");
  return t;
}

}  // namespace c2t
