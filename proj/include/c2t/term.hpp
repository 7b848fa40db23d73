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

// Terms and concept trees.
//
// A concept is written as a nested list whose head is the node label and
// whose tail holds the children:
//
//   [class(student), [rel(attribute), attribute(plural)],
//                    [rel(attributive_spec), class(course)]]
//
// Bare terms in child position are leaves. Labels are first-order terms;
// arguments may be terms, integers, decimals, "text" or feature references
// (printed `_G<id>` while unresolved).

#ifndef C2T_TERM_HPP_
#define C2T_TERM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace c2t {

// Handle to a feature variable (gender or number) in a FeatStore.
struct FeatRef {
  std::uint32_t id = 0;
  bool operator==(const FeatRef&) const = default;
};

struct Text {
  std::string value;
  bool operator==(const Text&) const = default;
};

// Pattern variable. Only rule patterns and templates contain these; `fresh`
// marks a `$Name` template slot that allocates a new FeatRef.
struct Var {
  std::string name;
  bool fresh = false;
  bool operator==(const Var&) const = default;
};

struct Arg;

struct Term {
  std::string functor;
  std::vector<Arg> args;

  Term() = default;
  explicit Term(std::string f) : functor(std::move(f)) {}
  Term(std::string f, std::vector<Arg> a);

  bool is_atom() const { return args.empty(); }
  bool operator==(const Term& other) const;
};

struct Arg {
  std::variant<Term, std::int64_t, double, Text, FeatRef, Var> value;

  Arg(Term t) : value(std::move(t)) {}
  Arg(std::int64_t i) : value(i) {}
  Arg(int i) : value(static_cast<std::int64_t>(i)) {}
  Arg(double d) : value(d) {}
  Arg(Text t) : value(std::move(t)) {}
  Arg(FeatRef f) : value(f) {}
  Arg(Var v) : value(std::move(v)) {}

  const Term* term() const { return std::get_if<Term>(&value); }
  const std::int64_t* integer() const { return std::get_if<std::int64_t>(&value); }
  const double* decimal() const { return std::get_if<double>(&value); }
  const Text* text() const { return std::get_if<Text>(&value); }
  const FeatRef* feat() const { return std::get_if<FeatRef>(&value); }
  const Var* var() const { return std::get_if<Var>(&value); }

  bool operator==(const Arg& other) const { return value == other.value; }
};

inline Term::Term(std::string f, std::vector<Arg> a)
    : functor(std::move(f)), args(std::move(a)) {}

inline bool Term::operator==(const Term& other) const {
  return functor == other.functor && args == other.args;
}

// Convenience builders used heavily by tests and data2concept.
Term atom(std::string name);
Term term(std::string functor, std::vector<Arg> args);

struct Tree {
  Term label;
  std::vector<Tree> children;

  Tree() = default;
  explicit Tree(Term l) : label(std::move(l)) {}
  Tree(Term l, std::vector<Tree> c)
      : label(std::move(l)), children(std::move(c)) {}

  bool is_leaf() const { return children.empty(); }
  std::size_t size() const;
  bool operator==(const Tree&) const = default;
};

// Path of child indices from the root.
using Address = std::vector<std::size_t>;

const Tree& subtree_at(const Tree& t, const Address& a);
Tree& subtree_at(Tree& t, const Address& a);

// Breadth-first node addresses: root first, then level by level, left to
// right.
std::vector<Address> bfs_nodes(const Tree& t);

// Resolves feature references while printing. Returning nullopt prints the
// debug form `_G<id>`.
using FeatPrinter = std::optional<std::string> (*)(const void* ctx, FeatRef f);

struct PrintOptions {
  FeatPrinter feat_printer = nullptr;
  const void* feat_ctx = nullptr;
};

std::string print_term(const Term& t, const PrintOptions& opts = {});
std::string print_arg(const Arg& a, const PrintOptions& opts = {});
std::string print_concept(const Tree& t, const PrintOptions& opts = {});

// Indented one-node-per-line rendering, used by stage dumps.
std::string print_indented(const Tree& t, const PrintOptions& opts = {});

// Parses the nested-list concept syntax. Throws SyntaxError.
Tree parse_concept(std::string_view text);

// Parses a single term, e.g. `isa(year,time)`. Throws SyntaxError.
Term parse_term(std::string_view text);

// True for symbols printable without quotes.
bool is_plain_symbol(std::string_view s);

}  // namespace c2t

#endif  // C2T_TERM_HPP_
