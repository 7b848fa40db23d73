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

// Character-level reader shared by the concept parser and the rule-pack
// parser. Internal header.

#ifndef C2T_SRC_READER_HPP_
#define C2T_SRC_READER_HPP_

#include <string>
#include <string_view>

#include "c2t/error.hpp"
#include "c2t/term.hpp"

namespace c2t::detail {

class Reader {
 public:
  // With `allow_vars`, identifiers starting with an uppercase letter or `_`
  // read as pattern variables and `$Name` as fresh feature slots. Without
  // it, `_G<digits>` reads as a feature reference and anything else
  // uppercase is an error.
  Reader(std::string_view text, bool allow_vars)
      : text_(text), allow_vars_(allow_vars) {}

  void skip_ws();
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Peeks without skipping whitespace first.
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool consume(char c);
  bool consume(std::string_view s);
  // Consumes `kw` only when followed by whitespace.
  bool consume_keyword(std::string_view kw);
  void expect(char c);
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& expected) const;

  bool at_identifier_start();
  std::string read_identifier();
  Term read_term();
  Arg read_arg();

 private:
  std::string read_quoted(char quote);

  std::string_view text_;
  std::size_t pos_ = 0;
  bool allow_vars_;
};

}  // namespace c2t::detail

#endif  // C2T_SRC_READER_HPP_
