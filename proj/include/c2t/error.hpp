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

#ifndef C2T_ERROR_HPP_
#define C2T_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2t {

// Base of every error raised by the library. `kind()` is a stable tag used
// by the CLI and by tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)), message_(message) {}

  const std::string& kind() const { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  std::string kind_;
  std::string message_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("SyntaxError", "at " + std::to_string(position) + ": " + message),
        position_(position) {}

  // Byte offset for concept text, line number for line-oriented files.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

#define C2T_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

C2T_DEFINE_ERROR(CycleError)
C2T_DEFINE_ERROR(UnboundVariable)
C2T_DEFINE_ERROR(StageDivergence)
C2T_DEFINE_ERROR(UnifyConflict)
C2T_DEFINE_ERROR(MissingAntecedent)
C2T_DEFINE_ERROR(DuplicateEntry)
C2T_DEFINE_ERROR(MissingLexeme)
C2T_DEFINE_ERROR(MissingForm)
C2T_DEFINE_ERROR(OrderCycle)
C2T_DEFINE_ERROR(SizeLimit)
C2T_DEFINE_ERROR(NonWordLeaf)
C2T_DEFINE_ERROR(PairDivergence)
C2T_DEFINE_ERROR(MissingResource)
C2T_DEFINE_ERROR(RuleValidation)
C2T_DEFINE_ERROR(DegenerateSeries)
C2T_DEFINE_ERROR(InvalidSeries)
C2T_DEFINE_ERROR(RangeError)

#undef C2T_DEFINE_ERROR

}  // namespace c2t

#endif  // C2T_ERROR_HPP_
