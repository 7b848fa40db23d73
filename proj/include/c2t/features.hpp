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

#ifndef C2T_FEATURES_HPP_
#define C2T_FEATURES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c2t/term.hpp"

namespace c2t {

// Values a feature variable can take. Gender and number share one store;
// nothing prevents unifying a gender slot with a number slot, but the
// conflict is reported as soon as both are resolved.
enum class FeatValue { kMasc, kFem, kNeut, kSingular, kPlural };

std::string_view to_string(FeatValue v);
std::optional<FeatValue> feat_value_from(std::string_view s);
inline bool is_gender(FeatValue v) { return v <= FeatValue::kNeut; }

// Union-find over feature variables. Generation-local.
class FeatStore {
 public:
  FeatRef fresh();
  FeatRef fresh(FeatValue v);

  // Merges the classes of a and b. Throws UnifyConflict when both are
  // resolved to different values.
  void unify(FeatRef a, FeatRef b);
  // Resolves an unresolved class; throws UnifyConflict on a different value.
  void bind(FeatRef a, FeatValue v);

  std::optional<FeatValue> value(FeatRef a) const;
  bool same_class(FeatRef a, FeatRef b) const { return find(a.id) == find(b.id); }
  // Identifier of the class representative.
  std::uint32_t root(FeatRef a) const { return find(a.id); }
  std::size_t size() const { return parent_.size(); }

  // Debug/printing hook for PrintOptions.
  PrintOptions print_options() const;

 private:
  std::uint32_t find(std::uint32_t id) const;

  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::optional<FeatValue>> value_;
};

inline FeatStore unify_features(FeatStore s, FeatRef a, FeatRef b) {
  s.unify(a, b);
  return s;
}

}  // namespace c2t

#endif  // C2T_FEATURES_HPP_
