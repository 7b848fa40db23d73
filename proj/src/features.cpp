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

#include "c2t/features.hpp"

#include <stdexcept>

#include "c2t/error.hpp"

namespace c2t {

std::string_view to_string(FeatValue v) {
  switch (v) {
    case FeatValue::kMasc: return "masc";
    case FeatValue::kFem: return "fem";
    case FeatValue::kNeut: return "neut";
    case FeatValue::kSingular: return "singular";
    case FeatValue::kPlural: return "plural";
  }
  return "?";
}

std::optional<FeatValue> feat_value_from(std::string_view s) {
  if (s == "masc") return FeatValue::kMasc;
  if (s == "fem") return FeatValue::kFem;
  if (s == "neut") return FeatValue::kNeut;
  if (s == "singular") return FeatValue::kSingular;
  if (s == "plural") return FeatValue::kPlural;
  return std::nullopt;
}

FeatRef FeatStore::fresh() {
  auto id = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(id);
  value_.emplace_back();
  return FeatRef{id};
}

FeatRef FeatStore::fresh(FeatValue v) {
  FeatRef r = fresh();
  value_[r.id] = v;
  return r;
}

std::uint32_t FeatStore::find(std::uint32_t id) const {
  if (id >= parent_.size()) throw std::out_of_range("unknown feature variable");
  while (parent_[id] != id) {
    parent_[id] = parent_[parent_[id]];
    id = parent_[id];
  }
  return id;
}

void FeatStore::unify(FeatRef a, FeatRef b) {
  std::uint32_t ra = find(a.id);
  std::uint32_t rb = find(b.id);
  if (ra == rb) return;
  const auto& va = value_[ra];
  const auto& vb = value_[rb];
  if (va && vb && *va != *vb) {
    throw UnifyConflict(std::string(to_string(*va)) + " vs " +
                        std::string(to_string(*vb)));
  }
  // Smaller id becomes the representative, so the final partition does not
  // depend on the order of unifications.
  if (rb < ra) std::swap(ra, rb);
  if (!value_[ra]) value_[ra] = value_[rb];
  parent_[rb] = ra;
}

void FeatStore::bind(FeatRef a, FeatValue v) {
  std::uint32_t r = find(a.id);
  if (value_[r] && *value_[r] != v) {
    throw UnifyConflict(std::string(to_string(*value_[r])) + " vs " +
                        std::string(to_string(v)));
  }
  value_[r] = v;
}

std::optional<FeatValue> FeatStore::value(FeatRef a) const {
  return value_[find(a.id)];
}

PrintOptions FeatStore::print_options() const {
  PrintOptions opts;
  opts.feat_ctx = this;
  opts.feat_printer = [](const void* ctx, FeatRef f) -> std::optional<std::string> {
    const auto* store = static_cast<const FeatStore*>(ctx);
    if (f.id >= store->size()) return std::nullopt;
    if (auto v = store->value(f)) return std::string(to_string(*v));
    return std::nullopt;
  };
  return opts;
}

}  // namespace c2t
