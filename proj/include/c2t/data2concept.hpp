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

// A small trend analyzer: fits constant, linear and exponential models to a
// series and describes the best one as a concept tree.

#ifndef C2T_DATA2CONCEPT_HPP_
#define C2T_DATA2CONCEPT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2t/term.hpp"

namespace c2t {

struct SeriesMeta {
  std::string x_class = "year";
  std::string y_class = "publication";
  std::string domain_label;
};

struct Series {
  std::vector<double> xs;
  std::vector<double> ys;
  SeriesMeta meta;
};

// Throws InvalidSeries unless |xs| = |ys| >= 2 and xs is strictly increasing.
void check_series(const Series& s);

enum class Shape { kSteady, kLinear, kExponential };
enum class Direction { kGrow, kDecline, kNone };
enum class Magnitude { kSlight, kModerate, kImportant };

std::string_view to_string(Shape s);
std::string_view to_string(Direction d);
std::string_view to_string(Magnitude m);

struct TrendFeature {
  Shape shape = Shape::kSteady;
  Direction direction = Direction::kNone;
  Magnitude magnitude = Magnitude::kSlight;
  double fitted_first = 0;
  double fitted_last = 0;
  double min = 0;
  double max = 0;
  double x_start = 0;
  double x_end = 0;
  int accuracy = 100;
  // Normalized errors of the three candidates, in Shape order. Infinite
  // when a model could not be fitted.
  double nrmse[3] = {0, 0, 0};
  // max(y) = min(y): no fitting was done.
  bool degenerate = false;
};

struct TrendConfig {
  double slight_below = 0.25;
  double moderate_below = 1.0;
  int segment_accuracy = 85;
  std::size_t segment_min_length = 3;
  // Errors are divided by this instead of the series' own range when set.
  std::optional<double> scale;
};

// Integer score for a normalized error: round(100 (1 - e)) within [0, 100].
int accuracy_from_nrmse(double e);

TrendFeature classify_trend(const Series& s, const TrendConfig& cfg = {});

struct Segment {
  std::size_t first;  // inclusive indices
  std::size_t last;
  TrendFeature trend;
};

// Longest steady prefix and suffix. Segments are scored against the range
// of the whole series, so a flat start is not penalized for its own noise.
std::vector<Segment> detect_subsegments(const Series& s, const TrendConfig& cfg = {});

enum class Judgment { kPoor, kFair, kGood, kExcellent };
std::string_view to_string(Judgment j);

struct JudgmentScale {
  int excellent = 90;
  int good = 75;
  int fair = 50;
};

// Throws RangeError outside [0, 100].
Judgment accuracy_to_judgment(int a, const JudgmentScale& scale = {});

Tree to_concept(const TrendFeature& main, const std::vector<Segment>& subs,
                const SeriesMeta& meta, const JudgmentScale& scale = {});

// classify, segment and convert.
Tree analyze_series(const Series& s, const TrendConfig& cfg = {});

// Two-column CSV. Leading `# key: value` lines set x_class, y_class and
// domain_label; a non-numeric first row is taken as a header.
Series parse_series_csv(std::string_view text);
Series load_series_csv(const std::string& path);

}  // namespace c2t

#endif  // C2T_DATA2CONCEPT_HPP_
