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

#include "c2t/data2concept.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "c2t/error.hpp"

namespace c2t {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Line {
  double a = 0;  // value at x = x0
  double b = 0;
};

// Weighted least squares y = a + b (x - x0).
Line fit_line(const std::vector<double>& xs, const std::vector<double>& ys,
              const std::vector<double>& w, double x0) {
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sw += w[i];
    sx += w[i] * (xs[i] - x0);
    sy += w[i] * ys[i];
  }
  double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - x0 - mx;
    sxx += w[i] * dx * dx;
    sxy += w[i] * dx * (ys[i] - my);
  }
  Line l;
  l.b = sxx > 0 ? sxy / sxx : 0;
  l.a = my - l.b * mx;
  return l;
}

double rmse(const std::vector<double>& ys, const std::vector<double>& fit) {
  double s = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) s += (ys[i] - fit[i]) * (ys[i] - fit[i]);
  return std::sqrt(s / static_cast<double>(ys.size()));
}

Arg number_arg(double v) {
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9 && std::abs(r) < 9e15) return Arg(static_cast<std::int64_t>(r));
  return Arg(v);
}

Tree attr(Term value) {
  return Tree(term("rel", {Arg(atom("attribute"))}),
              {Tree(term("attribute", {Arg(std::move(value))}))});
}

std::string_view verb_of(const TrendFeature& f) {
  switch (f.direction) {
    case Direction::kGrow:
      return "grow";
    case Direction::kDecline:
      return "decline";
    case Direction::kNone:
      break;
  }
  return "be_steady";
}

Tree trend_relation(const TrendFeature& f, const SeriesMeta& meta, const JudgmentScale& scale) {
  double v1 = f.direction == Direction::kDecline ? f.max : f.min;
  double v2 = f.direction == Direction::kDecline ? f.min : f.max;
  Tree rel(term("rel", {Arg(atom(std::string(verb_of(f))))}));
  rel.children.push_back(attr(term("shape", {Arg(atom(std::string(to_string(f.shape))))})));
  rel.children.push_back(
      attr(term("magnitude", {Arg(atom(std::string(to_string(f.magnitude))))})));
  rel.children.push_back(attr(term("range", {number_arg(v1), number_arg(v2)})));
  Tree interval(term("class", {Arg(atom("interval"))}));
  interval.children.push_back(
      attr(term("uom", {Arg(term("class", {Arg(atom(meta.x_class))}))})));
  interval.children.push_back(
      attr(term("range", {number_arg(f.x_start), number_arg(f.x_end)})));
  rel.children.push_back(Tree(term("rel", {Arg(atom("when"))}), {std::move(interval)}));
  Judgment j = accuracy_to_judgment(f.accuracy, scale);
  rel.children.push_back(
      Tree(term("rel", {Arg(atom("accuracy"))}),
           {Tree(term("attribute", {Arg(term("judgment", {Arg(atom(std::string(to_string(j))))}))}))}));
  return rel;
}

Tree subject(const SeriesMeta& meta, bool with_domain) {
  Tree root(term("class", {Arg(atom(meta.y_class))}));
  root.children.push_back(attr(atom("plural")));
  if (with_domain && !meta.domain_label.empty()) {
    root.children.push_back(Tree(term("rel", {Arg(atom("attributive_spec"))}),
                                 {Tree(term("class", {Arg(atom(meta.domain_label))}))}));
  }
  return root;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::optional<double> to_number(const std::string& s) {
  std::istringstream in(s);
  double v;
  if (!(in >> v)) return std::nullopt;
  in >> std::ws;
  if (!in.eof()) return std::nullopt;
  return v;
}

}  // namespace

void check_series(const Series& s) {
  if (s.xs.size() != s.ys.size()) throw InvalidSeries("x and y lengths differ");
  if (s.xs.size() < 2) throw InvalidSeries("a series needs at least 2 points");
  for (std::size_t i = 1; i < s.xs.size(); ++i) {
    if (!(s.xs[i] > s.xs[i - 1])) throw InvalidSeries("x values must strictly increase");
  }
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::kSteady:
      return "steady";
    case Shape::kLinear:
      return "linear";
    case Shape::kExponential:
      return "exponential";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kGrow:
      return "grow";
    case Direction::kDecline:
      return "decline";
    case Direction::kNone:
      return "none";
  }
  return "?";
}

std::string_view to_string(Magnitude m) {
  switch (m) {
    case Magnitude::kSlight:
      return "slight";
    case Magnitude::kModerate:
      return "moderate";
    case Magnitude::kImportant:
      return "important";
  }
  return "?";
}

std::string_view to_string(Judgment j) {
  switch (j) {
    case Judgment::kPoor:
      return "poor";
    case Judgment::kFair:
      return "fair";
    case Judgment::kGood:
      return "good";
    case Judgment::kExcellent:
      return "excellent";
  }
  return "?";
}

int accuracy_from_nrmse(double e) {
  if (!std::isfinite(e)) return 0;
  double a = std::round(100.0 * (1.0 - e));
  return static_cast<int>(std::clamp(a, 0.0, 100.0));
}

TrendFeature classify_trend(const Series& s, const TrendConfig& cfg) {
  check_series(s);
  const auto& xs = s.xs;
  const auto& ys = s.ys;
  const std::size_t n = ys.size();
  TrendFeature f;
  auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
  f.min = *lo;
  f.max = *hi;
  f.x_start = xs.front();
  f.x_end = xs.back();

  double mean = 0;
  for (double y : ys) mean += y;
  mean /= static_cast<double>(n);

  if (f.max == f.min) {
    f.degenerate = true;
    f.fitted_first = f.fitted_last = mean;
    return f;
  }

  double range = cfg.scale.value_or(f.max - f.min);
  double x0 = xs.front();
  std::vector<double> unit(n, 1.0);

  std::vector<double> fits[3];
  fits[0].assign(n, mean);
  f.nrmse[0] = rmse(ys, fits[0]) / (cfg.scale ? *cfg.scale : std::max(std::abs(mean), 1.0));

  Line lin = fit_line(xs, ys, unit, x0);
  for (double x : xs) fits[1].push_back(lin.a + lin.b * (x - x0));
  f.nrmse[1] = rmse(ys, fits[1]) / range;

  double eps = *lo <= 0 ? 1.0 : 0.0;
  if (*lo + eps > 0) {
    std::vector<double> logs, w;
    for (double y : ys) {
      logs.push_back(std::log(y + eps));
      w.push_back((y + eps) * (y + eps));
    }
    Line ex = fit_line(xs, logs, w, x0);
    for (double x : xs) fits[2].push_back(std::exp(ex.a + ex.b * (x - x0)) - eps);
    f.nrmse[2] = rmse(ys, fits[2]) / range;
  } else {
    f.nrmse[2] = kInf;
  }

  // Compare on the reported integer scale; the earlier model wins ties.
  std::size_t best = 0;
  for (std::size_t m = 1; m < 3; ++m) {
    if (accuracy_from_nrmse(f.nrmse[m]) > accuracy_from_nrmse(f.nrmse[best])) best = m;
  }
  f.shape = static_cast<Shape>(best);
  f.accuracy = accuracy_from_nrmse(f.nrmse[best]);
  f.fitted_first = fits[best].front();
  f.fitted_last = fits[best].back();

  if (f.shape != Shape::kSteady) {
    f.direction = f.fitted_last >= f.fitted_first ? Direction::kGrow : Direction::kDecline;
  }
  double r = (f.fitted_last - f.fitted_first) / std::max(std::abs(f.fitted_first), 1.0);
  if (std::abs(r) < cfg.slight_below) {
    f.magnitude = Magnitude::kSlight;
  } else if (std::abs(r) < cfg.moderate_below) {
    f.magnitude = Magnitude::kModerate;
  } else {
    f.magnitude = Magnitude::kImportant;
  }
  return f;
}

std::vector<Segment> detect_subsegments(const Series& s, const TrendConfig& cfg) {
  check_series(s);
  std::vector<Segment> out;
  const std::size_t n = s.ys.size();
  if (n < 4) return out;
  auto [lo, hi] = std::minmax_element(s.ys.begin(), s.ys.end());
  TrendConfig sub = cfg;
  sub.scale = std::max(*hi - *lo, 1.0);

  auto steady = [&](std::size_t first, std::size_t last) -> std::optional<TrendFeature> {
    Series part;
    part.xs.assign(s.xs.begin() + first, s.xs.begin() + last + 1);
    part.ys.assign(s.ys.begin() + first, s.ys.begin() + last + 1);
    TrendFeature f = classify_trend(part, sub);
    if (f.shape == Shape::kSteady && f.accuracy >= cfg.segment_accuracy) return f;
    return std::nullopt;
  };

  // A segment covering the whole series is the main trend, not a detail.
  const std::size_t longest = n - 1;
  for (std::size_t len = longest; len >= cfg.segment_min_length; --len) {
    if (auto f = steady(0, len - 1)) {
      out.push_back({0, len - 1, *f});
      break;
    }
  }
  for (std::size_t len = longest; len >= cfg.segment_min_length; --len) {
    std::size_t first = n - len;
    if (!out.empty() && first <= out.front().last) break;
    if (auto f = steady(first, n - 1)) {
      out.push_back({first, n - 1, *f});
      break;
    }
  }
  return out;
}

Judgment accuracy_to_judgment(int a, const JudgmentScale& scale) {
  if (a < 0 || a > 100) throw RangeError("accuracy " + std::to_string(a) + " outside 0..100");
  if (a >= scale.excellent) return Judgment::kExcellent;
  if (a >= scale.good) return Judgment::kGood;
  if (a >= scale.fair) return Judgment::kFair;
  return Judgment::kPoor;
}

Tree to_concept(const TrendFeature& main, const std::vector<Segment>& subs,
                const SeriesMeta& meta, const JudgmentScale& scale) {
  Tree root = subject(meta, true);
  Tree rel = trend_relation(main, meta, scale);
  for (const auto& seg : subs) {
    Tree clause = subject(meta, false);
    clause.children.push_back(trend_relation(seg.trend, meta, scale));
    rel.children.push_back(Tree(term("rel", {Arg(atom("detail"))}), {std::move(clause)}));
  }
  root.children.push_back(std::move(rel));
  return root;
}

Tree analyze_series(const Series& s, const TrendConfig& cfg) {
  TrendFeature main = classify_trend(s, cfg);
  std::vector<Segment> subs;
  if (!main.degenerate && s.ys.size() >= 4) subs = detect_subsegments(s, cfg);
  return to_concept(main, subs, s.meta);
}

Series parse_series_csv(std::string_view text) {
  Series s;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool data_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = trim(line.substr(1, colon - 1));
      std::string value = trim(line.substr(colon + 1));
      if (key == "x_class") {
        s.meta.x_class = value;
      } else if (key == "y_class") {
        s.meta.y_class = value;
      } else if (key == "domain_label") {
        s.meta.domain_label = value;
      }
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw SyntaxError(lineno, "expected 'x,y' at line " + std::to_string(lineno));
    }
    auto x = to_number(trim(line.substr(0, comma)));
    auto y = to_number(trim(line.substr(comma + 1)));
    if (!x || !y) {
      if (!data_seen && s.xs.empty()) {
        data_seen = true;  // header row
        continue;
      }
      throw SyntaxError(lineno, "non-numeric value at line " + std::to_string(lineno));
    }
    data_seen = true;
    s.xs.push_back(*x);
    s.ys.push_back(*y);
  }
  return s;
}

Series load_series_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingResource("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_series_csv(ss.str());
}

}  // namespace c2t
