/*
 * Copyright 2026 The hdrcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hdrcheck::cli {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 80, kRight = 30, kTop = 40, kBottom = 60;
constexpr const char* kColours[] = {"#1f77b4", "#d62728", "#e6a817", "#2ca02c", "#9467bd"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::fabs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1 : f < 3.5 ? 2 : f < 7.5 ? 5 : 10) * mag;
}

struct Axis {
  double lo, hi, step;
};

Axis make_axis(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = lo == 0 ? 1 : std::fabs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double step = nice_step(hi - lo, 6);
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

}  // namespace

std::string svg_line_plot(const PlotSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = 0, ymax = -std::numeric_limits<double>::infinity();
  for (const auto& s : spec.series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymax = 1;
  const Axis ax = make_axis(xmin, xmax), ay = make_axis(ymin, ymax);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" "
       "height=\"500\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  o += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + escape(spec.title) +
       "</text>\n";

  for (int k = 0; ax.lo + k * ax.step <= ax.hi + ax.step * 1e-9; ++k) {
    const double x = ax.lo + k * ax.step;
    o += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px(x)) +
         "\" y2=\"" + num(kTop + ph) + "\" stroke=\"#e0e0e0\"/>\n";
    o += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kTop + ph + 18) +
         "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
  }
  for (int k = 0; ay.lo + k * ay.step <= ay.hi + ay.step * 1e-9; ++k) {
    const double y = ay.lo + k * ay.step;
    o += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(kLeft + pw) +
         "\" y2=\"" + num(py(y)) + "\" stroke=\"#e0e0e0\"/>\n";
    o += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(y) + 4) + "\" text-anchor=\"end\">" +
         tick_label(y) + "</text>\n";
  }
  o += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) +
       "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  o += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 16) +
       "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  o += "<text transform=\"translate(20 " + num(kTop + ph / 2) +
       ") rotate(-90)\" text-anchor=\"middle\">" + escape(spec.y_label) + "</text>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* colour = kColours[i % std::size(kColours)];
    std::string pts;
    for (const auto& [x, y] : s.points) pts += num(px(x)) + "," + num(py(y)) + " ";
    if (!pts.empty()) pts.pop_back();
    o += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
         "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    if (spec.markers)
      for (const auto& [x, y] : s.points)
        o += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" +
             colour + "\"/>\n";
    const double ly = kTop + 16 + 16 * i;
    o += "<line x1=\"" + num(kLeft + pw - 150) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
         num(kLeft + pw - 130) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + colour +
         "\" stroke-width=\"2\"/>\n";
    o += "<text x=\"" + num(kLeft + pw - 125) + "\" y=\"" + num(ly) + "\">" + escape(s.label) +
         "</text>\n";
  }
  o += "</svg>\n";
  return o;
}

}  // namespace hdrcheck::cli
