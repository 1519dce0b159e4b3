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

#ifndef HDRCHECK_TOOLS_CLI_SVG_H
#define HDRCHECK_TOOLS_CLI_SVG_H

#include <string>
#include <utility>
#include <vector>

namespace hdrcheck::cli {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  bool markers = false;  // draw a dot at every point
};

// Self-contained SVG line plot on a fixed 800x500 viewBox with ticked,
// labelled axes. Output depends only on the input.
std::string svg_line_plot(const PlotSpec& spec);

}  // namespace hdrcheck::cli

#endif  // HDRCHECK_TOOLS_CLI_SVG_H
