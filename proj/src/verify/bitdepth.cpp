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

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/verify.h"

namespace hdrcheck {

namespace {

// 1 / Phi^-1(3/4): converts a median absolute deviation to a Gaussian sigma.
constexpr double kMadToSigma = 1.4826;

struct RegionView {
  const Plane* plane;
  Rect r;
  int at(int x, int y) const { return plane->at(r.x + x, r.y + y); }
};

RegionView make_view(const Frame& frame, std::optional<Rect> region, int plane) {
  if (plane < 0 || plane > 2) throw ParameterError("plane index must be 0, 1 or 2");
  const Plane& p = frame.planes[plane];
  const Rect r = region.value_or(Rect{0, 0, p.width, p.height});
  if (r.width <= 0 || r.height <= 0 || r.x < 0 || r.y < 0 || r.x + r.width > p.width ||
      r.y + r.height > p.height)
    throw ParameterError("analysis region " + std::to_string(r.width) + "x" +
                         std::to_string(r.height) + "+" + std::to_string(r.x) + "+" +
                         std::to_string(r.y) + " leaves the " + std::to_string(p.width) + "x" +
                         std::to_string(p.height) + " plane");
  return {&p, r};
}

template <typename T>
T upper_median(std::vector<T> v) {
  auto mid = v.begin() + v.size() / 2;
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

// Rounded mean across the ramp's constant direction, one value per position
// along the gradient.
std::vector<int> mean_profile(const RegionView& v, RampOrientation o) {
  const bool horizontal = o == RampOrientation::kHorizontal;
  const int n = horizontal ? v.r.width : v.r.height;
  const int m = horizontal ? v.r.height : v.r.width;
  std::vector<int> profile(n);
  for (int i = 0; i < n; ++i) {
    long long sum = 0;
    for (int k = 0; k < m; ++k) sum += horizontal ? v.at(i, k) : v.at(k, i);
    profile[i] = static_cast<int>(std::lround(static_cast<double>(sum) / m));
  }
  return profile;
}

int profile_range(const std::vector<int>& p) {
  auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return *hi - *lo;
}

struct Profile {
  RampOrientation orientation;
  std::vector<int> values;
};

Profile choose_profile(const RegionView& v, std::optional<RampOrientation> orientation) {
  if (orientation) return {*orientation, mean_profile(v, *orientation)};
  auto h = mean_profile(v, RampOrientation::kHorizontal);
  auto vert = mean_profile(v, RampOrientation::kVertical);
  if (profile_range(vert) > profile_range(h)) return {RampOrientation::kVertical, std::move(vert)};
  return {RampOrientation::kHorizontal, std::move(h)};
}

// Most frequent non-zero step between runs of the profile; ties go to the
// smaller step. Single-sample runs are noise excursions and are skipped
// unless nothing else is left.
std::optional<int> modal_step(const std::vector<int>& profile) {
  struct Run {
    int value;
    std::size_t length;
  };
  std::vector<Run> runs;
  for (int value : profile) {
    if (!runs.empty() && runs.back().value == value)
      ++runs.back().length;
    else
      runs.push_back({value, 1});
  }
  std::vector<Run> kept;
  std::copy_if(runs.begin(), runs.end(), std::back_inserter(kept),
               [](const Run& r) { return r.length > 1; });
  if (kept.size() < 2) kept = runs;
  std::map<int, int> counts;
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const int d = std::abs(kept[i].value - kept[i - 1].value);
    if (d) ++counts[d];
  }
  if (counts.empty()) return std::nullopt;
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

// First differences that stay inside one band: every difference along the
// band direction, plus differences along the gradient where the profile is
// flat.
double noise_sigma(const RegionView& v, const Profile& p) {
  const bool horizontal = p.orientation == RampOrientation::kHorizontal;
  std::vector<int> diffs;
  for (int y = 0; y < v.r.height; ++y) {
    for (int x = 0; x < v.r.width; ++x) {
      const int here = v.at(x, y);
      if (x + 1 < v.r.width && (!horizontal || p.values[x] == p.values[x + 1]))
        diffs.push_back(v.at(x + 1, y) - here);
      if (y + 1 < v.r.height && (horizontal || p.values[y] == p.values[y + 1]))
        diffs.push_back(v.at(x, y + 1) - here);
    }
  }
  if (diffs.empty()) return 0;
  const int centre = upper_median(diffs);
  for (int& d : diffs) d = std::abs(d - centre);
  return kMadToSigma * upper_median(diffs) / std::sqrt(2.0);
}

}  // namespace

const char* to_string(Confidence c) {
  switch (c) {
    case Confidence::kHigh: return "high";
    case Confidence::kLow: return "low";
    case Confidence::kNoiseMasked: return "noise-masked";
  }
  return "?";
}

BitDepthReport estimate_effective_bitdepth(const Frame& frame, std::optional<Rect> region,
                                           int plane) {
  const RegionView v = make_view(frame, region, plane);
  std::vector<bool> seen(static_cast<std::size_t>(frame.max_code()) + 1, false);
  std::vector<int> distinct;
  for (int y = 0; y < v.r.height; ++y)
    for (int x = 0; x < v.r.width; ++x) {
      const int c = v.at(x, y);
      if (!seen[c]) {
        seen[c] = true;
        distinct.push_back(c);
      }
    }
  if (distinct.size() < 2)
    throw InsufficientSignalError("bit-depth estimation needs at least two distinct codes, found " +
                                  std::to_string(distinct.size()));
  std::sort(distinct.begin(), distinct.end());
  int g = 0;
  for (std::size_t i = 1; i < distinct.size(); ++i) g = std::gcd(g, distinct[i] - distinct[i - 1]);

  BitDepthReport r;
  r.container_bits = frame.bit_depth;
  r.distinct_levels = distinct.size();
  r.step_gcd = g;
  r.effective_bits = frame.bit_depth - std::log2(static_cast<double>(g));

  const Profile p = choose_profile(v, std::nullopt);
  const std::optional<int> modal = modal_step(p.values);
  if (modal && *modal > g) r.candidate_step = modal;
  r.noise_sigma_estimate = noise_sigma(v, p);

  const double step = std::max(g, r.candidate_step.value_or(0));
  const double ratio = r.noise_sigma_estimate / step;
  if (ratio >= kNoiseMaskedRatio)
    r.confidence = Confidence::kNoiseMasked;
  else if (ratio >= kLowConfidenceRatio)
    r.confidence = Confidence::kLow;
  else
    r.confidence = Confidence::kHigh;
  return r;
}

BandingReport detect_banding(const Frame& frame, std::optional<Rect> region,
                             std::optional<RampOrientation> orientation, int plane) {
  const RegionView v = make_view(frame, region, plane);
  const Profile p = choose_profile(v, orientation);
  BandingReport r;
  r.orientation = p.orientation;
  const auto& values = p.values;
  const int extent = static_cast<int>(values.size());

  bool up = false, down = false;
  for (int i = 1; i < extent; ++i) {
    if (values[i] == values[i - 1]) continue;
    r.edges.push_back(i);
    (values[i] > values[i - 1] ? up : down) = true;
  }
  r.monotone = !(up && down);
  if (!r.monotone) r.warnings.push_back("region is not a monotone gradient");

  r.band_count = r.edges.size() + 1;
  r.mean_band_width = static_cast<double>(extent) / r.band_count;
  int start = 0;
  r.min_band_width = extent;
  r.max_band_width = 0;
  for (std::size_t b = 0; b <= r.edges.size(); ++b) {
    const int end = b < r.edges.size() ? r.edges[b] : extent;
    r.min_band_width = std::min(r.min_band_width, end - start);
    r.max_band_width = std::max(r.max_band_width, end - start);
    start = end;
  }
  return r;
}

}  // namespace hdrcheck
