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

#include <cmath>

#include "hdrcheck/colorimetry.h"

namespace hdrcheck {

const char* to_string(SignalRange range) {
  return range == SignalRange::kFull ? "full" : "narrow";
}

int nominal_min_code(int bit_depth, SignalRange range, PlaneKind kind) {
  (void)kind;
  if (range == SignalRange::kFull) return 0;
  return 16 << (bit_depth - 8);
}

int nominal_max_code(int bit_depth, SignalRange range, PlaneKind kind) {
  if (range == SignalRange::kFull) return (1 << bit_depth) - 1;
  return (kind == PlaneKind::kLuma ? 235 : 240) << (bit_depth - 8);
}

bool CodeValue::outside_nominal(PlaneKind kind) const {
  return code < nominal_min_code(bit_depth, range, kind) ||
         code > nominal_max_code(bit_depth, range, kind);
}

double quantization_step(int bit_depth, SignalRange range, PlaneKind kind) {
  if (range == SignalRange::kFull) return 1.0 / ((1 << bit_depth) - 1);
  const double scale = static_cast<double>(1 << (bit_depth - 8));
  return 1.0 / ((kind == PlaneKind::kLuma ? 219.0 : 224.0) * scale);
}

CodeValue quantize(double value, int bit_depth, SignalRange range, PlaneKind kind) {
  const double scale = static_cast<double>(1 << (bit_depth - 8));
  const int max_code = (1 << bit_depth) - 1;
  double d;
  if (range == SignalRange::kNarrow) {
    d = kind == PlaneKind::kLuma ? (219.0 * value + 16.0) * scale
                                 : (224.0 * value + 128.0) * scale;
  } else {
    d = kind == PlaneKind::kLuma ? value * max_code : value * max_code + (1 << (bit_depth - 1));
  }
  // std::round is half-away-from-zero.
  double r = std::round(d);
  if (std::isnan(r)) r = 0;
  if (r < 0) r = 0;
  if (r > max_code) r = max_code;
  return CodeValue{static_cast<int>(r), bit_depth, range};
}

double dequantize(const CodeValue& cv, PlaneKind kind) {
  const double scale = static_cast<double>(1 << (cv.bit_depth - 8));
  const int max_code = cv.max_code();
  if (cv.range == SignalRange::kNarrow) {
    return kind == PlaneKind::kLuma ? (cv.code / scale - 16.0) / 219.0
                                    : (cv.code / scale - 128.0) / 224.0;
  }
  return kind == PlaneKind::kLuma
             ? static_cast<double>(cv.code) / max_code
             : static_cast<double>(cv.code - (1 << (cv.bit_depth - 1))) / max_code;
}

}  // namespace hdrcheck
