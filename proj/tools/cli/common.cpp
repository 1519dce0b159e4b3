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

#include "common.h"

#include <cstdio>
#include <ostream>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck::cli {

std::vector<Frame> load_frames(const std::filesystem::path& path,
                               const std::string& raw_descriptor) {
  std::vector<Frame> frames;
  if (!raw_descriptor.empty()) {
    const auto bytes = read_file(raw_descriptor);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(bytes.begin(), bytes.end());
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("raw descriptor is not valid JSON: ") + e.what(), e.byte);
    }
    frames = read_raw_planar(path, raw_descriptor_from_json(j));
  } else {
    frames = read_y4m(path).frames;
  }
  const auto sidecar = sidecar_path_for(path);
  if (std::filesystem::exists(sidecar)) {
    const SidecarManifest m = read_manifest(sidecar);
    for (Frame& f : frames) f.signalling = m.signalling;
  }
  return frames;
}

Rect parse_rect(const std::string& text) {
  Rect r;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &r.x, &r.y, &r.width, &r.height, &tail) != 4)
    throw ParameterError("region must look like x,y,width,height, got '" + text + "'");
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  char tail = 0;
  const int n = std::sscanf(text.c_str(), "%d:%d%c", &q.num, &q.den, &tail);
  if (n == 1) {
    q.den = 1;
  } else if (n != 2) {
    throw ParameterError("frame rate must look like NUM:DEN, got '" + text + "'");
  }
  if (q.num <= 0 || q.den <= 0) throw ParameterError("frame rate must be positive");
  return q;
}

SignalRange parse_range(const std::string& text) {
  if (text == "narrow" || text == "limited" || text == "tv") return SignalRange::kNarrow;
  if (text == "full" || text == "pc") return SignalRange::kFull;
  throw ParameterError("range must be narrow or full, got '" + text + "'");
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

int finish_report(const Context& ctx, const Report& report, const std::string& explicit_path,
                  const std::filesystem::path& input) {
  std::filesystem::path path = explicit_path;
  if (path.empty()) {
    const std::string stem = input.empty() ? "hdrcheck" : input.stem().string();
    path = stem + "." + report.check + ".report.json";
  }
  const auto full = ctx.output_path(path);
  write_report(report, full);
  *ctx.out << report.check << ": " << to_string(report.status) << " - " << report.summary << "\n";
  for (const auto& f : report.findings) *ctx.out << "  " << f << "\n";
  *ctx.out << "report: " << full.string() << "\n";
  return exit_code(report.status);
}

void write_text(const Context& ctx, const std::filesystem::path& path, const std::string& text) {
  write_file_atomic(ctx.output_path(path), text);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + " is not valid JSON: " + e.what(), e.byte);
  }
}

}  // namespace hdrcheck::cli
