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

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view cell, const char* column, std::size_t line) {
  double v = 0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || end != cell.data() + cell.size() || !std::isfinite(v))
    throw LogError(std::string(column) + ": '" + std::string(cell) + "' is not a number", line);
  return v;
}

int parse_int(std::string_view cell, const char* column, std::size_t line) {
  int v = 0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || end != cell.data() + cell.size())
    throw LogError(std::string(column) + ": '" + std::string(cell) + "' is not an integer", line);
  return v;
}

void check_sample(const MeasurementSample& s, double previous_t, std::size_t line) {
  if (s.t < 0) throw LogError("t_s must be non-negative", line);
  if (s.t < previous_t)
    throw LogError("timestamp " + std::to_string(s.t) + " decreases (previous " +
                       std::to_string(previous_t) + ")",
                   line);
  if (s.luminance < 0) throw LogError("luminance_nits must be non-negative", line);
  if (s.window_percent && (*s.window_percent < 0 || *s.window_percent > 100))
    throw LogError("window_pct must be in [0, 100]", line);
  if (s.code_level && *s.code_level < 0) throw LogError("code_level must be non-negative", line);
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

}  // namespace

const char* to_string(Probe p) {
  switch (p) {
    case Probe::kWhite: return "white";
    case Probe::kBlack: return "black";
    case Probe::kFull: return "full";
  }
  return "?";
}

std::optional<Probe> probe_from_name(const std::string& name) {
  if (name == "white") return Probe::kWhite;
  if (name == "black") return Probe::kBlack;
  if (name == "full") return Probe::kFull;
  return std::nullopt;
}

std::vector<MeasurementSample> MeasurementLog::of(Probe p) const {
  std::vector<MeasurementSample> out;
  for (const auto& s : samples)
    if (s.probe == p) out.push_back(s);
  return out;
}

MeasurementLog parse_measurement_log(const std::string& text) {
  MeasurementLog log;
  bool header_seen = false;
  double previous_t = 0;
  std::size_t line_no = 0;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (line.empty()) continue;
    if (line.front() == '#') {
      log.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    if (!header_seen) {
      if (line != kLogHeader)
        throw LogError("expected header '" + std::string(kLogHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 6)
      throw LogError("expected 6 columns, found " + std::to_string(cells.size()), line_no);
    MeasurementSample s;
    if (cells[0].empty()) throw LogError("t_s is required", line_no);
    if (cells[1].empty()) throw LogError("luminance_nits is required", line_no);
    s.t = parse_double(cells[0], "t_s", line_no);
    s.luminance = parse_double(cells[1], "luminance_nits", line_no);
    const auto probe = probe_from_name(std::string(cells[2]));
    if (!probe)
      throw LogError("probe must be white, black or full, got '" + std::string(cells[2]) + "'",
                     line_no);
    s.probe = *probe;
    if (!cells[3].empty()) s.window_percent = parse_double(cells[3], "window_pct", line_no);
    if (!cells[4].empty()) s.code_level = parse_int(cells[4], "code_level", line_no);
    if (!cells[5].empty()) s.temperature = parse_double(cells[5], "temp_c", line_no);
    check_sample(s, previous_t, line_no);
    previous_t = s.t;
    log.samples.push_back(s);
  }
  if (!header_seen) throw LogError("missing header line");
  return log;
}

MeasurementLog read_measurement_log(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return parse_measurement_log(std::string(bytes.begin(), bytes.end()));
}

void validate_log(const MeasurementLog& log) {
  double previous_t = 0;
  for (std::size_t i = 0; i < log.samples.size(); ++i) {
    check_sample(log.samples[i], previous_t, 0);
    previous_t = log.samples[i].t;
  }
}

std::string serialize_measurement_log(const MeasurementLog& log) {
  std::string out;
  for (const auto& c : log.comments) out += "# " + c + "\n";
  out += kLogHeader;
  out += '\n';
  for (const auto& s : log.samples) {
    append_number(out, s.t);
    out += ',';
    append_number(out, s.luminance);
    out += ',';
    out += to_string(s.probe);
    out += ',';
    if (s.window_percent) append_number(out, *s.window_percent);
    out += ',';
    if (s.code_level) out += std::to_string(*s.code_level);
    out += ',';
    if (s.temperature) append_number(out, *s.temperature);
    out += '\n';
  }
  return out;
}

void write_measurement_log(const MeasurementLog& log, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_measurement_log(log));
}

}  // namespace hdrcheck
