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

#ifndef HDRCHECK_TOOLS_CLI_COMMON_H
#define HDRCHECK_TOOLS_CLI_COMMON_H

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.h"
#include "hdrcheck/frame.h"
#include "hdrcheck/patterns.h"
#include "report.h"

namespace hdrcheck::cli {

// Reads Y4M, or raw planar when a descriptor JSON is given. Signalling is
// taken from a sidecar manifest next to the file when one exists.
std::vector<Frame> load_frames(const std::filesystem::path& path,
                               const std::string& raw_descriptor = "");

// "x,y,w,h"; throws ParameterError when malformed.
Rect parse_rect(const std::string& text);
Rational parse_rational(const std::string& text);
SignalRange parse_range(const std::string& text);

// Compact decimal for file names and messages ("12.5", "1").
std::string short_number(double v);

// Writes the report (default "<stem>.<check>.report.json" in the output
// directory), prints its summary and returns the exit code.
int finish_report(const Context& ctx, const Report& report, const std::string& explicit_path,
                  const std::filesystem::path& input);

// Parses a JSON file; throws ParseError with the byte offset when invalid.
nlohmann::json read_json_file(const std::filesystem::path& path);

// Shipped panel profile by name (or alias reference/lcd/oled), or a path.
std::filesystem::path resolve_profile(const std::string& name_or_path);

void write_text(const Context& ctx, const std::filesystem::path& path, const std::string& text);

}  // namespace hdrcheck::cli

#endif  // HDRCHECK_TOOLS_CLI_COMMON_H
