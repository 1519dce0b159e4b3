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

#ifndef HDRCHECK_TOOLS_CLI_REPORT_H
#define HDRCHECK_TOOLS_CLI_REPORT_H

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace hdrcheck::cli {

inline constexpr const char* kReportSchema = "hdrcheck.report";
inline constexpr int kReportSchemaVersion = 1;

enum class Status { kPass, kWarn, kFail };
const char* to_string(Status s);
Status status_from_name(const std::string& name);
int exit_code(Status s);

// Envelope shared by every command that emits a verdict. Contains no
// timestamps so repeated runs are byte-identical.
struct Report {
  std::string check;  // e.g. "verify.bitdepth"
  Status status = Status::kPass;
  std::string summary;
  nlohmann::json inputs = nlohmann::json::array();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> findings;
  int schema_version = kReportSchemaVersion;

  nlohmann::json to_json() const;
};

// Throws ValidationError for a document that is not a report.
Report report_from_json(const nlohmann::json& j);

void write_report(const Report& r, const std::filesystem::path& path);

// JSON number, or the string "identical" / "-inf" for non-finite values.
nlohmann::json finite_or_marker(double v);

// Conformance area a check belongs to, "Other" when unknown.
std::string check_area(const std::string& check);

}  // namespace hdrcheck::cli

#endif  // HDRCHECK_TOOLS_CLI_REPORT_H
