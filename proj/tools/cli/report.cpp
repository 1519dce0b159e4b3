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

#include "report.h"

#include <cmath>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck::cli {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kWarn: return "warn";
    case Status::kFail: return "fail";
  }
  return "?";
}

Status status_from_name(const std::string& name) {
  if (name == "pass") return Status::kPass;
  if (name == "warn") return Status::kWarn;
  if (name == "fail") return Status::kFail;
  throw ValidationError("status", "unknown value '" + name + "'");
}

int exit_code(Status s) { return s == Status::kFail ? 2 : 0; }

json Report::to_json() const {
  return {{"schema", kReportSchema}, {"schema_version", schema_version},
          {"check", check},          {"status", to_string(status)},
          {"summary", summary},      {"inputs", inputs},
          {"result", result},        {"findings", findings}};
}

Report report_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("<root>", "expected an object");
  if (!j.contains("schema") || j.at("schema") != kReportSchema)
    throw ValidationError("schema", "expected '" + std::string(kReportSchema) + "'");
  Report r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.check = j.at("check").get<std::string>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.summary = j.value("summary", "");
    r.inputs = j.value("inputs", json::array());
    r.result = j.value("result", json::object());
    r.findings = j.value("findings", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw ValidationError("report", e.what());
  }
  return r;
}

void write_report(const Report& r, const std::filesystem::path& path) {
  write_file_atomic(path, r.to_json().dump(2) + "\n");
}

json finite_or_marker(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "identical" : "-inf";
}

}  // namespace hdrcheck::cli
