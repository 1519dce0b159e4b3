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

#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck {

using nlohmann::json;

namespace {

constexpr const char* kSidecarSchema = "hdrcheck.sidecar";

// Field access that reports the dotted path of whatever is missing or has
// the wrong type.
class Fields {
 public:
  Fields(const json& j, std::string prefix) : j_(j), prefix_(std::move(prefix)) {
    if (!j_.is_object()) throw ValidationError(prefix_.empty() ? "<root>" : prefix_, "expected an object");
  }

  bool has(const char* name) const { return j_.contains(name) && !j_.at(name).is_null(); }

  const json& at(const char* name) const {
    if (!j_.contains(name)) throw ValidationError(path(name), "missing");
    return j_.at(name);
  }

  template <typename T>
  T get(const char* name) const {
    const json& v = at(name);
    try {
      return v.get<T>();
    } catch (const json::exception&) {
      throw ValidationError(path(name), "has the wrong type");
    }
  }

  Fields sub(const char* name) const { return Fields(at(name), path(name)); }
  std::string path(const char* name) const { return prefix_.empty() ? name : prefix_ + "." + name; }

 private:
  const json& j_;
  std::string prefix_;
};

json xy_json(const Chromaticity& c) { return json::array({c.x, c.y}); }

Chromaticity xy_from(const Fields& f, const char* name) {
  const json& v = f.at(name);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ValidationError(f.path(name), "expected [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

HdrSignalling signalling_from(const Fields& f) {
  HdrSignalling s;
  if (f.has("colour")) {
    const Fields c = f.sub("colour");
    s.colour = ColourDescription{c.get<int>("colour_primaries"),
                                 c.get<int>("transfer_characteristics"),
                                 c.get<int>("matrix_coefficients"), c.get<bool>("full_range")};
  }
  if (f.has("mastering_display")) {
    const Fields m = f.sub("mastering_display");
    MasteringDisplay md;
    md.primaries = {xy_from(m, "red"), xy_from(m, "green"), xy_from(m, "blue")};
    md.white = xy_from(m, "white");
    md.max_luminance = m.get<double>("max_luminance");
    md.min_luminance = m.get<double>("min_luminance");
    if (m.has("order_matched")) md.order_matched = m.get<bool>("order_matched");
    s.mastering_display = md;
  }
  if (f.has("content_light")) {
    const Fields c = f.sub("content_light");
    s.content_light = ContentLight{c.get<unsigned>("max_cll"), c.get<unsigned>("max_fall")};
  }
  return s;
}

Rect rect_from(const Fields& f) {
  return {f.get<int>("x"), f.get<int>("y"), f.get<int>("width"), f.get<int>("height")};
}

PatternManifest pattern_from(const Fields& f) {
  PatternManifest m;
  m.kind = f.get<std::string>("kind");
  m.spec = f.at("spec");
  m.seed = f.get<std::uint64_t>("seed");
  m.prng = f.get<std::string>("prng");
  try {
    m.geometry = geometry_from_json(f.at("geometry"));
  } catch (const std::exception& e) {
    throw ValidationError(f.path("geometry"), e.what());
  }
  try {
    m.format = video_format_from_json(f.at("format"));
  } catch (const std::exception& e) {
    throw ValidationError(f.path("format"), e.what());
  }
  m.signalling = signalling_from(f.sub("signalling"));
  m.peak_code = f.get<int>("peak_code");
  m.base_code = f.get<int>("base_code");
  if (f.has("region")) m.region = rect_from(f.sub("region"));
  const json& counts = f.at("luma_counts");
  if (!counts.is_object()) throw ValidationError(f.path("luma_counts"), "expected an object");
  for (const auto& [code, n] : counts.items()) {
    try {
      m.luma_counts[std::stoi(code)] = n.get<std::uint64_t>();
    } catch (const std::exception&) {
      throw ValidationError(f.path("luma_counts") + "." + code, "malformed count");
    }
  }
  if (f.has("nominal_nits")) m.nominal_nits = f.get<double>("nominal_nits");
  if (f.has("notes")) m.notes = f.get<std::vector<std::string>>("notes");
  return m;
}

}  // namespace

json to_json(const HdrSignalling& s) {
  json j = json::object();
  if (s.colour)
    j["colour"] = {{"colour_primaries", s.colour->colour_primaries},
                   {"transfer_characteristics", s.colour->transfer_characteristics},
                   {"matrix_coefficients", s.colour->matrix_coefficients},
                   {"full_range", s.colour->full_range}};
  if (s.mastering_display) {
    const MasteringDisplay& md = *s.mastering_display;
    j["mastering_display"] = {{"red", xy_json(md.primaries[0])},
                              {"green", xy_json(md.primaries[1])},
                              {"blue", xy_json(md.primaries[2])},
                              {"white", xy_json(md.white)},
                              {"max_luminance", md.max_luminance},
                              {"min_luminance", md.min_luminance},
                              {"order_matched", md.order_matched}};
  }
  if (s.content_light)
    j["content_light"] = {{"max_cll", s.content_light->max_cll},
                          {"max_fall", s.content_light->max_fall}};
  return j;
}

HdrSignalling signalling_from_json(const json& j) { return signalling_from(Fields(j, "")); }

json to_json(const PatternManifest& m) {
  json counts = json::object();
  for (const auto& [code, n] : m.luma_counts) counts[std::to_string(code)] = n;
  json j = {{"kind", m.kind},
            {"spec", m.spec},
            {"seed", m.seed},
            {"prng", m.prng},
            {"geometry", to_json(m.geometry)},
            {"format", to_json(m.format)},
            {"signalling", to_json(m.signalling)},
            {"peak_code", m.peak_code},
            {"base_code", m.base_code},
            {"luma_counts", counts},
            {"notes", m.notes}};
  if (m.region)
    j["region"] = {{"x", m.region->x},
                   {"y", m.region->y},
                   {"width", m.region->width},
                   {"height", m.region->height}};
  if (m.nominal_nits) j["nominal_nits"] = *m.nominal_nits;
  return j;
}

PatternManifest pattern_manifest_from_json(const json& j) { return pattern_from(Fields(j, "")); }

json to_json(const SidecarManifest& m) {
  json files = json::array();
  for (const FileDigest& d : m.files)
    files.push_back({{"path", d.path}, {"sha256", d.sha256}, {"bytes", d.bytes}});
  json j = {{"schema", kSidecarSchema},
            {"schema_version", m.schema_version},
            {"signalling", to_json(m.signalling)},
            {"files", files}};
  if (m.pattern) j["pattern"] = to_json(*m.pattern);
  return j;
}

SidecarManifest sidecar_from_json(const json& j) {
  const Fields f(j, "");
  if (f.get<std::string>("schema") != kSidecarSchema)
    throw ValidationError("schema", "expected '" + std::string(kSidecarSchema) + "'");
  SidecarManifest m;
  m.schema_version = f.get<int>("schema_version");
  if (m.schema_version != kSidecarSchemaVersion)
    throw ValidationError("schema_version", "unsupported version " +
                                                std::to_string(m.schema_version) +
                                                " (this build reads version " +
                                                std::to_string(kSidecarSchemaVersion) + ")");
  m.signalling = signalling_from(f.sub("signalling"));
  if (f.has("pattern")) m.pattern = pattern_from(f.sub("pattern"));
  const json& files = f.at("files");
  if (!files.is_array()) throw ValidationError("files", "expected an array");
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Fields e(files[i], "files[" + std::to_string(i) + "]");
    FileDigest d{e.get<std::string>("path"), e.get<std::string>("sha256"),
                 e.get<std::uint64_t>("bytes")};
    if (d.sha256.size() != 64 || d.sha256.find_first_not_of("0123456789abcdef") != std::string::npos)
      throw ValidationError(e.path("sha256"), "expected 64 lowercase hex digits");
    m.files.push_back(std::move(d));
  }
  return m;
}

void write_manifest(const SidecarManifest& m, const std::filesystem::path& path) {
  write_file_atomic(path, to_json(m).dump(2) + "\n");
}

SidecarManifest read_manifest(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), e.byte);
  }
  return sidecar_from_json(j);
}

FileDigest digest_file(const std::filesystem::path& file, const std::filesystem::path& base_dir) {
  const auto bytes = read_file(file);
  std::filesystem::path rel = file;
  if (!base_dir.empty()) rel = std::filesystem::relative(file, base_dir);
  return {rel.generic_string(), sha256_hex(bytes), bytes.size()};
}

void verify_digests(const SidecarManifest& m, const std::filesystem::path& base_dir) {
  for (const FileDigest& d : m.files) {
    const auto path = base_dir / d.path;
    if (!std::filesystem::exists(path))
      throw VerificationError(d.path + ": listed in the manifest but missing");
    const auto bytes = read_file(path);
    if (bytes.size() != d.bytes)
      throw VerificationError(d.path + ": size " + std::to_string(bytes.size()) +
                              " does not match the manifest (" + std::to_string(d.bytes) + ")");
    const std::string actual = sha256_hex(bytes);
    if (actual != d.sha256)
      throw VerificationError(d.path + ": sha256 " + actual + " does not match the manifest");
  }
}

std::filesystem::path sidecar_path_for(const std::filesystem::path& media) {
  std::filesystem::path p = media;
  p += ".manifest.json";
  return p;
}

}  // namespace hdrcheck
