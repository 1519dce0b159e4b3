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

#ifndef HDRCHECK_MEDIA_IO_H
#define HDRCHECK_MEDIA_IO_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdrcheck/frame.h"
#include "hdrcheck/patterns.h"

namespace hdrcheck {

////////////////////////////////////////////////////////////////////////////////
// Files

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const std::filesystem::path& path);

////////////////////////////////////////////////////////////////////////////////
// YUV4MPEG2
//
// Samples deeper than 8 bits are stored as little-endian 16-bit words
// (C420p10, C444p12, ...). Range travels in XCOLORRANGE=LIMITED|FULL; RGB
// 4:4:4 frames are tagged XCOLORMODEL=RGB. Y4M has no HDR signalling, so
// frames read back carry none; it lives in the sidecar manifest.

struct Y4mHeader {
  int width = 0;
  int height = 0;
  Rational fps{25, 1};
  char interlace = 'p';
  std::optional<Rational> aspect;
  std::string colorspace = "420jpeg";  // value of the C token
  std::vector<std::string> extensions;  // X tokens, without the leading X

  int bit_depth() const;
  ChromaFormat chroma() const;
  SignalRange range() const;
  ColorModel model() const;

  bool operator==(const Y4mHeader&) const = default;
};

struct Y4mStream {
  Y4mHeader header;
  std::vector<Frame> frames;
};

// Header describing `f`, with the given frame rate.
Y4mHeader y4m_header_for(const Frame& f, Rational fps = {25, 1});

// Throws ParseError (with byte offset) or TruncationError.
Y4mStream parse_y4m(std::span<const std::uint8_t> bytes);
Y4mStream read_y4m(const std::filesystem::path& path);

std::vector<std::uint8_t> serialize_y4m(const Y4mStream& stream);
void write_y4m(const Y4mStream& stream, const std::filesystem::path& path);
void write_y4m(const std::vector<Frame>& frames, const std::filesystem::path& path,
               Rational fps = {25, 1});

////////////////////////////////////////////////////////////////////////////////
// ISOBMFF signalling scan

struct BoxInfo {
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  std::uint32_t header_size = 0;
  std::string type;
  int depth = 0;
  std::string path;  // e.g. "moov/trak/mdia/minf/stbl/stsd/hvc1/colr"
};

struct IsobmffScan {
  HdrSignalling signalling;
  std::vector<BoxInfo> boxes;
  bool icc_profile = false;
  // From hvcC, av1C or vpcC when present.
  std::optional<int> bit_depth;
  std::vector<std::string> warnings;
};

// Walks the box tree and extracts colr (nclx/nclc), mdcv, clli and the
// coded bit depth. Unknown
// boxes are inventoried and skipped. Throws StructuralError on size
// overruns or malformed headers.
IsobmffScan scan_isobmff_bytes(std::span<const std::uint8_t> bytes);
IsobmffScan scan_isobmff(const std::filesystem::path& path);

// Labels three stored mdcv primaries as R, G, B. Matches known primaries
// sets within `tolerance` in any order; otherwise labels by geometry
// (largest x = red, largest remaining y = green) and reports
// order_matched = false.
MasteringDisplay label_mastering_primaries(const std::array<Chromaticity, 3>& stored,
                                           double tolerance = 0.002);

////////////////////////////////////////////////////////////////////////////////
// Raw planar

enum class Endianness { kLittle, kBig };

struct RawDescriptor {
  int width = 0;
  int height = 0;
  int bit_depth = 16;
  ColorModel model = ColorModel::kRgb;
  ChromaFormat chroma = ChromaFormat::k444;
  SignalRange range = SignalRange::kFull;
  std::string plane_order = "RGB";  // letters naming the stored planes
  Endianness endianness = Endianness::kLittle;

  int bytes_per_sample() const { return bit_depth > 8 ? 2 : 1; }
  std::uint64_t frame_bytes() const;
  // Throws ParameterError when fields are inconsistent.
  void validate() const;
};

nlohmann::json to_json(const RawDescriptor& d);
RawDescriptor raw_descriptor_from_json(const nlohmann::json& j);

// Throws ParameterError when the byte count is not a positive multiple of
// the descriptor's frame size.
std::vector<Frame> parse_raw_planar(std::span<const std::uint8_t> bytes, const RawDescriptor& d);
std::vector<Frame> read_raw_planar(const std::filesystem::path& path, const RawDescriptor& d);
std::vector<std::uint8_t> serialize_raw_planar(const std::vector<Frame>& frames,
                                               const RawDescriptor& d);
void write_raw_planar(const std::vector<Frame>& frames, const std::filesystem::path& path,
                      const RawDescriptor& d);

////////////////////////////////////////////////////////////////////////////////
// Sidecar manifest (JSON, schema "hdrcheck.sidecar" version 1)

inline constexpr int kSidecarSchemaVersion = 1;

struct FileDigest {
  std::string path;  // relative to the manifest's directory
  std::string sha256;
  std::uint64_t bytes = 0;
  bool operator==(const FileDigest&) const = default;
};

struct SidecarManifest {
  int schema_version = kSidecarSchemaVersion;
  std::optional<PatternManifest> pattern;
  HdrSignalling signalling;
  std::vector<FileDigest> files;
};

nlohmann::json to_json(const HdrSignalling& s);
HdrSignalling signalling_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PatternManifest& m);
PatternManifest pattern_manifest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SidecarManifest& m);
// Throws ValidationError naming the missing or malformed field, or for an
// unknown schema version.
SidecarManifest sidecar_from_json(const nlohmann::json& j);

void write_manifest(const SidecarManifest& m, const std::filesystem::path& path);
SidecarManifest read_manifest(const std::filesystem::path& path);

FileDigest digest_file(const std::filesystem::path& file, const std::filesystem::path& base_dir);
// Re-hashes every listed file relative to `base_dir`. Throws
// VerificationError naming the first mismatching file.
void verify_digests(const SidecarManifest& m, const std::filesystem::path& base_dir);

// "<video>.manifest.json" next to a media file.
std::filesystem::path sidecar_path_for(const std::filesystem::path& media);

}  // namespace hdrcheck

#endif  // HDRCHECK_MEDIA_IO_H
