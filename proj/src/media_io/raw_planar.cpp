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
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck {

using nlohmann::json;

namespace {

// Maps each stored plane to its frame plane index.
std::array<int, 3> plane_mapping(const RawDescriptor& d) {
  const std::string canonical = d.model == ColorModel::kRgb ? "RGB" : "YUV";
  std::array<int, 3> map{};
  for (int i = 0; i < 3; ++i) {
    const char c = d.plane_order[i];
    const auto pos = canonical.find(c);
    if (pos == std::string::npos)
      throw ParameterError("plane order '" + d.plane_order + "' is not a permutation of " +
                           canonical);
    map[i] = static_cast<int>(pos);
  }
  return map;
}

}  // namespace

void RawDescriptor::validate() const {
  if (width <= 0 || height <= 0)
    throw ParameterError("raw dimensions must be positive");
  if (bit_depth < 8 || bit_depth > 16)
    throw ParameterError("raw bit depth must be in [8, 16]");
  if (model == ColorModel::kRgb && chroma != ChromaFormat::k444)
    throw ParameterError("raw RGB must be 4:4:4");
  if (chroma == ChromaFormat::k420 && (width % 2 || height % 2))
    throw ParameterError("raw 4:2:0 requires even dimensions");
  if (plane_order.size() != 3)
    throw ParameterError("plane order must name three planes");
  std::array<int, 3> m = plane_mapping(*this);
  std::sort(m.begin(), m.end());
  if (m != std::array<int, 3>{0, 1, 2})
    throw ParameterError("plane order '" + plane_order + "' repeats a plane");
}

std::uint64_t RawDescriptor::frame_bytes() const {
  std::uint64_t n = 0;
  for (int i = 0; i < 3; ++i) {
    auto [w, h] = plane_size(width, height, chroma, i);
    n += static_cast<std::uint64_t>(w) * h;
  }
  return n * bytes_per_sample();
}

json to_json(const RawDescriptor& d) {
  return {{"width", d.width},
          {"height", d.height},
          {"bit_depth", d.bit_depth},
          {"model", to_string(d.model)},
          {"chroma", to_string(d.chroma)},
          {"range", to_string(d.range)},
          {"plane_order", d.plane_order},
          {"endianness", d.endianness == Endianness::kLittle ? "little" : "big"}};
}

RawDescriptor raw_descriptor_from_json(const json& j) {
  RawDescriptor d;
  auto field = [&](const char* name) -> const json& {
    if (!j.contains(name)) throw ValidationError(name, "missing");
    return j.at(name);
  };
  try {
    d.width = field("width").get<int>();
    d.height = field("height").get<int>();
    if (j.contains("bit_depth")) d.bit_depth = j.at("bit_depth").get<int>();
    if (j.contains("model")) {
      const auto m = j.at("model").get<std::string>();
      if (m == "rgb")
        d.model = ColorModel::kRgb;
      else if (m == "ycbcr")
        d.model = ColorModel::kYcbcr;
      else
        throw ValidationError("model", "unknown value '" + m + "'");
    }
    if (j.contains("chroma")) {
      const auto c = j.at("chroma").get<std::string>();
      if (c == "444")
        d.chroma = ChromaFormat::k444;
      else if (c == "420")
        d.chroma = ChromaFormat::k420;
      else
        throw ValidationError("chroma", "unknown value '" + c + "'");
    }
    if (j.contains("range")) {
      const auto r = j.at("range").get<std::string>();
      if (r == "full")
        d.range = SignalRange::kFull;
      else if (r == "narrow")
        d.range = SignalRange::kNarrow;
      else
        throw ValidationError("range", "unknown value '" + r + "'");
    }
    if (j.contains("plane_order"))
      d.plane_order = j.at("plane_order").get<std::string>();
    else if (d.model == ColorModel::kYcbcr)
      d.plane_order = "YUV";
    if (j.contains("endianness")) {
      const auto e = j.at("endianness").get<std::string>();
      if (e == "little")
        d.endianness = Endianness::kLittle;
      else if (e == "big")
        d.endianness = Endianness::kBig;
      else
        throw ValidationError("endianness", "unknown value '" + e + "'");
    }
  } catch (const json::exception& e) {
    throw ValidationError("raw descriptor", e.what());
  }
  d.validate();
  return d;
}

std::vector<Frame> parse_raw_planar(std::span<const std::uint8_t> bytes, const RawDescriptor& d) {
  d.validate();
  const std::uint64_t fb = d.frame_bytes();
  if (bytes.empty() || bytes.size() % fb != 0)
    throw ParameterError("raw file of " + std::to_string(bytes.size()) +
                         " bytes is not a positive multiple of the frame size " +
                         std::to_string(fb));
  const auto map = plane_mapping(d);
  const int bps = d.bytes_per_sample();
  const int max = (1 << d.bit_depth) - 1;
  std::vector<Frame> frames;
  std::size_t pos = 0;
  for (std::uint64_t n = 0; n < bytes.size() / fb; ++n) {
    Frame f = Frame::make(d.width, d.height, d.bit_depth, d.chroma, d.model, d.range);
    for (int i = 0; i < 3; ++i) {
      Plane& p = f.planes[map[i]];
      for (auto& s : p.samples) {
        unsigned v;
        if (bps == 1)
          v = bytes[pos];
        else if (d.endianness == Endianness::kLittle)
          v = bytes[pos] | (bytes[pos + 1] << 8);
        else
          v = (bytes[pos] << 8) | bytes[pos + 1];
        if (static_cast<int>(v) > max)
          throw ParseError("sample " + std::to_string(v) + " exceeds " +
                               std::to_string(d.bit_depth) + "-bit range",
                           pos);
        s = static_cast<std::uint16_t>(v);
        pos += bps;
      }
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<Frame> read_raw_planar(const std::filesystem::path& path, const RawDescriptor& d) {
  return parse_raw_planar(read_file(path), d);
}

std::vector<std::uint8_t> serialize_raw_planar(const std::vector<Frame>& frames,
                                               const RawDescriptor& d) {
  d.validate();
  const auto map = plane_mapping(d);
  std::vector<std::uint8_t> out;
  out.reserve(d.frame_bytes() * frames.size());
  for (const Frame& f : frames) {
    if (f.width != d.width || f.height != d.height || f.chroma != d.chroma ||
        f.model != d.model || f.bit_depth != d.bit_depth)
      throw ParameterError("frame does not match the raw descriptor");
    for (int i = 0; i < 3; ++i) {
      for (std::uint16_t s : f.planes[map[i]].samples) {
        if (d.bytes_per_sample() == 1) {
          out.push_back(static_cast<std::uint8_t>(s));
        } else if (d.endianness == Endianness::kLittle) {
          out.push_back(static_cast<std::uint8_t>(s & 0xff));
          out.push_back(static_cast<std::uint8_t>(s >> 8));
        } else {
          out.push_back(static_cast<std::uint8_t>(s >> 8));
          out.push_back(static_cast<std::uint8_t>(s & 0xff));
        }
      }
    }
  }
  return out;
}

void write_raw_planar(const std::vector<Frame>& frames, const std::filesystem::path& path,
                      const RawDescriptor& d) {
  write_file_atomic(path, serialize_raw_planar(frames, d));
}

}  // namespace hdrcheck
