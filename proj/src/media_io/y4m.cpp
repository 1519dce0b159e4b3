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
#include <string>
#include <string_view>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck {

namespace {

constexpr std::string_view kMagic = "YUV4MPEG2";
constexpr std::string_view kFrameMagic = "FRAME";
constexpr std::size_t kMaxHeaderBytes = 64 * 1024;

struct ColorspaceInfo {
  int bit_depth;
  ChromaFormat chroma;
};

std::optional<ColorspaceInfo> colorspace_info(std::string_view tag) {
  if (tag == "420jpeg" || tag == "420paldv" || tag == "420mpeg2" || tag == "420")
    return ColorspaceInfo{8, ChromaFormat::k420};
  if (tag == "444") return ColorspaceInfo{8, ChromaFormat::k444};
  for (int bits : {9, 10, 12, 14, 16}) {
    const std::string suffix = "p" + std::to_string(bits);
    if (tag == "420" + suffix) return ColorspaceInfo{bits, ChromaFormat::k420};
    if (tag == "444" + suffix) return ColorspaceInfo{bits, ChromaFormat::k444};
  }
  return std::nullopt;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_ratio(std::string_view s, Rational& out) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return false;
  return parse_int(s.substr(0, colon), out.num) && parse_int(s.substr(colon + 1), out.den);
}

std::string ratio_text(const Rational& r) {
  return std::to_string(r.num) + ":" + std::to_string(r.den);
}

bool has_extension(const Y4mHeader& h, std::string_view ext) {
  for (const auto& e : h.extensions)
    if (e == ext) return true;
  return false;
}

// Returns the offset one past the '\n' terminating the line that starts at
// `start`.
std::size_t line_end(std::span<const std::uint8_t> bytes, std::size_t start,
                     const char* what) {
  for (std::size_t i = start; i < bytes.size(); ++i) {
    if (bytes[i] == '\n') return i + 1;
    if (i - start > kMaxHeaderBytes) throw ParseError(std::string(what) + " line too long", start);
  }
  throw TruncationError(std::string(what) + " line is not terminated", bytes.size());
}

}  // namespace

int Y4mHeader::bit_depth() const {
  auto info = colorspace_info(colorspace);
  return info ? info->bit_depth : 8;
}

ChromaFormat Y4mHeader::chroma() const {
  auto info = colorspace_info(colorspace);
  return info ? info->chroma : ChromaFormat::k420;
}

SignalRange Y4mHeader::range() const {
  return has_extension(*this, "COLORRANGE=FULL") ? SignalRange::kFull : SignalRange::kNarrow;
}

ColorModel Y4mHeader::model() const {
  return has_extension(*this, "COLORMODEL=RGB") ? ColorModel::kRgb : ColorModel::kYcbcr;
}

Y4mHeader y4m_header_for(const Frame& f, Rational fps) {
  Y4mHeader h;
  h.width = f.width;
  h.height = f.height;
  h.fps = fps;
  h.interlace = 'p';
  h.aspect = Rational{1, 1};
  const bool is420 = f.chroma == ChromaFormat::k420;
  if (f.bit_depth == 8)
    h.colorspace = is420 ? "420mpeg2" : "444";
  else
    h.colorspace = std::string(is420 ? "420p" : "444p") + std::to_string(f.bit_depth);
  if (!colorspace_info(h.colorspace))
    throw ParameterError("Y4M cannot carry " + std::to_string(f.bit_depth) + "-bit samples");
  h.extensions.push_back(f.range == SignalRange::kFull ? "COLORRANGE=FULL"
                                                       : "COLORRANGE=LIMITED");
  if (f.model == ColorModel::kRgb) h.extensions.push_back("COLORMODEL=RGB");
  return h;
}

Y4mStream parse_y4m(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kMagic.size()) != kMagic)
    throw ParseError("missing YUV4MPEG2 magic", 0);

  const std::size_t header_end = line_end(bytes, 0, "stream header");
  Y4mStream stream;
  Y4mHeader& h = stream.header;
  bool have_w = false, have_h = false;
  std::size_t pos = kMagic.size();
  while (pos < header_end - 1) {
    if (bytes[pos] != ' ') throw ParseError("expected space between header tokens", pos);
    ++pos;
    std::size_t end = pos;
    while (end < header_end - 1 && bytes[end] != ' ') ++end;
    if (end == pos) throw ParseError("empty header token", pos);
    const std::string_view tok(reinterpret_cast<const char*>(bytes.data()) + pos, end - pos);
    const std::string_view value = tok.substr(1);
    bool ok = true;
    switch (tok[0]) {
      case 'W':
        ok = parse_int(value, h.width) && h.width > 0;
        have_w = true;
        break;
      case 'H':
        ok = parse_int(value, h.height) && h.height > 0;
        have_h = true;
        break;
      case 'F':
        ok = parse_ratio(value, h.fps) && h.fps.num > 0 && h.fps.den > 0;
        break;
      case 'I':
        ok = value.size() == 1 && std::string_view("ptbm?").find(value[0]) != std::string_view::npos;
        if (ok) h.interlace = value[0];
        break;
      case 'A': {
        Rational a;
        ok = parse_ratio(value, a);
        h.aspect = a;
        break;
      }
      case 'C':
        h.colorspace = std::string(value);
        ok = colorspace_info(value).has_value();
        if (!ok) throw ParseError("unsupported colourspace tag C" + std::string(value), pos);
        break;
      case 'X':
        h.extensions.emplace_back(value);
        break;
      default:
        throw ParseError("unknown header token '" + std::string(tok) + "'", pos);
    }
    if (!ok) throw ParseError("malformed header token '" + std::string(tok) + "'", pos);
    pos = end;
  }
  if (!have_w || !have_h) throw ParseError("header lacks W or H", 0);

  const int bit_depth = h.bit_depth();
  const ChromaFormat chroma = h.chroma();
  const ColorModel model = h.model();
  if (model == ColorModel::kRgb && chroma != ChromaFormat::k444)
    throw ParseError("COLORMODEL=RGB requires 4:4:4", 0);
  const int bps = bit_depth > 8 ? 2 : 1;
  std::uint64_t frame_bytes = 0;
  for (int i = 0; i < 3; ++i) {
    auto [pw, ph] = plane_size(h.width, h.height, chroma, i);
    frame_bytes += static_cast<std::uint64_t>(pw) * static_cast<std::uint64_t>(ph) * bps;
  }
  const int max_code = (1 << bit_depth) - 1;

  pos = header_end;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < kFrameMagic.size() ||
        std::string_view(reinterpret_cast<const char*>(bytes.data()) + pos, kFrameMagic.size()) !=
            kFrameMagic) {
      if (bytes.size() - pos < kFrameMagic.size()) throw TruncationError("truncated FRAME marker", pos);
      throw ParseError("expected FRAME marker", pos);
    }
    const std::size_t data = line_end(bytes, pos, "frame header");
    if (bytes.size() - data < frame_bytes)
      throw TruncationError("frame " + std::to_string(stream.frames.size()) + " needs " +
                                std::to_string(frame_bytes) + " bytes, " +
                                std::to_string(bytes.size() - data) + " remain",
                            data);
    Frame f = Frame::make(h.width, h.height, bit_depth, chroma, model, h.range());
    std::size_t p = data;
    for (int i = 0; i < 3; ++i) {
      for (std::uint16_t& s : f.planes[i].samples) {
        if (bps == 1) {
          s = bytes[p];
        } else {
          s = static_cast<std::uint16_t>(bytes[p] | (bytes[p + 1] << 8));
          if (s > max_code)
            throw ParseError("sample " + std::to_string(s) + " exceeds " +
                                 std::to_string(bit_depth) + "-bit range",
                             p);
        }
        p += bps;
      }
    }
    stream.frames.push_back(std::move(f));
    pos = p;
  }
  return stream;
}

Y4mStream read_y4m(const std::filesystem::path& path) { return parse_y4m(read_file(path)); }

std::vector<std::uint8_t> serialize_y4m(const Y4mStream& stream) {
  const Y4mHeader& h = stream.header;
  std::string header = std::string(kMagic) + " W" + std::to_string(h.width) + " H" +
                       std::to_string(h.height) + " F" + ratio_text(h.fps) + " I" + h.interlace;
  if (h.aspect) header += " A" + ratio_text(*h.aspect);
  header += " C" + h.colorspace;
  for (const auto& x : h.extensions) header += " X" + x;
  header += "\n";

  const int bit_depth = h.bit_depth();
  const int bps = bit_depth > 8 ? 2 : 1;
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (const Frame& f : stream.frames) {
    if (f.width != h.width || f.height != h.height || f.bit_depth != bit_depth ||
        f.chroma != h.chroma() || f.model != h.model() || f.range != h.range())
      throw ParameterError("frame does not match the Y4M stream header");
    out.insert(out.end(), kFrameMagic.begin(), kFrameMagic.end());
    out.push_back('\n');
    for (const Plane& p : f.planes) {
      for (std::uint16_t s : p.samples) {
        if (bps == 1) {
          out.push_back(static_cast<std::uint8_t>(s));
        } else {
          out.push_back(static_cast<std::uint8_t>(s & 0xff));
          out.push_back(static_cast<std::uint8_t>(s >> 8));
        }
      }
    }
  }
  return out;
}

void write_y4m(const Y4mStream& stream, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_y4m(stream));
}

void write_y4m(const std::vector<Frame>& frames, const std::filesystem::path& path, Rational fps) {
  if (frames.empty()) throw ParameterError("no frames to write");
  write_y4m(Y4mStream{y4m_header_for(frames.front(), fps), frames}, path);
}

}  // namespace hdrcheck
