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

#ifndef HDRCHECK_TESTS_SUPPORT_BOX_WRITER_H
#define HDRCHECK_TESTS_SUPPORT_BOX_WRITER_H

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hdrcheck::testing {

using Bytes = std::vector<std::uint8_t>;

// Big-endian byte assembly for hand-built ISOBMFF fixtures.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint32_t v) {
    out_.push_back(static_cast<std::uint8_t>(v));
    return *this;
  }
  ByteWriter& u16(std::uint32_t v) { return u8(v >> 8).u8(v); }
  ByteWriter& u32(std::uint32_t v) { return u16(v >> 16).u16(v); }
  ByteWriter& u64(std::uint64_t v) {
    return u32(static_cast<std::uint32_t>(v >> 32)).u32(static_cast<std::uint32_t>(v));
  }
  ByteWriter& fourcc(const std::string& t) {
    for (char c : t) u8(static_cast<std::uint8_t>(c));
    return *this;
  }
  ByteWriter& zeros(std::size_t n) {
    out_.insert(out_.end(), n, 0);
    return *this;
  }
  ByteWriter& bytes(const Bytes& b) {
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
  }
  const Bytes& data() const { return out_; }

 private:
  Bytes out_;
};

inline Bytes box(const std::string& type, const Bytes& body) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(8 + body.size())).fourcc(type).bytes(body);
  return w.data();
}

inline Bytes box(const std::string& type, std::initializer_list<Bytes> children) {
  Bytes body;
  for (const auto& c : children) body.insert(body.end(), c.begin(), c.end());
  return box(type, body);
}

// size == 1 with a 64-bit largesize.
inline Bytes large_box(const std::string& type, const Bytes& body) {
  ByteWriter w;
  w.u32(1).fourcc(type).u64(16 + body.size()).bytes(body);
  return w.data();
}

inline Bytes concat(std::initializer_list<Bytes> parts) {
  Bytes out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Bytes colr_nclx(int primaries, int transfer, int matrix, bool full_range) {
  ByteWriter w;
  w.fourcc("nclx").u16(primaries).u16(transfer).u16(matrix).u8(full_range ? 0x80 : 0);
  return box("colr", w.data());
}

inline Bytes colr_nclc(int primaries, int transfer, int matrix) {
  ByteWriter w;
  w.fourcc("nclc").u16(primaries).u16(transfer).u16(matrix);
  return box("colr", w.data());
}

// Chromaticities in units of 0.00002, luminances in 0.0001 cd/m^2, stored
// in the G, B, R order used by HEVC SEI.
struct MdcvFields {
  std::uint16_t gx = 8500, gy = 39850;   // BT.2020 green
  std::uint16_t bx = 6550, by = 2300;    // blue
  std::uint16_t rx = 35400, ry = 14600;  // red
  std::uint16_t wx = 15635, wy = 16450;  // D65
  std::uint32_t max_luminance = 10000000;  // 1000 cd/m^2
  std::uint32_t min_luminance = 50;        // 0.005 cd/m^2
};

inline Bytes mdcv(const MdcvFields& f = {}) {
  ByteWriter w;
  w.u16(f.gx).u16(f.gy).u16(f.bx).u16(f.by).u16(f.rx).u16(f.ry).u16(f.wx).u16(f.wy);
  w.u32(f.max_luminance).u32(f.min_luminance);
  return box("mdcv", w.data());
}

inline Bytes clli(std::uint16_t max_cll, std::uint16_t max_fall) {
  ByteWriter w;
  w.u16(max_cll).u16(max_fall);
  return box("clli", w.data());
}

// 23-byte HEVC decoder configuration with the given luma bit depth.
inline Bytes hvcc(int bit_depth) {
  ByteWriter w;
  w.u8(1).zeros(16).u8(0xF8 | ((bit_depth - 8) & 7)).u8(0xF8 | ((bit_depth - 8) & 7)).zeros(4);
  return box("hvcC", w.data());
}

// Visual sample entry with the fixed 78-byte preamble, then children.
inline Bytes visual_entry(const std::string& type, const std::vector<Bytes>& children) {
  ByteWriter w;
  w.zeros(6).u16(1).zeros(16).u16(3840).u16(2160).u32(0x00480000).u32(0x00480000).u32(0);
  w.u16(1).zeros(32).u16(0x18).u16(0xFFFF);
  for (const auto& c : children) w.bytes(c);
  return box(type, w.data());
}

inline Bytes stsd(const Bytes& entry) {
  ByteWriter w;
  w.u32(0).u32(1).bytes(entry);
  return box("stsd", w.data());
}

// ftyp + moov/trak/mdia/minf/stbl/stsd/<entry>.
inline Bytes mp4_with_entry(const Bytes& entry) {
  ByteWriter ftyp;
  ftyp.fourcc("isom").u32(0x200).fourcc("isom").fourcc("iso2");
  return concat({box("ftyp", ftyp.data()),
                 box("moov", {box("trak", {box("mdia", {box("minf", {box("stbl", {stsd(entry)})})})})}),
                 box("mdat", Bytes(16, 0xAB))});
}

inline Bytes hdr10_mp4(int primaries = 9, int transfer = 16, int matrix = 9, bool with_mdcv = true,
                       bool with_clli = true, int bit_depth = 10) {
  std::vector<Bytes> children{hvcc(bit_depth), colr_nclx(primaries, transfer, matrix, false)};
  if (with_mdcv) children.push_back(mdcv());
  if (with_clli) children.push_back(clli(1000, 400));
  return mp4_with_entry(visual_entry("hvc1", children));
}

}  // namespace hdrcheck::testing

#endif  // HDRCHECK_TESTS_SUPPORT_BOX_WRITER_H
