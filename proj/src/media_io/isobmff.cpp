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
#include <array>
#include <cmath>
#include <set>
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck {

namespace {

// Boxes whose payload is a plain sequence of child boxes.
const std::set<std::string> kContainers = {"moov", "trak", "mdia", "minf", "dinf", "stbl",
                                           "edts", "udta", "mvex", "moof", "traf", "mfra",
                                           "iprp", "ipco", "sinf", "schi"};

// VisualSampleEntry types: 8-byte SampleEntry plus 70 bytes of fields
// precede the child boxes.
const std::set<std::string> kVisualSampleEntries = {"avc1", "avc3", "hvc1", "hev1", "av01",
                                                    "vp08", "vp09", "dvh1", "dvhe", "encv",
                                                    "mp4v", "apch", "apcn", "ap4h", "vvc1"};
constexpr std::uint64_t kVisualSampleEntryFields = 78;

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t size() const { return bytes_.size(); }
  void need(std::uint64_t offset, std::uint64_t n, std::uint64_t end, const char* what) const {
    if (offset > end || end - offset < n)
      throw StructuralError(std::string(what) + " extends past its enclosing box", offset);
  }
  std::uint8_t u8(std::uint64_t o) const { return bytes_[o]; }
  std::uint16_t u16(std::uint64_t o) const {
    return static_cast<std::uint16_t>((bytes_[o] << 8) | bytes_[o + 1]);
  }
  std::uint32_t u32(std::uint64_t o) const {
    return (static_cast<std::uint32_t>(bytes_[o]) << 24) | (static_cast<std::uint32_t>(bytes_[o + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes_[o + 2]) << 8) | bytes_[o + 3];
  }
  std::uint64_t u64(std::uint64_t o) const {
    return (static_cast<std::uint64_t>(u32(o)) << 32) | u32(o + 4);
  }
  std::string fourcc(std::uint64_t o) const {
    std::string s(4, '?');
    for (int i = 0; i < 4; ++i) {
      const std::uint8_t c = bytes_[o + i];
      s[i] = (c >= 0x20 && c < 0x7f) ? static_cast<char>(c) : '?';
    }
    return s;
  }

 private:
  std::span<const std::uint8_t> bytes_;
};

class Scanner {
 public:
  explicit Scanner(std::span<const std::uint8_t> bytes) : r_(bytes) {}

  IsobmffScan run() {
    if (r_.size() < 8) throw StructuralError("file too small for a box header", 0);
    walk(0, r_.size(), 0, "");
    return std::move(scan_);
  }

 private:
  static constexpr int kMaxDepth = 32;

  void walk(std::uint64_t begin, std::uint64_t end, int depth, const std::string& parent) {
    if (depth > kMaxDepth) throw StructuralError("box nesting too deep", begin);
    std::uint64_t pos = begin;
    while (pos < end) {
      r_.need(pos, 8, end, "box header");
      std::uint64_t size = r_.u32(pos);
      const std::string type = r_.fourcc(pos + 4);
      std::uint32_t header = 8;
      if (size == 1) {
        r_.need(pos, 16, end, "64-bit box header");
        size = r_.u64(pos + 8);
        header = 16;
      } else if (size == 0) {
        size = end - pos;
      }
      if (type == "uuid") {
        r_.need(pos, header + 16, end, "uuid box header");
        header += 16;
      }
      if (size < header)
        throw StructuralError("box '" + type + "' declares size " + std::to_string(size) +
                                  " smaller than its header",
                              pos);
      if (size > end - pos)
        throw StructuralError("box '" + type + "' size " + std::to_string(size) +
                                  " overruns its parent ending at " + std::to_string(end),
                              pos);
      const std::string path = parent.empty() ? type : parent + "/" + type;
      scan_.boxes.push_back({pos, size, header, type, depth, path});
      visit(type, pos + header, pos + size, depth, path);
      pos += size;
    }
  }

  void visit(const std::string& type, std::uint64_t body, std::uint64_t end, int depth,
             const std::string& path) {
    if (kContainers.count(type)) {
      walk(body, end, depth + 1, path);
    } else if (type == "meta") {
      // ISO meta is a FullBox; QuickTime meta is not. Detect by where hdlr sits.
      const bool quicktime = end - body >= 8 && r_.fourcc(body + 4) == "hdlr";
      const std::uint64_t start = quicktime ? body : body + 4;
      r_.need(body, quicktime ? 0 : 4, end, "meta version/flags");
      walk(start, end, depth + 1, path);
    } else if (type == "stsd") {
      r_.need(body, 8, end, "stsd header");
      walk(body + 8, end, depth + 1, path);
    } else if (kVisualSampleEntries.count(type)) {
      r_.need(body, kVisualSampleEntryFields, end, "visual sample entry");
      walk(body + kVisualSampleEntryFields, end, depth + 1, path);
    } else if (type == "colr") {
      parse_colr(body, end);
    } else if (type == "mdcv") {
      parse_mdcv(body, end);
    } else if (type == "clli") {
      parse_clli(body, end);
    } else if (type == "hvcC" && end - body >= 18) {
      record_bit_depth(8 + (r_.u8(body + 17) & 0x07));
    } else if (type == "av1C" && end - body >= 3) {
      const std::uint8_t b = r_.u8(body + 2);
      record_bit_depth((b & 0x40) ? ((b & 0x20) ? 12 : 10) : 8);
    } else if (type == "vpcC" && end - body >= 7) {
      record_bit_depth(r_.u8(body + 6) >> 4);
    }
  }

  void record_bit_depth(int bits) {
    if (!scan_.bit_depth) scan_.bit_depth = bits;
  }

  void parse_colr(std::uint64_t body, std::uint64_t end) {
    r_.need(body, 4, end, "colr colour_type");
    const std::string kind = r_.fourcc(body);
    if (kind == "nclx" || kind == "nclc") {
      const std::uint64_t n = kind == "nclx" ? 11 : 10;
      r_.need(body, n, end, "colr nclx payload");
      ColourDescription cd;
      cd.colour_primaries = r_.u16(body + 4);
      cd.transfer_characteristics = r_.u16(body + 6);
      cd.matrix_coefficients = r_.u16(body + 8);
      cd.full_range = kind == "nclx" && (r_.u8(body + 10) & 0x80) != 0;
      if (scan_.signalling.colour && !(*scan_.signalling.colour == cd)) {
        scan_.warnings.push_back("conflicting colr boxes; keeping the first");
        return;
      }
      scan_.signalling.colour = cd;
    } else if (kind == "prof" || kind == "rICC") {
      scan_.icc_profile = true;
    } else {
      scan_.warnings.push_back("colr box with unknown colour_type '" + kind + "'");
    }
  }

  void parse_mdcv(std::uint64_t body, std::uint64_t end) {
    r_.need(body, 24, end, "mdcv payload");
    std::array<Chromaticity, 3> stored;
    for (int i = 0; i < 3; ++i)
      stored[i] = {r_.u16(body + 4 * i) * 0.00002, r_.u16(body + 4 * i + 2) * 0.00002};
    MasteringDisplay md = label_mastering_primaries(stored);
    md.white = {r_.u16(body + 12) * 0.00002, r_.u16(body + 14) * 0.00002};
    md.max_luminance = r_.u32(body + 16) * 0.0001;
    md.min_luminance = r_.u32(body + 20) * 0.0001;
    if (!md.order_matched)
      scan_.warnings.push_back("mdcv primaries match no known set; labelled by geometry");
    if (scan_.signalling.mastering_display) {
      scan_.warnings.push_back("multiple mdcv boxes; keeping the first");
      return;
    }
    scan_.signalling.mastering_display = md;
  }

  void parse_clli(std::uint64_t body, std::uint64_t end) {
    r_.need(body, 4, end, "clli payload");
    ContentLight cl{r_.u16(body), r_.u16(body + 2)};
    if (scan_.signalling.content_light) {
      scan_.warnings.push_back("multiple clli boxes; keeping the first");
      return;
    }
    scan_.signalling.content_light = cl;
  }

  Reader r_;
  IsobmffScan scan_;
};

bool near(const Chromaticity& a, const Chromaticity& b, double tol) {
  return std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol;
}

}  // namespace

MasteringDisplay label_mastering_primaries(const std::array<Chromaticity, 3>& stored,
                                           double tolerance) {
  MasteringDisplay md;
  for (const PrimariesSet& known :
       {PrimariesSet::bt2020(), PrimariesSet::dci_p3_d65(), PrimariesSet::bt709()}) {
    const std::array<Chromaticity, 3> rgb{known.red, known.green, known.blue};
    std::array<int, 3> perm{0, 1, 2};
    do {
      // perm[k] = stored index holding label k (R, G, B).
      if (near(stored[perm[0]], rgb[0], tolerance) && near(stored[perm[1]], rgb[1], tolerance) &&
          near(stored[perm[2]], rgb[2], tolerance)) {
        for (int k = 0; k < 3; ++k) md.primaries[k] = stored[perm[k]];
        md.order_matched = true;
        return md;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::array<int, 3> idx{0, 1, 2};
  const int red = *std::max_element(idx.begin(), idx.end(),
                                    [&](int a, int b) { return stored[a].x < stored[b].x; });
  int green = -1;
  for (int i : idx)
    if (i != red && (green < 0 || stored[i].y > stored[green].y)) green = i;
  const int blue = 3 - red - green;
  md.primaries = {stored[red], stored[green], stored[blue]};
  md.order_matched = false;
  return md;
}

IsobmffScan scan_isobmff_bytes(std::span<const std::uint8_t> bytes) {
  return Scanner(bytes).run();
}

IsobmffScan scan_isobmff(const std::filesystem::path& path) {
  return scan_isobmff_bytes(read_file(path));
}

}  // namespace hdrcheck
