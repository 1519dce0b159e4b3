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

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"
#include "support/box_writer.h"
#include "support/temp_dir.h"

namespace hdrcheck {
namespace {

using namespace hdrcheck::testing;

std::vector<std::uint8_t> as_bytes(const std::string& s) { return {s.begin(), s.end()}; }

Frame ramp_frame(int w, int h, int bits, ChromaFormat chroma, ColorModel model, SignalRange range) {
  Frame f = Frame::make(w, h, bits, chroma, model, range);
  int i = 0;
  for (auto& p : f.planes)
    for (auto& s : p.samples) s = static_cast<std::uint16_t>((i++ * 37) % (f.max_code() + 1));
  return f;
}

////////////////////////////////////////////////////////////////////////////////
// Y4M

TEST(Y4m, RoundTripFormats) {
  const std::vector<Frame> cases{
      ramp_frame(16, 8, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow),
      ramp_frame(16, 8, 8, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kFull),
      ramp_frame(6, 4, 12, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull),
      ramp_frame(6, 4, 16, ChromaFormat::k444, ColorModel::kYcbcr, SignalRange::kNarrow),
  };
  for (const Frame& f : cases) {
    Y4mStream s{y4m_header_for(f, {30000, 1001}), {f, f}};
    const auto bytes = serialize_y4m(s);
    const Y4mStream back = parse_y4m(bytes);
    EXPECT_EQ(back.header, s.header);
    ASSERT_EQ(back.frames.size(), 2u);
    EXPECT_TRUE(back.frames[1].same_pixels(f));
    EXPECT_EQ(back.frames[0].range, f.range);
    EXPECT_EQ(back.frames[0].model, f.model);
    EXPECT_EQ(serialize_y4m(back), bytes);
  }
}

TEST(Y4m, HeaderText) {
  const Frame f = Frame::make(4, 2, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  const auto bytes = serialize_y4m({y4m_header_for(f), {f}});
  const std::string text(bytes.begin(), bytes.end());
  EXPECT_EQ(text.substr(0, text.find('\n')), "YUV4MPEG2 W4 H2 F25:1 Ip A1:1 C420p10 XCOLORRANGE=LIMITED");
  // 10-bit samples are little-endian words.
  const std::size_t frame = text.find("FRAME\n") + 6;
  EXPECT_EQ(bytes[frame], 64);
  EXPECT_EQ(bytes[frame + 1], 0);
}

TEST(Y4m, ParsesForeignHeaders) {
  std::string text = "YUV4MPEG2 W2 H2 F24000:1001 It A0:0 C420jpeg XYSCSS=420JPEG\nFRAME\n";
  text += std::string(6, '\x10');
  const Y4mStream s = parse_y4m(as_bytes(text));
  EXPECT_EQ(s.header.fps, (Rational{24000, 1001}));
  EXPECT_EQ(s.header.interlace, 't');
  EXPECT_EQ(s.frames.size(), 1u);
  EXPECT_EQ(s.frames[0].bit_depth, 8);
  EXPECT_EQ(s.frames[0].planes[1].at(0, 0), 0x10);
}

TEST(Y4m, Errors) {
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG W2 H2\n")), ParseError);
  try {
    parse_y4m(as_bytes("RIFF"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 0u);
  }
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 C420p10")), TruncationError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 C420\n")), ParseError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 C411\n")), ParseError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 Qx\n")), ParseError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 C420\nFRAME\n\x01\x02")), TruncationError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 C420\nFRAMX\n123456")), ParseError);
  EXPECT_THROW(parse_y4m(as_bytes("YUV4MPEG2 W2 H2 C420 XCOLORMODEL=RGB\n")), ParseError);
  // 10-bit sample above 1023.
  std::string text = "YUV4MPEG2 W2 H2 C420p10\nFRAME\n";
  text += std::string("\xff\x7f", 2) + std::string(10, '\0');
  EXPECT_THROW(parse_y4m(as_bytes(text)), ParseError);
}

TEST(Y4m, TruncationAtEveryOffsetIsReported) {
  const Frame f = ramp_frame(4, 2, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  const auto bytes = serialize_y4m({y4m_header_for(f), {f}});
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + static_cast<long>(n));
    try {
      const auto s = parse_y4m(cut);
      // A cut exactly after the header is a valid empty stream.
      EXPECT_TRUE(s.frames.empty()) << n;
    } catch (const ParseError&) {
    }
  }
}

TEST(Y4m, WriteReadFile) {
  TempDir dir;
  const Frame f = ramp_frame(8, 4, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  write_y4m({f, f, f}, dir / "a.y4m", {50, 1});
  const Y4mStream s = read_y4m(dir / "a.y4m");
  EXPECT_EQ(s.frames.size(), 3u);
  EXPECT_EQ(s.header.fps, (Rational{50, 1}));
  EXPECT_THROW(write_y4m(std::vector<Frame>{}, dir / "b.y4m"), ParameterError);
}

////////////////////////////////////////////////////////////////////////////////
// ISOBMFF

TEST(Isobmff, Hdr10Fixture) {
  const IsobmffScan s = scan_isobmff_bytes(hdr10_mp4());
  ASSERT_TRUE(s.signalling.colour.has_value());
  EXPECT_EQ(s.signalling.colour->colour_primaries, 9);
  EXPECT_EQ(s.signalling.colour->transfer_characteristics, 16);
  EXPECT_EQ(s.signalling.colour->matrix_coefficients, 9);
  EXPECT_FALSE(s.signalling.colour->full_range);
  ASSERT_TRUE(s.signalling.mastering_display.has_value());
  const MasteringDisplay& m = *s.signalling.mastering_display;
  EXPECT_EQ(m.max_luminance, 1000.0);
  EXPECT_DOUBLE_EQ(m.min_luminance, 0.005);
  EXPECT_TRUE(m.order_matched);
  EXPECT_DOUBLE_EQ(m.primaries[0].x, 0.708);
  EXPECT_DOUBLE_EQ(m.primaries[1].y, 0.797);
  EXPECT_DOUBLE_EQ(m.primaries[2].x, 0.131);
  EXPECT_DOUBLE_EQ(m.white.x, 0.3127);
  ASSERT_TRUE(s.signalling.content_light.has_value());
  EXPECT_EQ(s.signalling.content_light->max_cll, 1000u);
  EXPECT_EQ(s.signalling.content_light->max_fall, 400u);
  EXPECT_EQ(s.bit_depth, 10);
  EXPECT_TRUE(s.warnings.empty());
  bool found = false;
  for (const auto& b : s.boxes)
    if (b.path == "moov/trak/mdia/minf/stbl/stsd/hvc1/colr") found = true;
  EXPECT_TRUE(found);
}

TEST(Isobmff, MdcvLuminanceScaling) {
  MdcvFields f;
  f.max_luminance = 40000000;
  f.min_luminance = 1;
  const auto s = scan_isobmff_bytes(
      mp4_with_entry(visual_entry("hvc1", {colr_nclx(9, 16, 9, false), mdcv(f)})));
  EXPECT_EQ(s.signalling.mastering_display->max_luminance, 4000.0);
  EXPECT_DOUBLE_EQ(s.signalling.mastering_display->min_luminance, 0.0001);
}

TEST(Isobmff, AbsentBoxesStayAbsent) {
  const auto s = scan_isobmff_bytes(hdr10_mp4(1, 1, 1, false, false, 8));
  EXPECT_EQ(s.signalling.colour->colour_primaries, 1);
  EXPECT_FALSE(s.signalling.mastering_display.has_value());
  EXPECT_FALSE(s.signalling.content_light.has_value());
  EXPECT_EQ(s.bit_depth, 8);
  const auto empty = scan_isobmff_bytes(box("ftyp", Bytes(8, 0)));
  EXPECT_FALSE(empty.signalling.colour.has_value());
  EXPECT_FALSE(empty.bit_depth.has_value());
}

TEST(Isobmff, QuickTimeNclcAndFullRange) {
  const auto qt = scan_isobmff_bytes(mp4_with_entry(visual_entry("apch", {colr_nclc(9, 16, 9)})));
  EXPECT_EQ(qt.signalling.colour->transfer_characteristics, 16);
  EXPECT_FALSE(qt.signalling.colour->full_range);
  const auto full =
      scan_isobmff_bytes(mp4_with_entry(visual_entry("av01", {colr_nclx(9, 16, 9, true)})));
  EXPECT_TRUE(full.signalling.colour->full_range);
}

TEST(Isobmff, IccProfileAndUnknownColrType) {
  ByteWriter icc;
  icc.fourcc("prof").zeros(12);
  ByteWriter odd;
  odd.fourcc("abcd").zeros(4);
  const auto s = scan_isobmff_bytes(
      mp4_with_entry(visual_entry("hvc1", {box("colr", icc.data()), box("colr", odd.data())})));
  EXPECT_TRUE(s.icc_profile);
  EXPECT_FALSE(s.signalling.colour.has_value());
  EXPECT_FALSE(s.warnings.empty());
}

TEST(Isobmff, ConflictingColrKeepsFirstAndWarns) {
  const auto s = scan_isobmff_bytes(mp4_with_entry(
      visual_entry("hvc1", {colr_nclx(9, 16, 9, false), colr_nclx(1, 1, 1, false)})));
  EXPECT_EQ(s.signalling.colour->colour_primaries, 9);
  EXPECT_FALSE(s.warnings.empty());
}

TEST(Isobmff, PermutedMdcvPrimariesAreRelabelled) {
  MdcvFields f;
  std::swap(f.gx, f.rx);
  std::swap(f.gy, f.ry);
  const auto s =
      scan_isobmff_bytes(mp4_with_entry(visual_entry("hvc1", {colr_nclx(9, 16, 9, false), mdcv(f)})));
  const auto& m = *s.signalling.mastering_display;
  EXPECT_TRUE(m.order_matched);
  EXPECT_DOUBLE_EQ(m.primaries[0].x, 0.708);
  EXPECT_DOUBLE_EQ(m.primaries[1].x, 0.17);
}

TEST(Isobmff, UnknownMdcvPrimariesLabelledByGeometry) {
  const auto m = label_mastering_primaries({{{0.2, 0.7}, {0.6, 0.35}, {0.14, 0.08}}});
  EXPECT_FALSE(m.order_matched);
  EXPECT_DOUBLE_EQ(m.primaries[0].x, 0.6);
  EXPECT_DOUBLE_EQ(m.primaries[1].y, 0.7);
  EXPECT_DOUBLE_EQ(m.primaries[2].x, 0.14);
}

TEST(Isobmff, LargeSizeZeroSizeAndUnknownBoxes) {
  const Bytes moov = box("moov", {box("trak", {box("mdia", {box("minf", {box("stbl", {stsd(
      visual_entry("hvc1", {colr_nclx(9, 16, 9, false)}))})})})}), box("zzzz", Bytes(5, 1))});
  ByteWriter tail;
  tail.u32(0).fourcc("mdat").zeros(32);  // size 0: runs to end of file
  const Bytes file = concat({large_box("ftyp", Bytes(8, 0)), box("free", Bytes(3, 0)), moov,
                             tail.data()});
  const auto s = scan_isobmff_bytes(file);
  EXPECT_EQ(s.signalling.colour->colour_primaries, 9);
  ASSERT_FALSE(s.boxes.empty());
  EXPECT_EQ(s.boxes.front().header_size, 16u);
  EXPECT_EQ(s.boxes.back().type, "mdat");
  EXPECT_EQ(s.boxes.back().size, 40u);
}

TEST(Isobmff, HeifItemProperties) {
  ByteWriter hdlr;
  hdlr.u32(0).u32(0).fourcc("pict").zeros(13);
  ByteWriter meta;
  meta.u32(0)
      .bytes(box("hdlr", hdlr.data()))
      .bytes(box("iprp", {box("ipco", {colr_nclx(9, 16, 9, true), clli(800, 200)})}));
  const auto s = scan_isobmff_bytes(concat({box("ftyp", Bytes(8, 0)), box("meta", meta.data())}));
  EXPECT_EQ(s.signalling.colour->transfer_characteristics, 16);
  EXPECT_EQ(s.signalling.content_light->max_cll, 800u);
}

TEST(Isobmff, StructuralErrors) {
  ByteWriter overrun;
  overrun.u32(100).fourcc("moov").zeros(8);
  try {
    scan_isobmff_bytes(overrun.data());
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_EQ(e.offset(), 0u);
  }
  ByteWriter tiny;
  tiny.u32(4).fourcc("free");
  EXPECT_THROW(scan_isobmff_bytes(tiny.data()), StructuralError);
  // Child larger than its parent.
  ByteWriter child;
  child.u32(64).fourcc("trak").zeros(4);
  EXPECT_THROW(scan_isobmff_bytes(box("moov", child.data())), StructuralError);
  // Short colr payload.
  ByteWriter colr;
  colr.fourcc("nclx").u16(9);
  EXPECT_THROW(scan_isobmff_bytes(mp4_with_entry(visual_entry("hvc1", {box("colr", colr.data())}))),
               ParseError);
  EXPECT_THROW(scan_isobmff_bytes(Bytes{0, 0, 0}), ParseError);
}

TEST(Isobmff, TruncatedFixtureIsAlwaysAnError) {
  const Bytes full = hdr10_mp4();
  for (std::size_t n = 1; n < full.size(); n += 3) {
    Bytes cut(full.begin(), full.begin() + static_cast<long>(n));
    try {
      scan_isobmff_bytes(cut);
    } catch (const ParseError&) {
    }
  }
  // Cutting into the stsd entry is a structural error.
  Bytes cut(full.begin(), full.end() - 30);
  EXPECT_THROW(scan_isobmff_bytes(cut), ParseError);
}

TEST(Isobmff, RandomMutationsNeverEscapeTheErrorHierarchy) {
  const Bytes base = hdr10_mp4();
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 3000; ++trial) {
    Bytes b = base;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) b[rng() % b.size()] = static_cast<std::uint8_t>(rng());
    try {
      scan_isobmff_bytes(b);
    } catch (const Error&) {
    }
  }
  SUCCEED();
}

TEST(Isobmff, DeepNestingIsBounded) {
  Bytes b = box("free", Bytes{});
  for (int i = 0; i < 100; ++i) b = box("moov", b);
  EXPECT_THROW(scan_isobmff_bytes(b), StructuralError);
}

////////////////////////////////////////////////////////////////////////////////
// Raw planar

TEST(RawPlanar, RoundTripOrdersAndEndianness) {
  const Frame f = ramp_frame(8, 4, 12, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull);
  for (const std::string order : {"RGB", "GBR", "BRG"})
    for (auto e : {Endianness::kLittle, Endianness::kBig}) {
      RawDescriptor d;
      d.width = 8;
      d.height = 4;
      d.bit_depth = 12;
      d.plane_order = order;
      d.endianness = e;
      const auto bytes = serialize_raw_planar({f, f}, d);
      EXPECT_EQ(bytes.size(), 2 * d.frame_bytes());
      const auto back = parse_raw_planar(bytes, d);
      ASSERT_EQ(back.size(), 2u);
      EXPECT_TRUE(back[1].same_pixels(f));
    }
}

TEST(RawPlanar, PlaneOrderIsHonoured) {
  Frame f = Frame::make(2, 2, 16, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull);
  for (int p = 0; p < 3; ++p)
    std::fill(f.planes[p].samples.begin(), f.planes[p].samples.end(), 0x0100 * (p + 1));
  RawDescriptor d;
  d.width = d.height = 2;
  d.plane_order = "BGR";
  d.endianness = Endianness::kBig;
  const auto bytes = serialize_raw_planar({f}, d);
  EXPECT_EQ(bytes[0], 0x03);  // B first, big-endian
  EXPECT_EQ(bytes[8], 0x02);
  EXPECT_EQ(bytes[16], 0x01);
}

TEST(RawPlanar, YcbcrAndErrors) {
  const Frame f = ramp_frame(8, 4, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  RawDescriptor d;
  d.width = 8;
  d.height = 4;
  d.bit_depth = 10;
  d.model = ColorModel::kYcbcr;
  d.chroma = ChromaFormat::k420;
  d.range = SignalRange::kNarrow;
  d.plane_order = "YUV";
  EXPECT_EQ(d.frame_bytes(), (32u + 8u + 8u) * 2u);
  const auto bytes = serialize_raw_planar({f}, d);
  EXPECT_TRUE(parse_raw_planar(bytes, d)[0].same_pixels(f));
  EXPECT_THROW(parse_raw_planar(std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 1), d),
               ParameterError);
  EXPECT_THROW(parse_raw_planar(std::vector<std::uint8_t>{}, d), ParameterError);
  RawDescriptor bad = d;
  bad.model = ColorModel::kRgb;
  bad.plane_order = "RGB";
  EXPECT_THROW(bad.validate(), ParameterError);  // RGB must be 4:4:4
  bad = d;
  bad.plane_order = "YYV";
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = d;
  bad.width = 7;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = d;
  bad.bit_depth = 17;
  EXPECT_THROW(bad.validate(), ParameterError);
  std::vector<std::uint8_t> over = bytes;
  over[0] = 0xff;
  over[1] = 0xff;
  EXPECT_THROW(parse_raw_planar(over, d), ParseError);
}

TEST(RawPlanar, DescriptorJson) {
  RawDescriptor d;
  d.width = 1920;
  d.height = 1080;
  d.plane_order = "GBR";
  d.endianness = Endianness::kBig;
  const RawDescriptor back = raw_descriptor_from_json(to_json(d));
  EXPECT_EQ(to_json(back), to_json(d));
  nlohmann::json j = to_json(d);
  j.erase("width");
  try {
    raw_descriptor_from_json(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "width");
  }
}

////////////////////////////////////////////////////////////////////////////////
// Sidecar manifest

SidecarManifest sample_manifest() {
  const auto pat = gen_night_sky({1, std::nullopt, 42}, {64, 36, {25, 1}, 1});
  SidecarManifest m;
  m.pattern = pat.manifest;
  m.signalling = HdrSignalling::hdr10();
  m.signalling.mastering_display = MasteringDisplay{
      {{{0.708, 0.292}, {0.17, 0.797}, {0.131, 0.046}}}, {0.3127, 0.329}, 1000, 0.005, true};
  m.signalling.content_light = ContentLight{1000, 400};
  return m;
}

TEST(Manifest, JsonRoundTrip) {
  const SidecarManifest m = sample_manifest();
  const auto j = to_json(m);
  EXPECT_EQ(j.at("schema"), "hdrcheck.sidecar");
  EXPECT_EQ(j.at("schema_version"), 1);
  const SidecarManifest back = sidecar_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(back.pattern->count_of(940), m.pattern->count_of(940));
}

TEST(Manifest, ValidationNamesTheField) {
  auto j = to_json(sample_manifest());
  j["signalling"]["colour"].erase("transfer_characteristics");
  try {
    sidecar_from_json(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "signalling.colour.transfer_characteristics");
  }
  j = to_json(sample_manifest());
  j["schema_version"] = 2;
  EXPECT_THROW(sidecar_from_json(j), ValidationError);
  j = to_json(sample_manifest());
  j["schema"] = "other";
  EXPECT_THROW(sidecar_from_json(j), ValidationError);
  j = to_json(sample_manifest());
  j["files"] = nlohmann::json::array({{{"path", "a"}, {"sha256", "XYZ"}, {"bytes", 1}}});
  EXPECT_THROW(sidecar_from_json(j), ValidationError);
}

TEST(Manifest, DigestsDetectTampering) {
  TempDir dir;
  const Frame f = Frame::make(8, 4, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  write_y4m({f}, dir / "a.y4m");
  SidecarManifest m = sample_manifest();
  m.files.push_back(digest_file(dir / "a.y4m", dir.path()));
  EXPECT_EQ(m.files[0].path, "a.y4m");
  EXPECT_EQ(m.files[0].sha256, sha256_file(dir / "a.y4m"));
  const auto side = sidecar_path_for(dir / "a.y4m");
  EXPECT_EQ(side.filename(), "a.y4m.manifest.json");
  write_manifest(m, side);
  const SidecarManifest back = read_manifest(side);
  EXPECT_NO_THROW(verify_digests(back, dir.path()));

  auto bytes = read_file(dir / "a.y4m");
  bytes.back() ^= 1;
  write_file_atomic(dir / "a.y4m", bytes);
  EXPECT_THROW(verify_digests(back, dir.path()), VerificationError);
  bytes.push_back(0);
  write_file_atomic(dir / "a.y4m", bytes);
  EXPECT_THROW(verify_digests(back, dir.path()), VerificationError);
  std::filesystem::remove(dir / "a.y4m");
  EXPECT_THROW(verify_digests(back, dir.path()), VerificationError);
}

TEST(Manifest, InvalidJsonReportsOffset) {
  TempDir dir;
  write_file_atomic(dir / "m.json", std::string("{\"schema\": }"));
  EXPECT_THROW(read_manifest(dir / "m.json"), ParseError);
}

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::vector<std::uint8_t>{}),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex(as_bytes("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Files, AtomicWriteLeavesNoTemporaries) {
  TempDir dir;
  write_file_atomic(dir / "x.txt", std::string("one"));
  write_file_atomic(dir / "x.txt", std::string("two"));
  const auto b = read_file(dir / "x.txt");
  EXPECT_EQ(std::string(b.begin(), b.end()), "two");
  int n = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++n;
  EXPECT_EQ(n, 1);
  EXPECT_THROW(read_file(dir / "missing"), Error);
}

}  // namespace
}  // namespace hdrcheck
