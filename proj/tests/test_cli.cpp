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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "report.h"
#include "hdrcheck/media_io.h"
#include "hdrcheck/patterns.h"
#include "hdrcheck/photometry.h"
#include "hdrcheck/prng.h"
#include "support/box_writer.h"
#include "support/temp_dir.h"

namespace hdrcheck {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--out-dir", dir_.path().string()});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
  std::string at(const std::string& name) const { return (dir_ / name).string(); }
  nlohmann::json json_at(const std::string& name) const {
    std::ifstream in(dir_ / name);
    return nlohmann::json::parse(in);
  }
  void write(const std::string& name, const testing::Bytes& bytes) const {
    write_file_atomic(dir_ / name, std::span<const std::uint8_t>(bytes));
  }

  testing::TempDir dir_;
};

std::string slurp(const std::string& path) {
  const auto b = read_file(path);
  return {b.begin(), b.end()};
}

////////////////////////////////////////////////////////////////////////////////
// Usage

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"pattern", "night-sky", "--percent", "0"}).code, 1);
  EXPECT_EQ(run({"pattern", "window", "--area", "150"}).code, 1);
  EXPECT_EQ(run({"inspect", at("missing.mp4")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

////////////////////////////////////////////////////////////////////////////////
// pattern

TEST_F(CliTest, NightSkyReportsExactCount) {
  const Result r = run({"--seed", "42", "pattern", "night-sky", "--percent", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("82944 pixels"), std::string::npos) << r.out;
  const Y4mStream s = read_y4m(at("night-sky-1pct.y4m"));
  EXPECT_EQ(s.header.width, 3840);
  EXPECT_EQ(luma_histogram(s.frames.at(0)).at(940), 82944u);
  const SidecarManifest m = read_manifest(at("night-sky-1pct.y4m.manifest.json"));
  EXPECT_EQ(m.pattern->count_of(940), 82944u);
  EXPECT_EQ(m.pattern->seed, derive_seed(42, "pattern/night-sky"));
  EXPECT_NO_THROW(verify_digests(m, dir_.path()));
}

TEST_F(CliTest, PatternIsReproducible) {
  ASSERT_EQ(run({"--seed", "5", "pattern", "night-sky", "--percent", "1", "--size", "320x180", "--name", "a"}).code, 0);
  ASSERT_EQ(run({"--seed", "5", "pattern", "night-sky", "--percent", "1", "--size", "320x180", "--name", "b"}).code, 0);
  ASSERT_EQ(run({"--seed", "6", "pattern", "night-sky", "--percent", "1", "--size", "320x180", "--name", "c"}).code, 0);
  EXPECT_EQ(slurp(at("a.y4m")), slurp(at("b.y4m")));
  EXPECT_NE(slurp(at("a.y4m")), slurp(at("c.y4m")));
}

TEST_F(CliTest, PlaylistWritesJson) {
  ASSERT_EQ(run({"pattern", "playlist", "--kind", "window", "-o", "w.json"}).code, 0);
  const Playlist p = playlist_from_json(json_at("w.json"));
  EXPECT_EQ(p.entries.size(), kWindowSweepPercentages.size());
}

////////////////////////////////////////////////////////////////////////////////
// inspect

TEST_F(CliTest, InspectExitCodes) {
  write("good.mp4", testing::hdr10_mp4());
  write("sdr.mp4", testing::hdr10_mp4(1, 1, 1));
  testing::Bytes cut = testing::hdr10_mp4();
  cut.resize(cut.size() / 2);
  write("cut.mp4", cut);

  EXPECT_EQ(run({"inspect", at("good.mp4")}).code, 0);
  const Result sdr = run({"inspect", at("sdr.mp4")});
  EXPECT_EQ(sdr.code, 2);
  EXPECT_NE(sdr.out.find("3 signalling violation(s)"), std::string::npos) << sdr.out;
  const auto report = json_at("sdr.inspect.report.json");
  EXPECT_EQ(report["status"], "fail");
  EXPECT_EQ(run({"inspect", at("cut.mp4")}).code, 1);
}

TEST_F(CliTest, InspectDetectsTamperedVideo) {
  ASSERT_EQ(run({"pattern", "window", "--area", "10", "--size", "64x36", "--name", "w"}).code, 0);
  EXPECT_EQ(run({"inspect", at("w.y4m")}).code, 0);
  auto bytes = read_file(at("w.y4m"));
  bytes.back() ^= 1;
  write("w.y4m", bytes);
  EXPECT_EQ(run({"inspect", at("w.y4m")}).code, 1);
}

////////////////////////////////////////////////////////////////////////////////
// verify

Frame masked_ramp(int factor) {
  Frame f = gen_grey_ramp({1024, 100, RampOrientation::kHorizontal}, {2048, 64, {25, 1}, 1}).frame;
  for (auto& s : f.planes[0].samples) s = static_cast<std::uint16_t>(s / factor * factor);
  return f;
}

TEST_F(CliTest, VerifyBitDepth) {
  write_y4m({masked_ramp(1)}, at("clean.y4m"));
  write_y4m({masked_ramp(4)}, at("masked.y4m"));
  write_y4m({add_noise(masked_ramp(4), 2.0, 1)}, at("noisy.y4m"));

  const Result clean = run({"verify", "bitdepth", at("clean.y4m")});
  EXPECT_EQ(clean.code, 0);
  EXPECT_NE(clean.out.find("clean chain: 10 effective bits"), std::string::npos) << clean.out;
  const Result masked = run({"verify", "bitdepth", at("masked.y4m")});
  EXPECT_EQ(masked.code, 2);
  EXPECT_NE(masked.out.find("8-bit decimation"), std::string::npos) << masked.out;
  EXPECT_EQ(json_at("masked.verify.bitdepth.report.json")["result"]["effective_bits"], 8.0);
  const Result noisy = run({"verify", "bitdepth", at("noisy.y4m")});
  EXPECT_EQ(noisy.code, 0);
  EXPECT_NE(noisy.out.find("noise-masked"), std::string::npos) << noisy.out;
}

TEST_F(CliTest, VerifyBandingAndStats) {
  write_y4m({masked_ramp(16)}, at("r.y4m"));
  const Result b = run({"verify", "banding", at("r.y4m")});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(json_at("r.verify.banding.report.json")["result"]["band_count"], 64);
  EXPECT_EQ(run({"verify", "stats", at("r.y4m")}).code, 0);
}

TEST_F(CliTest, ConvertRoundTripAndFidelity) {
  Frame rgb = Frame::make(64, 32, 12, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull);
  for (int y = 0; y < 32; ++y)
    for (int x = 0; x < 64; ++x) {
      rgb.planes[0].at(x, y) = static_cast<std::uint16_t>(1000 + 30 * x);
      rgb.planes[1].at(x, y) = static_cast<std::uint16_t>(1500 + 20 * y);
      rgb.planes[2].at(x, y) = static_cast<std::uint16_t>(2000 + 10 * (x + y));
    }
  write_y4m({rgb}, at("src.y4m"));
  ASSERT_EQ(run({"convert", "to420", at("src.y4m"), "--bit-depth", "12"}).code, 0);
  ASSERT_EQ(run({"convert", "to444", at("src.420.y4m"), "--bit-depth", "12"}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(at("src.420.y4m.manifest.json")));
  const Result f = run({"verify", "fidelity", at("src.y4m"), at("src.420.444.y4m"), "--min-psnr", "40"});
  EXPECT_EQ(f.code, 0) << f.out;
  EXPECT_EQ(run({"verify", "fidelity", at("src.y4m"), at("src.420.444.y4m"), "--min-psnr", "200"}).code, 2);
}

TEST_F(CliTest, VerifyGamut) {
  Frame rgb = Frame::make(8, 8, 10, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull);
  for (auto& p : rgb.planes) std::fill(p.samples.begin(), p.samples.end(), 500);
  rgb.planes[1].samples[0] = 900;  // saturated green outside BT.709
  write_y4m({rgb}, at("g.y4m"));
  const Result r = run({"verify", "gamut", at("g.y4m"), "--assume-hdr10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_at("g.verify.gamut.bt709.report.json")["status"], "warn");
  EXPECT_EQ(cli::check_area("verify.gamut.bt709"), "Colour gamut");
  EXPECT_EQ(cli::check_area("custom.check"), "Other");
}

////////////////////////////////////////////////////////////////////////////////
// sim, analyze, report

TEST_F(CliTest, SimIsByteIdentical) {
  const std::vector<std::string> args{"--seed", "3", "sim", "--profile", "oled", "--sweep", "window",
                                      "--values", "1", "5", "10", "20", "--entry-duration", "2",
                                      "--lead-in", "1", "--size", "320x180", "--noise", "0.01"};
  auto a = args, b = args;
  a.insert(a.end(), {"-o", "a.csv"});
  b.insert(b.end(), {"-o", "b.csv"});
  ASSERT_EQ(run(a).code, 0);
  ASSERT_EQ(run(b).code, 0);
  EXPECT_EQ(slurp(at("a.csv")), slurp(at("b.csv")));
  EXPECT_FALSE(slurp(at("a.csv")).empty());
}

TEST_F(CliTest, SimThenAnalyzeAndReport) {
  ASSERT_EQ(run({"sim", "--profile", "lcd", "--sweep", "night-sky", "--entry-duration", "2", "--lead-in",
                 "1", "--size", "640x360", "-o", "ns.csv"})
                .code,
            0);
  ASSERT_EQ(run({"sim", "--profile", "reference", "--sweep", "window", "--entry-duration", "2", "--lead-in",
                 "1", "--size", "640x360", "-o", "win.csv"})
                .code,
            0);
  const Result dim = run({"analyze", "dimming", at("ns.csv"), "--svg"});
  EXPECT_EQ(dim.code, 2) << dim.out;
  EXPECT_NE(dim.out.find("poor local dimming"), std::string::npos) << dim.out;
  EXPECT_TRUE(std::filesystem::exists(at("ns.dimming.svg")));
  const Result sweep = run({"analyze", "sweep", at("win.csv"), "--level", "1000", "--csv"});
  EXPECT_EQ(sweep.code, 0) << sweep.out;
  EXPECT_EQ(json_at("win.analyze.sweep.report.json")["status"], "pass");

  std::filesystem::create_directories(dir_ / "pass");
  std::filesystem::copy(dir_ / "win.analyze.sweep.report.json", dir_ / "pass");
  const Result all_pass = run({"report", at("pass"), "--name", "ok"});
  EXPECT_EQ(all_pass.code, 0) << all_pass.out;
  const Result mixed = run({"report", at("pass"), at("ns.analyze.dimming.report.json")});
  EXPECT_EQ(mixed.code, 2);
  EXPECT_NE(mixed.out.find("failing: analyze.dimming"), std::string::npos) << mixed.out;
  const auto bundle = json_at("conformance.json");
  EXPECT_EQ(bundle["schema"], "hdrcheck.conformance");
  EXPECT_EQ(bundle["overall"], "fail");
  EXPECT_TRUE(std::filesystem::exists(at("conformance.md")));

  std::filesystem::create_directories(dir_ / "empty");
  EXPECT_EQ(run({"report", at("empty")}).code, 1);
}

TEST_F(CliTest, AnalyzeRejectsMalformedLog) {
  std::ofstream(dir_ / "bad.csv") << kLogHeader << "\n0,1,white,,,\n1,oops,white,,,\n";
  const Result r = run({"analyze", "sustained", at("bad.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace hdrcheck
