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
#include <ostream>

#include "common.h"
#include "hdrcheck/conversion.h"
#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck::cli {

namespace fs = std::filesystem;

namespace {

struct ConvertArgs {
  std::string input;
  std::string raw;
  std::string output;
  int bit_depth = 10;
  std::string range;
  std::string matrix = "bt2020";
};

MatrixCoefficients matrix_from_name(const std::string& name) {
  if (name == "bt2020") return MatrixCoefficients::kBt2020Ncl;
  if (name == "bt709") return MatrixCoefficients::kBt709;
  throw ParameterError("unknown matrix: " + name);
}

Rational input_fps(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string magic(9, '\0');
  in.read(magic.data(), 9);
  if (magic != "YUV4MPEG2") return {25, 1};
  std::string line;
  std::getline(in, line);
  const std::string bytes = "YUV4MPEG2" + line + "\n";
  const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data());
  try {
    return parse_y4m({p, bytes.size()}).header.fps;
  } catch (const Error&) {
    return {25, 1};
  }
}

int write_converted(const Context& ctx, const ConvertArgs& a, const std::vector<Frame>& frames,
                    const std::string& suffix) {
  const fs::path in(a.input);
  const fs::path video =
      ctx.output_path(a.output.empty() ? in.stem().string() + "." + suffix + ".y4m" : a.output);
  write_y4m(frames, video, input_fps(in));
  SidecarManifest m;
  m.signalling = frames.front().signalling;
  m.files.push_back(digest_file(video, video.parent_path()));
  write_manifest(m, sidecar_path_for(video));
  *ctx.out << "video: " << video.string() << " (" << frames.size() << " frames, "
           << frames.front().bit_depth << "-bit " << to_string(frames.front().chroma) << ")\n";
  *ctx.out << "manifest: " << sidecar_path_for(video).string() << "\n";
  return kExitOk;
}

void add_common(CLI::App* sub, ConvertArgs& a) {
  sub->add_option("input", a.input, "Y4M or raw planar input")->required();
  sub->add_option("--raw", a.raw, "Raw planar descriptor JSON for the input");
  sub->add_option("-o,--output", a.output, "Output Y4M path");
  sub->add_option("--bit-depth", a.bit_depth, "Output bit depth")->capture_default_str();
  sub->add_option("--range", a.range, "Output range, narrow or full");
  sub->add_option("--matrix", a.matrix, "bt2020 or bt709")
      ->capture_default_str()
      ->check(CLI::IsMember({"bt2020", "bt709"}));
}

}  // namespace

void add_convert_command(CLI::App& app, Context& ctx) {
  CLI::App* cmd = app.add_subcommand("convert", "Chroma format conversion");
  cmd->require_subcommand(1);
  {
    auto* sub = cmd->add_subcommand("to420", "RGB 4:4:4 to Y'CbCr 4:2:0");
    auto a = std::make_shared<ConvertArgs>();
    add_common(sub, *a);
    sub->callback([&ctx, a] {
      ctx.action = [&ctx, a] {
        To420Params p;
        p.bit_depth = a->bit_depth;
        p.matrix = matrix_from_name(a->matrix);
        p.range = a->range.empty() ? SignalRange::kNarrow : parse_range(a->range);
        return write_converted(ctx, *a,
                               convert_rgb444_to_ycbcr420(load_frames(a->input, a->raw), p), "420");
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("to444", "Y'CbCr 4:2:0 to RGB 4:4:4");
    auto a = std::make_shared<ConvertArgs>();
    add_common(sub, *a);
    sub->callback([&ctx, a] {
      ctx.action = [&ctx, a] {
        To444Params p;
        p.bit_depth = a->bit_depth;
        p.matrix = matrix_from_name(a->matrix);
        p.range = a->range.empty() ? SignalRange::kFull : parse_range(a->range);
        return write_converted(ctx, *a,
                               convert_ycbcr420_to_rgb444(load_frames(a->input, a->raw), p), "444");
      };
    });
  }
}

}  // namespace hdrcheck::cli
