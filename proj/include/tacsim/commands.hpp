// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace tacsim {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

struct RenderCmdOptions {
  std::string scene_path;
  std::string out_dir;
  std::optional<std::pair<int, int>> frame_range;  // inclusive, 0-based
  std::uint64_t seed = 0;
  int threads = 0;
};

struct BenchCmdOptions {
  std::string config_path;
  int width = 160;
  int height = 120;
  int bodies = 1;
  int contacts = 1;
  int frames = 100;
  std::optional<std::string> report_path;
  std::uint64_t seed = 12345;
  int threads = 0;
};

struct DemoCmdOptions {
  std::string kind = "press";
  std::string object = "sphere:0.00265";
  double force_max = 5.0;
  std::string out_dir;
  std::optional<std::string> config_path;  // default: built-in DIGIT-style
  int frames = 30;
  std::uint64_t seed = 0;
  int smooth_iterations = 0;
  double smooth_lambda = 0.5;
  int threads = 0;
};

struct CompositeCmdOptions {
  std::string scene_path;
  std::string real_background_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
};

/// Renders every frame of the scene (or the static scene once) and writes
/// rgb_<cam>_<frame>.png / depth_<cam>_<frame>.pfm into out_dir.
int cmd_render(const RenderCmdOptions& options);

int cmd_bench(const BenchCmdOptions& options);

/// Generates an analytic press/shear/sweep trace against the gel plane,
/// writes the trace + scene + mesh for reuse, and renders the frames.
int cmd_demo(const DemoCmdOptions& options);

/// Renders the scene's contact frame and background frame, composites the
/// difference onto a real sensor image, writes composite_<cam>.png.
int cmd_composite(const CompositeCmdOptions& options);

/// Prints validation violations; exit 0 iff the config is valid.
int cmd_validate(const std::string& config_path);

}  // namespace tacsim
