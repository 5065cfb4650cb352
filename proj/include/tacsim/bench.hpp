// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tacsim/renderer.hpp"
#include "tacsim/scene.hpp"

namespace tacsim {

/// Mean per-frame cost of each pipeline phase.
struct TimingBreakdown {
  double sync_ms = 0.0;    // pose + contact application
  double deform_ms = 0.0;  // apply_deformation
  double render_ms = 0.0;  // rasterize + shade + post-processing
  int frames = 0;
  int width = 0;
  int height = 0;
  int bodies = 0;
  int contacts = 0;
  int threads = 1;

  double total_ms() const { return sync_ms + deform_ms + render_ms; }
  double fps() const { return total_ms() > 0.0 ? 1000.0 / total_ms() : 0.0; }
};

/// Benchmark world: `contacts` copies of the reference 12,000-face sphere
/// pressed into the gel, the remaining bodies parked outside every camera
/// frustum. Per-frame pose jitter and forces come from per-body streams,
/// so body k's sequence does not depend on how many other bodies exist.
class BenchScene {
 public:
  BenchScene(const SensorConfig& config, int bodies, int contacts,
             std::uint64_t seed);

  Scene& scene() { return scene_; }
  const std::vector<std::string>& contact_ids() const { return contact_ids_; }

  /// Applies frame k's pose perturbations and contact reports.
  void apply_frame(int frame);

 private:
  Scene scene_;
  std::vector<std::string> ids_;
  std::vector<std::string> contact_ids_;
  std::vector<Pose> base_poses_;
  std::vector<std::mt19937_64> streams_;
  int contacts_ = 0;
  Vec3 gel_normal_{0, 0, 1};
};

struct BenchParams {
  int width = 160;
  int height = 120;
  int bodies = 1;
  int contacts = 1;
  int frames = 100;  // measured frames, >= 10
  int warmup = 5;    // discarded frames, >= 5
  std::uint64_t seed = 12345;
};

/// Replays `warmup + frames` frames and reports the mean phase times over
/// the measured portion (monotonic clock). The config's first camera is
/// resized to the requested resolution. Throws InvalidArguments on bad
/// parameters (e.g. contacts > bodies or frames < 10).
TimingBreakdown run_bench(const SensorConfig& config, const BenchParams& params,
                          const RenderOptions& render_options = {});

/// CSV rows under the header
/// resolution,bodies,contacts,sync_ms,deform_ms,render_ms,fps
void write_bench_csv(const std::string& path, std::span<const TimingBreakdown> rows);

/// Copy of `config` with camera 0 resized; used by the bench and tests.
SensorConfig with_resolution(const SensorConfig& config, int width, int height);

}  // namespace tacsim
