// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "tacsim/errors.hpp"
#include "tacsim/primitives.hpp"

namespace tacsim {

namespace {

constexpr double kContactSphereRadius = 0.0025;

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ull * (k + 1));
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  return x;
}

}  // namespace

SensorConfig with_resolution(const SensorConfig& config, int width, int height) {
  SensorConfig out = config;
  if (out.cameras.empty()) throw InvalidArguments("config has no cameras");
  out.cameras[0].width = width;
  out.cameras[0].height = height;
  return out;
}

BenchScene::BenchScene(const SensorConfig& config, int bodies, int contacts,
                       std::uint64_t seed)
    : scene_(config, Pose::identity()), contacts_(contacts) {
  if (bodies < 1) throw InvalidArguments("bench needs at least one body");
  if (contacts < 0 || contacts > bodies) {
    throw InvalidArguments("bench contacts must be in [0, bodies]");
  }

  // 12,000-face reference mesh shared across all bodies.
  auto mesh = std::make_shared<TriangleMesh>(
      make_uv_sphere(kContactSphereRadius, 100, 61));

  const Pose& gel = config.gel.pose;  // sensor pose is identity here
  gel_normal_ = rotate(gel, Vec3(0, 0, 1));
  double gel_w = 0.03, gel_h = 0.02;
  if (!config.gel.is_mesh_path()) {
    const auto& slab = std::get<SlabSpec>(config.gel.mesh_source);
    gel_w = slab.width;
    gel_h = slab.height;
  }

  // Contacted bodies sit on a grid over the gel; spectators go far behind
  // the camera, outside every frustum.
  const int grid = std::max(1, static_cast<int>(std::ceil(std::sqrt(contacts))));
  for (int i = 0; i < bodies; ++i) {
    const std::string id = "body" + std::to_string(i);
    Pose pose;
    if (i < contacts) {
      const int gx = i % grid;
      const int gy = i / grid;
      const double u = grid == 1 ? 0.0 : (gx / double(grid - 1) - 0.5) * 0.55;
      const double v = grid == 1 ? 0.0 : (gy / double(grid - 1) - 0.5) * 0.55;
      const Vec3 on_gel = gel.translation + rotate(gel, Vec3(u * gel_w, v * gel_h, 0));
      pose.translation = on_gel + gel_normal_ * kContactSphereRadius;
      contact_ids_.push_back(id);
    } else {
      pose.translation = Vec3(0.05 * (i % 10) - 0.25, 0.05 * ((i / 10) % 10) - 0.25,
                              -0.5 - 0.01 * i);
    }
    scene_.add_body(id, mesh, pose);
    ids_.push_back(id);
    base_poses_.push_back(pose);
    streams_.emplace_back(mix_seed(seed, static_cast<std::uint64_t>(i)));
  }
}

void BenchScene::apply_frame(int) {
  std::vector<ContactReport> reports;
  reports.reserve(contact_ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    auto& rng = streams_[i];
    const double dx = (uniform01(rng) - 0.5) * 4e-4;
    const double dy = (uniform01(rng) - 0.5) * 4e-4;
    Pose pose = base_poses_[i];
    pose.translation += Vec3(dx, dy, 0.0);
    scene_.update_pose(ids_[i], pose);
    if (i < static_cast<std::size_t>(contacts_)) {
      const double force = 2.0 + 2.0 * uniform01(rng);
      reports.push_back({ids_[i], force, gel_normal_});
    }
  }
  scene_.set_contacts(reports);
}

TimingBreakdown run_bench(const SensorConfig& config, const BenchParams& params,
                          const RenderOptions& render_options) {
  if (params.frames < 10) throw InvalidArguments("bench needs >= 10 frames");
  if (params.warmup < 5) throw InvalidArguments("bench needs >= 5 warmup frames");
  if (params.contacts > params.bodies) {
    throw InvalidArguments("bench contacts must be <= bodies");
  }

  const SensorConfig cfg = with_resolution(config, params.width, params.height);
  BenchScene bench(cfg, params.bodies, params.contacts, params.seed);
  Renderer renderer(cfg, render_options);

  using Clock = std::chrono::steady_clock;
  auto ms_between = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };

  TimingBreakdown result;
  result.frames = params.frames;
  result.width = params.width;
  result.height = params.height;
  result.bodies = params.bodies;
  result.contacts = params.contacts;
  result.threads = renderer.thread_count();

  const int total = params.warmup + params.frames;
  for (int k = 0; k < total; ++k) {
    const auto t0 = Clock::now();
    bench.apply_frame(k);
    const auto t1 = Clock::now();
    DeformedScene deformed = apply_deformation(bench.scene(), cfg);
    const auto t2 = Clock::now();
    RenderOutput out = renderer.render(deformed, params.seed + k);
    const auto t3 = Clock::now();
    if (k >= params.warmup) {
      result.sync_ms += ms_between(t0, t1);
      result.deform_ms += ms_between(t1, t2);
      result.render_ms += ms_between(t2, t3);
    }
  }
  result.sync_ms /= params.frames;
  result.deform_ms /= params.frames;
  result.render_ms /= params.frames;
  return result;
}

void write_bench_csv(const std::string& path,
                     std::span<const TimingBreakdown> rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "resolution,bodies,contacts,sync_ms,deform_ms,render_ms,fps\n";
  out.precision(4);
  out << std::fixed;
  for (const auto& row : rows) {
    out << row.width << 'x' << row.height << ',' << row.bodies << ','
        << row.contacts << ',' << row.sync_ms << ',' << row.deform_ms << ','
        << row.render_ms << ',' << row.fps() << '\n';
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

}  // namespace tacsim
