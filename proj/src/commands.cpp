// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <vector>

#include "tacsim/bench.hpp"
#include "tacsim/defaults.hpp"
#include "tacsim/errors.hpp"
#include "tacsim/image_io.hpp"
#include "tacsim/mesh_io.hpp"
#include "tacsim/renderer.hpp"
#include "tacsim/scenario.hpp"
#include "tacsim/scene_file.hpp"
#include "tacsim/trace.hpp"

namespace tacsim {

namespace fs = std::filesystem;

namespace {

int classify_error(const std::exception& e) {
  if (dynamic_cast<const MissingFile*>(&e) || dynamic_cast<const IoError*>(&e)) {
    return kExitIo;
  }
  return kExitValidation;
}

std::string frame_tag(int frame) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", frame);
  return buf;
}

void write_frame(const RenderOutput& out, const std::string& out_dir, int frame) {
  for (const auto& image : out.images) {
    const std::string stem = image.camera_name + "_" + frame_tag(frame);
    write_png(image.rgb, out_dir + "/rgb_" + stem + ".png");
    write_pfm(image.depth, out_dir + "/depth_" + stem + ".pfm");
  }
}

/// Loads meshes (each file once), builds the scene, replays the frames,
/// and writes image pairs. Returns the number of frames written.
int replay_and_write(const SensorConfig& config, const SceneFile& scene_file,
                     const std::vector<TraceFrame>& frames,
                     const std::string& out_dir, std::uint64_t seed, int threads,
                     std::optional<std::pair<int, int>> frame_range) {
  Scene scene(config, scene_file.sensor_pose);
  std::map<std::string, std::shared_ptr<const TriangleMesh>> mesh_cache;
  for (const auto& entry : scene_file.bodies) {
    auto it = mesh_cache.find(entry.mesh_path);
    if (it == mesh_cache.end()) {
      it = mesh_cache
               .emplace(entry.mesh_path,
                        std::make_shared<TriangleMesh>(load_mesh(entry.mesh_path)))
               .first;
    }
    scene.add_body(entry.id, it->second, entry.pose, entry.scale);
  }

  RenderOptions render_options;
  render_options.threads = threads;
  Renderer renderer(config, render_options);

  fs::create_directories(out_dir);
  int written = 0;
  auto in_range = [&](int k) {
    return !frame_range || (k >= frame_range->first && k <= frame_range->second);
  };

  if (frames.empty()) {
    if (in_range(0)) {
      DeformedScene deformed = apply_deformation(scene, config);
      write_frame(renderer.render(deformed, seed), out_dir, 0);
      ++written;
    }
  } else {
    for (std::size_t k = 0; k < frames.size(); ++k) {
      apply_trace_frame(scene, frames[k]);
      if (!in_range(static_cast<int>(k))) continue;
      DeformedScene deformed = apply_deformation(scene, config);
      write_frame(renderer.render(deformed, seed + k), out_dir,
                  static_cast<int>(k));
      ++written;
    }
  }
  return written;
}

}  // namespace

int cmd_render(const RenderCmdOptions& options) {
  try {
    const SceneFile scene_file = load_scene_file(options.scene_path);
    const SensorConfig config = load_config(scene_file.sensor_config_path);
    std::vector<TraceFrame> frames;
    if (scene_file.trace_path) frames = read_all_frames(*scene_file.trace_path);
    const int written =
        replay_and_write(config, scene_file, frames, options.out_dir, options.seed,
                         options.threads, options.frame_range);
    std::printf("rendered %d frame(s) to %s\n", written, options.out_dir.c_str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "render: %s\n", e.what());
    return classify_error(e);
  }
}

int cmd_bench(const BenchCmdOptions& options) {
  try {
    const SensorConfig config = load_config(options.config_path);
    BenchParams params;
    params.width = options.width;
    params.height = options.height;
    params.bodies = options.bodies;
    params.contacts = options.contacts;
    params.frames = options.frames;
    params.seed = options.seed;
    RenderOptions render_options;
    render_options.threads = options.threads;

    const TimingBreakdown t = run_bench(config, params, render_options);
    std::printf("resolution %dx%d, %d bodies (%d in contact), %d frames, "
                "%d thread(s)\n",
                t.width, t.height, t.bodies, t.contacts, t.frames, t.threads);
    std::printf("sync %.3f ms | deform %.3f ms | render %.3f ms | %.1f FPS\n",
                t.sync_ms, t.deform_ms, t.render_ms, t.fps());
    if (options.report_path) {
      write_bench_csv(*options.report_path, std::span(&t, 1));
      std::printf("report written to %s\n", options.report_path->c_str());
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bench: %s\n", e.what());
    return classify_error(e);
  }
}

int cmd_demo(const DemoCmdOptions& options) {
  try {
    const SensorConfig config = options.config_path
                                    ? load_config(*options.config_path)
                                    : default_digit_config();
    const PrimitiveSpec primitive = PrimitiveSpec::parse(options.object);
    const ScenarioKind kind = parse_scenario_kind(options.kind);

    TriangleMesh mesh = primitive.make_mesh();
    if (options.smooth_iterations > 0) {
      mesh = smooth_mesh(mesh, options.smooth_iterations, options.smooth_lambda);
    }

    fs::create_directories(options.out_dir);
    const std::string mesh_path = options.out_dir + "/object.obj";
    const std::string trace_path = options.out_dir + "/trace.jsonl";
    const std::string config_path = options.out_dir + "/sensor.yaml";
    const std::string scene_path = options.out_dir + "/scene.yaml";
    save_obj(mesh, mesh_path);
    save_config(config, config_path);

    const ScenarioSpec scenario =
        make_scenario(kind, primitive, options.force_max, config);
    const std::vector<TraceFrame> frames =
        generate_scenario_trace(scenario, "object", options.frames);
    write_trace(frames, trace_path);

    SceneFile scene_file;
    scene_file.sensor_config_path = config_path;
    scene_file.sensor_pose = Pose::identity();
    scene_file.trace_path = trace_path;
    scene_file.bodies.push_back(
        {"object", mesh_path, 1.0,
         frames.empty() ? Pose::identity() : frames.front().poses.front().pose});
    save_scene_file(scene_file, scene_path);

    const int written =
        replay_and_write(config, scene_file, frames, options.out_dir, options.seed,
                         options.threads, std::nullopt);
    std::printf("demo wrote %d frame(s), trace %s\n", written, trace_path.c_str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "demo: %s\n", e.what());
    return classify_error(e);
  }
}

int cmd_composite(const CompositeCmdOptions& options) {
  try {
    const SceneFile scene_file = load_scene_file(options.scene_path);
    const SensorConfig config = load_config(scene_file.sensor_config_path);
    const RgbImage real_background = read_png(options.real_background_path);
    if (config.cameras.empty()) throw InvalidArguments("config has no cameras");
    if (real_background.width != config.cameras[0].width ||
        real_background.height != config.cameras[0].height) {
      throw DimensionMismatch("real background does not match camera 0 resolution");
    }

    Scene scene(config, scene_file.sensor_pose);
    std::map<std::string, std::shared_ptr<const TriangleMesh>> mesh_cache;
    for (const auto& entry : scene_file.bodies) {
      auto it = mesh_cache.find(entry.mesh_path);
      if (it == mesh_cache.end()) {
        it = mesh_cache
                 .emplace(entry.mesh_path, std::make_shared<TriangleMesh>(
                                               load_mesh(entry.mesh_path)))
                 .first;
      }
      scene.add_body(entry.id, it->second, entry.pose, entry.scale);
    }
    if (scene_file.trace_path) {
      TraceReader reader(*scene_file.trace_path);
      while (auto frame = reader.next()) apply_trace_frame(scene, *frame);
    }

    RenderOptions render_options;
    render_options.threads = options.threads;
    Renderer renderer(config, render_options);

    // Background = same scene with no contacts; the same noise seed makes
    // the subtraction cancel everything outside the contact region.
    const DeformedScene contact_view = apply_deformation(scene, config);
    scene.set_contacts({});
    const DeformedScene background_view = apply_deformation(scene, config);
    const RenderOutput sim = renderer.render(contact_view, options.seed);
    const RenderOutput sim_bg = renderer.render(background_view, options.seed);

    fs::create_directories(options.out_dir);
    const RgbImage composite = composite_calibrated(
        sim.images[0].rgb, sim_bg.images[0].rgb, real_background);
    const std::string out_path =
        options.out_dir + "/composite_" + config.cameras[0].name + ".png";
    write_png(composite, out_path);
    std::printf("composite written to %s\n", out_path.c_str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "composite: %s\n", e.what());
    return classify_error(e);
  }
}

int cmd_validate(const std::string& config_path) {
  if (!fs::exists(config_path)) {
    std::fprintf(stderr, "validate: file not found: %s\n", config_path.c_str());
    return kExitIo;
  }
  try {
    const SensorConfig config = load_config(config_path);
    const auto violations = validate_config(config);
    for (const auto& violation : violations) {
      std::printf("%s: %s\n", violation.field.c_str(), violation.constraint.c_str());
    }
    if (violations.empty()) {
      std::printf("%s: ok\n", config_path.c_str());
      return kExitOk;
    }
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::printf("%s: %s\n", e.field().c_str(), e.constraint().c_str());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "validate: %s\n", e.what());
    return classify_error(e);
  }
}

}  // namespace tacsim
