// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "tacsim/commands.hpp"

namespace {

bool parse_resolution(const std::string& text, int& width, int& height) {
  const auto x = text.find('x');
  if (x == std::string::npos) return false;
  try {
    width = std::stoi(text.substr(0, x));
    height = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    return false;
  }
  return width > 0 && height > 0;
}

bool parse_range(const std::string& text, int& first, int& last) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      first = last = std::stoi(text);
    } else {
      first = std::stoi(text.substr(0, dots));
      last = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return first >= 0 && last >= first;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Headless vision-based tactile sensor simulator"};
  app.require_subcommand(1);

  tacsim::RenderCmdOptions render_opts;
  std::string frames_arg;
  auto* render = app.add_subcommand("render", "Render a scene (and its trace)");
  render->add_option("--scene", render_opts.scene_path, "Scene YAML")->required();
  render->add_option("--out", render_opts.out_dir, "Output directory")->required();
  render->add_option("--frames", frames_arg, "Frame range a..b (inclusive)");
  render->add_option("--seed", render_opts.seed, "Noise seed");
  render->add_option("--threads", render_opts.threads, "Shading threads (0 = auto)");

  tacsim::BenchCmdOptions bench_opts;
  std::string res_arg = "160x120";
  auto* bench = app.add_subcommand("bench", "Throughput benchmark");
  bench->add_option("--config", bench_opts.config_path, "Sensor YAML")->required();
  bench->add_option("--res", res_arg, "Resolution WxH (default 160x120)");
  bench->add_option("--bodies", bench_opts.bodies, "Total bodies");
  bench->add_option("--contacts", bench_opts.contacts, "Bodies in contact");
  bench->add_option("--frames", bench_opts.frames, "Measured frames (>= 10)");
  bench->add_option("--report", bench_opts.report_path, "CSV report path");
  bench->add_option("--seed", bench_opts.seed, "Perturbation seed");
  bench->add_option("--threads", bench_opts.threads, "Shading threads (0 = auto)");

  tacsim::DemoCmdOptions demo_opts;
  auto* demo = app.add_subcommand("demo", "Generate and render a contact scenario");
  demo->add_option("--kind", demo_opts.kind, "press | shear | sweep")->required();
  demo->add_option("--object", demo_opts.object,
                   "sphere:r | box:x,y,z | cylinder:r,l (meters)")
      ->required();
  demo->add_option("--force-max", demo_opts.force_max, "Peak normal force (N)");
  demo->add_option("--out", demo_opts.out_dir, "Output directory")->required();
  demo->add_option("--config", demo_opts.config_path,
                   "Sensor YAML (default: built-in DIGIT-style)");
  demo->add_option("--frames", demo_opts.frames, "Frame count (default 30)");
  demo->add_option("--seed", demo_opts.seed, "Noise seed");
  demo->add_option("--smooth-iters", demo_opts.smooth_iterations,
                   "Pre-smoothing iterations for the object mesh");
  demo->add_option("--smooth-lambda", demo_opts.smooth_lambda,
                   "Pre-smoothing strength in (0, 1]");
  demo->add_option("--threads", demo_opts.threads, "Shading threads (0 = auto)");

  tacsim::CompositeCmdOptions composite_opts;
  auto* composite =
      app.add_subcommand("composite", "Overlay simulated contact on a real image");
  composite->add_option("--scene", composite_opts.scene_path, "Scene YAML")
      ->required();
  composite->add_option("--real-bg", composite_opts.real_background_path,
                        "Real sensor background PNG")
      ->required();
  composite->add_option("--out", composite_opts.out_dir, "Output directory")
      ->required();
  composite->add_option("--seed", composite_opts.seed, "Noise seed");
  composite->add_option("--threads", composite_opts.threads,
                        "Shading threads (0 = auto)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a sensor config");
  validate->add_option("config", validate_path, "Sensor YAML")->required();

  CLI11_PARSE(app, argc, argv);

  if (render->parsed()) {
    if (!frames_arg.empty()) {
      int first = 0, last = 0;
      if (!parse_range(frames_arg, first, last)) {
        std::fprintf(stderr, "render: bad --frames '%s'\n", frames_arg.c_str());
        return tacsim::kExitValidation;
      }
      render_opts.frame_range = {first, last};
    }
    return tacsim::cmd_render(render_opts);
  }
  if (bench->parsed()) {
    if (!parse_resolution(res_arg, bench_opts.width, bench_opts.height)) {
      std::fprintf(stderr, "bench: bad --res '%s'\n", res_arg.c_str());
      return tacsim::kExitValidation;
    }
    return tacsim::cmd_bench(bench_opts);
  }
  if (demo->parsed()) return tacsim::cmd_demo(demo_opts);
  if (composite->parsed()) return tacsim::cmd_composite(composite_opts);
  if (validate->parsed()) return tacsim::cmd_validate(validate_path);
  return tacsim::kExitValidation;
}
