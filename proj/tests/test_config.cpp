// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>

#include "support/oracles.hpp"
#include "tacsim/config.hpp"
#include "tacsim/defaults.hpp"
#include "tacsim/errors.hpp"

using namespace tacsim;
using tacsim::testing::TempDir;

namespace {

std::string repo_file(const std::string& rel) {
  return std::string(TACSIM_REPO_DIR) + "/" + rel;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// A small valid document the mutation tests below edit.
std::string minimal_config_text() {
  return R"(name: tiny
cameras:
  - position: [0.0, 0.0, 0.0]
    orientation_quat: [1.0, 0.0, 0.0, 0.0]
    fov_y_deg: 60.0
    near: 0.001
    far: 0.1
    width: 32
    height: 24
lights:
  - position: [0.01, 0.0, 0.004]
    color: [1.0, 0.0, 0.0]
    intensity: 1.0
    attenuation: [1.0, 0.0, 25.0]
gel:
  slab: {width: 0.03, height: 0.02, curvature: 0.0, resolution: 8}
  position: [0.0, 0.0, 0.02]
  material:
    ambient: [0.1, 0.1, 0.1]
    diffuse: [0.6, 0.6, 0.6]
    specular: [0.2, 0.2, 0.2]
    shininess: 16.0
force_mapping:
  breakpoints: [[0.1, 0.0], [5.0, 0.002]]
noise_std: 0.0
blur_kernel: 1
shadows_enabled: false
)";
}

}  // namespace

TEST_CASE("shipped DIGIT-style config loads with 1 camera and 3 RGB lights") {
  const SensorConfig config = load_config(repo_file("configs/digit.yaml"));
  CHECK(config.cameras.size() == 1);
  CHECK(config.lights.size() == 3);
  CHECK(config.lights[0].color == Vec3(1, 0, 0));
  CHECK(config.lights[1].color == Vec3(0, 1, 0));
  CHECK(config.lights[2].color == Vec3(0, 0, 1));
  CHECK(validate_config(config).empty());
}

TEST_CASE("shipped OmniTact-style config has 5 cameras and 11 lights") {
  const SensorConfig config = load_config(repo_file("configs/omnitact.yaml"));
  CHECK(config.cameras.size() == 5);
  CHECK(config.lights.size() == 11);
  CHECK(validate_config(config).empty());
}

TEST_CASE("parse-serialize-parse is a fixpoint") {
  TempDir dir("config_roundtrip");
  for (const std::string name : {"digit.yaml", "omnitact.yaml"}) {
    const SensorConfig first = load_config(repo_file("configs/" + name));
    const std::string saved = dir.file("saved_" + name);
    save_config(first, saved);
    const SensorConfig second = load_config(saved);
    CHECK(first == second);

    // And the fixpoint is stable under a second round trip.
    const std::string saved2 = dir.file("saved2_" + name);
    save_config(second, saved2);
    CHECK(load_config(saved2) == second);
  }
}

TEST_CASE("round trip preserves breakpoint order and exact values") {
  TempDir dir("config_breakpoints");
  SensorConfig config = default_digit_config();
  config.force_mapping.breakpoints = {
      {0.123456789012345, 0.0}, {1.75, 0.00033333333333333331}, {9.5, 0.00171}};
  const std::string path = dir.file("bp.yaml");
  save_config(config, path);
  const SensorConfig loaded = load_config(path);
  REQUIRE(loaded.force_mapping.breakpoints.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(loaded.force_mapping.breakpoints[i].force_n ==
          config.force_mapping.breakpoints[i].force_n);
    CHECK(loaded.force_mapping.breakpoints[i].depth_m ==
          config.force_mapping.breakpoints[i].depth_m);
  }
}

TEST_CASE("far_clip <= near_clip is a ValidationError naming the field") {
  TempDir dir("config_farclip");
  std::string text = minimal_config_text();
  const auto pos = text.find("far: 0.1");
  text.replace(pos, 8, "far: 0.0005");
  const std::string path = dir.file("bad_far.yaml");
  write_text(path, text);
  try {
    load_config(path);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field().find("far_clip") != std::string::npos);
  }
}

TEST_CASE("unknown keys are a ParseError with a line number") {
  TempDir dir("config_unknown");
  const std::string path = dir.file("unknown.yaml");
  write_text(path, minimal_config_text() + "mystery_knob: 3\n");
  try {
    load_config(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
    CHECK(std::string(e.what()).find("mystery_knob") != std::string::npos);
  }
}

TEST_CASE("missing file raises MissingFile") {
  CHECK_THROWS_AS(load_config("/nonexistent/sensor.yaml"), MissingFile);
}

TEST_CASE("save to an unwritable path raises IoError") {
  const SensorConfig config = default_digit_config();
  CHECK_THROWS_AS(save_config(config, "/nonexistent_dir/out.yaml"), IoError);
}

TEST_CASE("validate_config reports decreasing forces under force_mapping") {
  SensorConfig config = default_digit_config();
  config.force_mapping.breakpoints = {{1.0, 0.0}, {0.5, 0.001}};
  const auto violations = validate_config(config);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].field == "force_mapping");
}

TEST_CASE("two simultaneous violations yield two entries") {
  SensorConfig config = default_digit_config();
  config.cameras[0].fov_y_deg = 200.0;
  config.noise_std = 0.9;
  const auto violations = validate_config(config);
  REQUIRE(violations.size() == 2);
  CHECK(violations[0].field == "cameras[0].fov_y_deg");
  CHECK(violations[1].field == "noise_std");
}

TEST_CASE("single-field mutations produce exactly the named violation") {
  struct Case {
    void (*mutate)(SensorConfig&);
    const char* field;
  };
  const Case cases[] = {
      {[](SensorConfig& c) { c.cameras[0].near_clip = 0.0; }, "cameras[0].near_clip"},
      {[](SensorConfig& c) { c.cameras[0].width = 4; }, "cameras[0].resolution"},
      {[](SensorConfig& c) { c.lights[0].color = Vec3(1.5, 0, 0); },
       "lights[0].color"},
      {[](SensorConfig& c) { c.lights[0].intensity = -1.0; }, "lights[0].intensity"},
      {[](SensorConfig& c) { c.lights[0].attenuation = Vec3(0, 0, 0); },
       "lights[0].attenuation"},
      {[](SensorConfig& c) { c.gel.material.shininess = 0.5; },
       "gel.material.shininess"},
      {[](SensorConfig& c) { c.blur_kernel = 4; }, "blur_kernel"},
      {[](SensorConfig& c) { c.shadow_bias = 0.0; }, "shadow_bias"},
      {[](SensorConfig& c) {
         // Small enough to keep depths non-decreasing, so only the
         // first-depth-zero rule trips.
         c.force_mapping.breakpoints.front().depth_m = 0.0004;
       },
       "force_mapping"},
  };
  for (const auto& test_case : cases) {
    SensorConfig config = default_digit_config();
    REQUIRE(validate_config(config).empty());
    test_case.mutate(config);
    const auto violations = validate_config(config);
    REQUIRE_MESSAGE(violations.size() == 1, test_case.field);
    CHECK(violations[0].field == test_case.field);
  }
}

TEST_CASE("empty camera or light lists are violations") {
  SensorConfig config = default_digit_config();
  config.cameras.clear();
  auto violations = validate_config(config);
  REQUIRE(!violations.empty());
  CHECK(violations[0].field == "cameras");

  config = default_digit_config();
  config.lights.clear();
  violations = validate_config(config);
  REQUIRE(!violations.empty());
  CHECK(violations[0].field == "lights");
}

TEST_CASE("relative gel mesh paths resolve against the config directory") {
  TempDir dir("config_relpath");
  // A one-face OBJ referenced relative to the config file.
  write_text(dir.file("gel.obj"), "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
  std::string text = minimal_config_text();
  const auto pos = text.find("slab: {width: 0.03, height: 0.02, curvature: 0.0, resolution: 8}");
  text.replace(pos, text.find('\n', pos) - pos, "mesh: gel.obj");
  const std::string path = dir.file("rel.yaml");
  write_text(path, text);
  const SensorConfig config = load_config(path);
  REQUIRE(config.gel.is_mesh_path());
  CHECK(std::get<std::string>(config.gel.mesh_source) == dir.file("gel.obj"));
}

TEST_CASE("two loads of the same file are structurally equal") {
  const std::string path = repo_file("configs/digit.yaml");
  CHECK(load_config(path) == load_config(path));
}
