// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/defaults.hpp"

#include <cmath>
#include <numbers>

namespace tacsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

SensorConfig default_digit_config() {
  SensorConfig config;
  config.name = "digit";

  CameraSpec cam;
  cam.name = "cam0";
  cam.pose = Pose::identity();
  cam.fov_y_deg = 60.0;
  cam.near_clip = 0.001;
  cam.far_clip = 0.1;
  cam.width = 160;
  cam.height = 120;
  config.cameras.push_back(cam);

  // Three LEDs at 120 degrees around the camera axis, pure R/G/B.
  const Vec3 colors[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    const double angle = (0.25 + i / 3.0) * 2.0 * kPi;
    LightSpec light;
    light.pose.translation =
        Vec3(0.013 * std::cos(angle), 0.013 * std::sin(angle), 0.004);
    light.color = colors[i];
    light.intensity = 1.3;
    light.attenuation = Vec3(1.0, 30.0, 800.0);
    config.lights.push_back(light);
  }

  config.gel.mesh_source = SlabSpec{0.036, 0.028, 0.0, 32};
  config.gel.pose = Pose::from_translation(Vec3(0, 0, 0.022));
  config.gel.material.ambient = Vec3(0.12, 0.12, 0.14);
  config.gel.material.diffuse = Vec3(0.70, 0.70, 0.72);
  config.gel.material.specular = Vec3(0.35, 0.35, 0.35);
  config.gel.material.shininess = 32.0;

  config.force_mapping.breakpoints = {
      {0.1, 0.0}, {1.0, 0.0005}, {5.0, 0.0012}, {10.0, 0.0015}};
  config.noise_std = 0.0;
  config.blur_kernel = 7;
  config.shadows_enabled = true;
  config.shadow_bias = 5e-5;
  config.shadow_map_size = 512;
  return config;
}

SensorConfig default_omnitact_config() {
  SensorConfig config;
  config.name = "omnitact";

  // Center camera plus four tilted outward, all behind the dome gel.
  const double tilt = 28.0 * kPi / 180.0;
  const struct {
    const char* name;
    Vec3 axis;
    double angle;
  } cams[5] = {{"cam_center", {0, 0, 1}, 0.0},
               {"cam_xp", {0, 1, 0}, tilt},
               {"cam_xn", {0, 1, 0}, -tilt},
               {"cam_yp", {1, 0, 0}, -tilt},
               {"cam_yn", {1, 0, 0}, tilt}};
  for (const auto& c : cams) {
    CameraSpec cam;
    cam.name = c.name;
    cam.pose = c.angle == 0.0 ? Pose::identity()
                              : Pose::from_axis_angle(c.axis, c.angle);
    cam.fov_y_deg = 70.0;
    cam.near_clip = 0.001;
    cam.far_clip = 0.06;
    cam.width = 160;
    cam.height = 120;
    config.cameras.push_back(cam);
  }

  // Eleven LEDs: two rings of four plus three near the base, in the warm
  // mix that gives the sensor its pinkish cast.
  const Vec3 ring_colors[4] = {
      {1.0, 0.45, 0.45}, {1.0, 0.85, 0.85}, {0.75, 0.45, 1.0}, {1.0, 0.6, 0.5}};
  for (int i = 0; i < 4; ++i) {
    const double angle = i * 0.5 * kPi;
    LightSpec light;
    light.pose.translation =
        Vec3(0.009 * std::cos(angle), 0.009 * std::sin(angle), 0.003);
    light.color = ring_colors[i];
    light.intensity = 1.1;
    light.attenuation = Vec3(1.0, 25.0, 900.0);
    config.lights.push_back(light);
  }
  for (int i = 0; i < 4; ++i) {
    const double angle = (i + 0.5) * 0.5 * kPi;
    LightSpec light;
    light.pose.translation =
        Vec3(0.011 * std::cos(angle), 0.011 * std::sin(angle), 0.0);
    light.color = Vec3(1.0, 0.55, 0.6);
    light.intensity = 0.9;
    light.attenuation = Vec3(1.0, 25.0, 900.0);
    config.lights.push_back(light);
  }
  for (int i = 0; i < 3; ++i) {
    const double angle = i * 2.0 * kPi / 3.0;
    LightSpec light;
    light.pose.translation =
        Vec3(0.006 * std::cos(angle), 0.006 * std::sin(angle), -0.003);
    light.color = Vec3(0.95, 0.8, 0.9);
    light.intensity = 0.8;
    light.attenuation = Vec3(1.0, 25.0, 900.0);
    config.lights.push_back(light);
  }

  config.gel.mesh_source = SlabSpec{0.032, 0.032, 0.007, 48};
  config.gel.pose = Pose::from_translation(Vec3(0, 0, 0.014));
  config.gel.material.ambient = Vec3(0.14, 0.11, 0.12);
  config.gel.material.diffuse = Vec3(0.72, 0.62, 0.66);
  config.gel.material.specular = Vec3(0.3, 0.3, 0.3);
  config.gel.material.shininess = 24.0;

  config.force_mapping.breakpoints = {
      {0.1, 0.0}, {1.5, 0.0006}, {6.0, 0.0014}, {12.0, 0.0018}};
  config.noise_std = 0.0;
  config.blur_kernel = 5;
  config.shadows_enabled = true;
  config.shadow_bias = 5e-5;
  config.shadow_map_size = 512;
  return config;
}

}  // namespace tacsim
