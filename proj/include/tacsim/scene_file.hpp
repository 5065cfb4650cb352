// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tacsim/pose.hpp"

namespace tacsim {

/// YAML description of one renderable setup: the sensor, its world pose,
/// the bodies, and an optional trace to replay.
struct SceneFile {
  std::string sensor_config_path;
  Pose sensor_pose;
  struct BodyEntry {
    std::string id;
    std::string mesh_path;
    double scale = 1.0;
    Pose pose;
  };
  std::vector<BodyEntry> bodies;
  std::optional<std::string> trace_path;
};

/// Relative paths resolve against the scene file's directory; referenced
/// files must exist and body ids must be unique.
SceneFile load_scene_file(const std::string& path);

void save_scene_file(const SceneFile& scene, const std::string& path);

}  // namespace tacsim
