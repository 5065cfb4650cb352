// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/scene_file.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "tacsim/errors.hpp"
#include "yaml_util.hpp"

namespace tacsim {

namespace fs = std::filesystem;
using yaml::as_double;
using yaml::as_string;
using yaml::check_keys;
using yaml::require;

SceneFile load_scene_file(const std::string& path) {
  if (!fs::exists(path)) throw MissingFile(path);
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.mark.line + 1, e.msg);
  }
  const fs::path base_dir = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path fp(p);
    if (fp.is_relative()) fp = base_dir / fp;
    return fp.lexically_normal().string();
  };

  check_keys(root, {"sensor_config", "sensor_pose", "bodies", "trace"}, "scene");

  SceneFile scene;
  scene.sensor_config_path =
      resolve(as_string(require(root, "sensor_config", "scene"), "sensor_config"));
  if (!fs::exists(scene.sensor_config_path)) {
    throw MissingFile(scene.sensor_config_path);
  }
  if (root["sensor_pose"].IsDefined()) {
    check_keys(root["sensor_pose"], {"position", "orientation_quat"}, "sensor_pose");
    scene.sensor_pose = yaml::pose_from_map(root["sensor_pose"], "sensor_pose");
  }

  std::set<std::string> seen;
  if (root["bodies"].IsDefined()) {
    const YAML::Node bodies = root["bodies"];
    if (!bodies.IsSequence()) yaml::fail(bodies, "bodies must be a list");
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      const std::string ctx = "bodies[" + std::to_string(i) + "]";
      check_keys(bodies[i], {"id", "mesh", "scale", "position", "orientation_quat"},
                 ctx);
      SceneFile::BodyEntry entry;
      entry.id = as_string(require(bodies[i], "id", ctx), ctx + ".id");
      if (!seen.insert(entry.id).second) throw DuplicateId(entry.id);
      entry.mesh_path = resolve(as_string(require(bodies[i], "mesh", ctx), ctx));
      if (!fs::exists(entry.mesh_path)) throw MissingFile(entry.mesh_path);
      if (bodies[i]["scale"].IsDefined()) {
        entry.scale = as_double(bodies[i]["scale"], ctx + ".scale");
      }
      entry.pose = yaml::pose_from_map(bodies[i], ctx);
      scene.bodies.push_back(std::move(entry));
    }
  }

  if (root["trace"].IsDefined() && !root["trace"].IsNull()) {
    scene.trace_path = resolve(as_string(root["trace"], "trace"));
    if (!fs::exists(*scene.trace_path)) throw MissingFile(*scene.trace_path);
  }
  return scene;
}

void save_scene_file(const SceneFile& scene, const std::string& path) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "sensor_config" << YAML::Value << scene.sensor_config_path;
  out << YAML::Key << "sensor_pose" << YAML::Value << YAML::BeginMap;
  yaml::emit_pose(out, scene.sensor_pose);
  out << YAML::EndMap;
  out << YAML::Key << "bodies" << YAML::Value << YAML::BeginSeq;
  for (const auto& body : scene.bodies) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << body.id;
    out << YAML::Key << "mesh" << YAML::Value << body.mesh_path;
    out << YAML::Key << "scale" << YAML::Value << body.scale;
    yaml::emit_pose(out, body.pose);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  if (scene.trace_path) {
    out << YAML::Key << "trace" << YAML::Value << *scene.trace_path;
  }
  out << YAML::EndMap;

  std::ofstream file(path);
  if (!file) throw IoError("cannot open for writing: " + path);
  file << out.c_str() << '\n';
  if (!file.good()) throw IoError("write failed: " + path);
}

}  // namespace tacsim
