// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "tacsim/errors.hpp"
#include "tacsim/mesh_io.hpp"
#include "yaml_util.hpp"

namespace tacsim {

namespace fs = std::filesystem;
using yaml::as_bool;
using yaml::as_double;
using yaml::as_int;
using yaml::as_string;
using yaml::as_vec3;
using yaml::check_keys;
using yaml::require;

double CameraSpec::fov_y_rad() const {
  return fov_y_deg * std::numbers::pi / 180.0;
}

namespace {

bool pose_equal(const Pose& a, const Pose& b) {
  return a.translation == b.translation && a.rotation.coeffs() == b.rotation.coeffs();
}

CameraSpec parse_camera(const YAML::Node& node, int index) {
  const std::string ctx = "cameras[" + std::to_string(index) + "]";
  check_keys(node, {"name", "position", "orientation_quat", "fov_y_deg", "near",
                    "far", "width", "height"}, ctx);
  CameraSpec cam;
  cam.name = node["name"].IsDefined() ? as_string(node["name"], ctx + ".name")
                                      : "cam" + std::to_string(index);
  cam.pose = yaml::pose_from_map(node, ctx);
  cam.fov_y_deg = as_double(require(node, "fov_y_deg", ctx), ctx + ".fov_y_deg");
  cam.near_clip = as_double(require(node, "near", ctx), ctx + ".near");
  cam.far_clip = as_double(require(node, "far", ctx), ctx + ".far");
  cam.width = as_int(require(node, "width", ctx), ctx + ".width");
  cam.height = as_int(require(node, "height", ctx), ctx + ".height");
  return cam;
}

LightSpec parse_light(const YAML::Node& node, int index) {
  const std::string ctx = "lights[" + std::to_string(index) + "]";
  check_keys(node, {"position", "color", "intensity", "attenuation"}, ctx);
  LightSpec light;
  light.pose.translation =
      as_vec3(require(node, "position", ctx), ctx + ".position");
  light.color = as_vec3(require(node, "color", ctx), ctx + ".color");
  light.intensity = as_double(require(node, "intensity", ctx), ctx + ".intensity");
  if (node["attenuation"].IsDefined()) {
    light.attenuation = as_vec3(node["attenuation"], ctx + ".attenuation");
  }
  return light;
}

PhongMaterial parse_material(const YAML::Node& node) {
  const std::string ctx = "gel.material";
  check_keys(node, {"ambient", "diffuse", "specular", "shininess"}, ctx);
  PhongMaterial m;
  m.ambient = as_vec3(require(node, "ambient", ctx), ctx + ".ambient");
  m.diffuse = as_vec3(require(node, "diffuse", ctx), ctx + ".diffuse");
  m.specular = as_vec3(require(node, "specular", ctx), ctx + ".specular");
  m.shininess = as_double(require(node, "shininess", ctx), ctx + ".shininess");
  return m;
}

GelSpec parse_gel(const YAML::Node& node, const fs::path& base_dir) {
  const std::string ctx = "gel";
  check_keys(node, {"mesh", "slab", "position", "orientation_quat", "material"}, ctx);
  GelSpec gel;
  const bool has_mesh = node["mesh"].IsDefined();
  const bool has_slab = node["slab"].IsDefined();
  if (has_mesh == has_slab) {
    yaml::fail(node, "gel needs exactly one of 'mesh' or 'slab'");
  }
  if (has_mesh) {
    fs::path p = as_string(node["mesh"], ctx + ".mesh");
    if (p.is_relative()) p = base_dir / p;
    gel.mesh_source = p.lexically_normal().string();
  } else {
    const YAML::Node slab = node["slab"];
    check_keys(slab, {"width", "height", "curvature", "resolution"}, "gel.slab");
    SlabSpec s;
    s.width = as_double(require(slab, "width", "gel.slab"), "gel.slab.width");
    s.height = as_double(require(slab, "height", "gel.slab"), "gel.slab.height");
    s.curvature =
        as_double(require(slab, "curvature", "gel.slab"), "gel.slab.curvature");
    if (slab["resolution"].IsDefined()) {
      s.resolution = as_int(slab["resolution"], "gel.slab.resolution");
    }
    gel.mesh_source = s;
  }
  gel.pose = yaml::pose_from_map(node, ctx);
  gel.material = parse_material(require(node, "material", ctx));
  return gel;
}

ForceMapping parse_force_mapping(const YAML::Node& node) {
  const std::string ctx = "force_mapping";
  check_keys(node, {"breakpoints"}, ctx);
  const YAML::Node bps = require(node, "breakpoints", ctx);
  if (!bps.IsSequence()) yaml::fail(bps, "force_mapping.breakpoints must be a list");
  ForceMapping mapping;
  for (const auto& bp : bps) {
    if (!bp.IsSequence() || bp.size() != 2) {
      yaml::fail(bp, "breakpoint must be [force_n, depth_m]");
    }
    mapping.breakpoints.push_back({as_double(bp[0], ctx), as_double(bp[1], ctx)});
  }
  return mapping;
}

void append(std::vector<Violation>& out, const std::string& field,
            const std::string& constraint) {
  out.push_back({field, constraint});
}

bool rgb_in_unit(const Vec3& v) {
  return v.minCoeff() >= 0.0 && v.maxCoeff() <= 1.0;
}

}  // namespace

bool operator==(const CameraSpec& a, const CameraSpec& b) {
  return a.name == b.name && pose_equal(a.pose, b.pose) &&
         a.fov_y_deg == b.fov_y_deg && a.near_clip == b.near_clip &&
         a.far_clip == b.far_clip && a.width == b.width && a.height == b.height;
}

bool operator==(const LightSpec& a, const LightSpec& b) {
  return pose_equal(a.pose, b.pose) && a.color == b.color &&
         a.intensity == b.intensity && a.attenuation == b.attenuation;
}

bool operator==(const PhongMaterial& a, const PhongMaterial& b) {
  return a.ambient == b.ambient && a.diffuse == b.diffuse &&
         a.specular == b.specular && a.shininess == b.shininess;
}

bool operator==(const SlabSpec& a, const SlabSpec& b) {
  return a.width == b.width && a.height == b.height &&
         a.curvature == b.curvature && a.resolution == b.resolution;
}

bool operator==(const GelSpec& a, const GelSpec& b) {
  return a.mesh_source == b.mesh_source && pose_equal(a.pose, b.pose) &&
         a.material == b.material;
}

bool operator==(const ForceMapping::Breakpoint& a, const ForceMapping::Breakpoint& b) {
  return a.force_n == b.force_n && a.depth_m == b.depth_m;
}

bool operator==(const ForceMapping& a, const ForceMapping& b) {
  return a.breakpoints == b.breakpoints;
}

bool operator==(const SensorConfig& a, const SensorConfig& b) {
  return a.name == b.name && a.cameras == b.cameras && a.lights == b.lights &&
         a.gel == b.gel && a.force_mapping == b.force_mapping &&
         a.noise_std == b.noise_std && a.blur_kernel == b.blur_kernel &&
         a.shadows_enabled == b.shadows_enabled &&
         a.background_real == b.background_real && a.shadow_bias == b.shadow_bias &&
         a.shadow_map_size == b.shadow_map_size;
}

SensorConfig load_config(const std::string& path) {
  if (!fs::exists(path)) throw MissingFile(path);
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.mark.line + 1, e.msg);
  }
  const fs::path base_dir = fs::path(path).parent_path();

  check_keys(root, {"name", "cameras", "lights", "gel", "force_mapping",
                    "noise_std", "blur_kernel", "shadows_enabled",
                    "background_real", "shadow_bias", "shadow_map_size"},
             "config");

  SensorConfig config;
  config.name = as_string(require(root, "name", "config"), "name");

  const YAML::Node cams = require(root, "cameras", "config");
  if (!cams.IsSequence()) yaml::fail(cams, "cameras must be a list");
  for (std::size_t i = 0; i < cams.size(); ++i) {
    config.cameras.push_back(parse_camera(cams[i], static_cast<int>(i)));
  }

  const YAML::Node lights = require(root, "lights", "config");
  if (!lights.IsSequence()) yaml::fail(lights, "lights must be a list");
  for (std::size_t i = 0; i < lights.size(); ++i) {
    config.lights.push_back(parse_light(lights[i], static_cast<int>(i)));
  }

  config.gel = parse_gel(require(root, "gel", "config"), base_dir);
  config.force_mapping = parse_force_mapping(require(root, "force_mapping", "config"));
  config.noise_std = as_double(require(root, "noise_std", "config"), "noise_std");
  config.blur_kernel = as_int(require(root, "blur_kernel", "config"), "blur_kernel");
  config.shadows_enabled =
      as_bool(require(root, "shadows_enabled", "config"), "shadows_enabled");
  if (root["background_real"].IsDefined() && !root["background_real"].IsNull()) {
    fs::path p = as_string(root["background_real"], "background_real");
    if (p.is_relative()) p = base_dir / p;
    config.background_real = p.lexically_normal().string();
  }
  if (root["shadow_bias"].IsDefined()) {
    config.shadow_bias = as_double(root["shadow_bias"], "shadow_bias");
  }
  if (root["shadow_map_size"].IsDefined()) {
    config.shadow_map_size = as_int(root["shadow_map_size"], "shadow_map_size");
  }

  const auto violations = validate_config(config);
  if (!violations.empty()) {
    throw ValidationError(violations.front().field, violations.front().constraint);
  }
  return config;
}

void save_config(const SensorConfig& config, const std::string& path) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << config.name;

  out << YAML::Key << "cameras" << YAML::Value << YAML::BeginSeq;
  for (const auto& cam : config.cameras) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << cam.name;
    yaml::emit_pose(out, cam.pose);
    out << YAML::Key << "fov_y_deg" << YAML::Value << cam.fov_y_deg;
    out << YAML::Key << "near" << YAML::Value << cam.near_clip;
    out << YAML::Key << "far" << YAML::Value << cam.far_clip;
    out << YAML::Key << "width" << YAML::Value << cam.width;
    out << YAML::Key << "height" << YAML::Value << cam.height;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "lights" << YAML::Value << YAML::BeginSeq;
  for (const auto& light : config.lights) {
    out << YAML::BeginMap;
    out << YAML::Key << "position" << YAML::Value;
    yaml::emit_vec3(out, light.pose.translation);
    out << YAML::Key << "color" << YAML::Value;
    yaml::emit_vec3(out, light.color);
    out << YAML::Key << "intensity" << YAML::Value << light.intensity;
    out << YAML::Key << "attenuation" << YAML::Value;
    yaml::emit_vec3(out, light.attenuation);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "gel" << YAML::Value << YAML::BeginMap;
  if (config.gel.is_mesh_path()) {
    out << YAML::Key << "mesh" << YAML::Value
        << std::get<std::string>(config.gel.mesh_source);
  } else {
    const auto& slab = std::get<SlabSpec>(config.gel.mesh_source);
    out << YAML::Key << "slab" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "width" << YAML::Value << slab.width;
    out << YAML::Key << "height" << YAML::Value << slab.height;
    out << YAML::Key << "curvature" << YAML::Value << slab.curvature;
    out << YAML::Key << "resolution" << YAML::Value << slab.resolution;
    out << YAML::EndMap;
  }
  yaml::emit_pose(out, config.gel.pose);
  out << YAML::Key << "material" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "ambient" << YAML::Value;
  yaml::emit_vec3(out, config.gel.material.ambient);
  out << YAML::Key << "diffuse" << YAML::Value;
  yaml::emit_vec3(out, config.gel.material.diffuse);
  out << YAML::Key << "specular" << YAML::Value;
  yaml::emit_vec3(out, config.gel.material.specular);
  out << YAML::Key << "shininess" << YAML::Value << config.gel.material.shininess;
  out << YAML::EndMap;
  out << YAML::EndMap;

  out << YAML::Key << "force_mapping" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "breakpoints" << YAML::Value << YAML::BeginSeq;
  for (const auto& bp : config.force_mapping.breakpoints) {
    out << YAML::Flow << YAML::BeginSeq << bp.force_n << bp.depth_m << YAML::EndSeq;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "noise_std" << YAML::Value << config.noise_std;
  out << YAML::Key << "blur_kernel" << YAML::Value << config.blur_kernel;
  out << YAML::Key << "shadows_enabled" << YAML::Value << config.shadows_enabled;
  if (config.background_real) {
    out << YAML::Key << "background_real" << YAML::Value << *config.background_real;
  }
  out << YAML::Key << "shadow_bias" << YAML::Value << config.shadow_bias;
  out << YAML::Key << "shadow_map_size" << YAML::Value << config.shadow_map_size;
  out << YAML::EndMap;

  std::ofstream file(path);
  if (!file) throw IoError("cannot open for writing: " + path);
  file << out.c_str() << '\n';
  if (!file.good()) throw IoError("write failed: " + path);
  file.close();
  if (!file.good()) throw IoError("write failed: " + path);
}

std::vector<Violation> validate_config(const SensorConfig& config) {
  std::vector<Violation> v;

  if (config.cameras.empty()) append(v, "cameras", "at least one camera required");
  if (config.lights.empty()) append(v, "lights", "at least one light required");

  for (std::size_t i = 0; i < config.cameras.size(); ++i) {
    const auto& cam = config.cameras[i];
    const std::string f = "cameras[" + std::to_string(i) + "].";
    if (!(cam.fov_y_deg > 0.0 && cam.fov_y_deg < 180.0)) {
      append(v, f + "fov_y_deg", "must be in (0, 180) degrees");
    }
    if (!(cam.near_clip > 0.0)) append(v, f + "near_clip", "must be > 0");
    if (!(cam.far_clip > cam.near_clip)) {
      append(v, f + "far_clip", "must be greater than near_clip");
    }
    if (cam.width < 8 || cam.height < 8) {
      append(v, f + "resolution", "width and height must be >= 8 pixels");
    }
  }

  for (std::size_t i = 0; i < config.lights.size(); ++i) {
    const auto& light = config.lights[i];
    const std::string f = "lights[" + std::to_string(i) + "].";
    if (!rgb_in_unit(light.color)) append(v, f + "color", "channels must be in [0, 1]");
    if (!(light.intensity >= 0.0)) append(v, f + "intensity", "must be >= 0");
    if (light.attenuation.minCoeff() < 0.0 || light.attenuation.maxCoeff() == 0.0) {
      append(v, f + "attenuation", "coefficients must be >= 0 and not all zero");
    }
  }

  const auto& mat = config.gel.material;
  if (!rgb_in_unit(mat.ambient)) append(v, "gel.material.ambient", "must be in [0, 1]");
  if (!rgb_in_unit(mat.diffuse)) append(v, "gel.material.diffuse", "must be in [0, 1]");
  if (!rgb_in_unit(mat.specular)) {
    append(v, "gel.material.specular", "must be in [0, 1]");
  }
  if (!(mat.shininess >= 1.0)) append(v, "gel.material.shininess", "must be >= 1");

  if (config.gel.is_mesh_path()) {
    const auto& path = std::get<std::string>(config.gel.mesh_source);
    try {
      load_mesh(path);
    } catch (const SimError& e) {
      append(v, "gel.mesh", std::string("mesh does not load: ") + e.what());
    }
  } else {
    const auto& slab = std::get<SlabSpec>(config.gel.mesh_source);
    if (!(slab.width > 0.0) || !(slab.height > 0.0)) {
      append(v, "gel.slab", "width and height must be > 0");
    }
    if (slab.curvature < 0.0) append(v, "gel.slab", "curvature must be >= 0");
    if (slab.resolution < 1) append(v, "gel.slab", "resolution must be >= 1");
  }

  const auto& bps = config.force_mapping.breakpoints;
  if (bps.empty()) {
    append(v, "force_mapping", "needs at least one breakpoint");
  } else {
    if (bps.front().depth_m != 0.0) {
      append(v, "force_mapping", "first breakpoint depth must be 0");
    }
    bool ok = bps.front().force_n >= 0.0 && bps.front().depth_m >= 0.0;
    for (std::size_t i = 1; ok && i < bps.size(); ++i) {
      ok = bps[i].force_n > bps[i - 1].force_n && bps[i].depth_m >= bps[i - 1].depth_m;
    }
    if (!ok) {
      append(v, "force_mapping",
             "forces must be strictly increasing and depths non-decreasing, all >= 0");
    }
  }

  if (!(config.noise_std >= 0.0 && config.noise_std <= 0.5)) {
    append(v, "noise_std", "must be in [0, 0.5]");
  }
  if (config.blur_kernel < 1 || config.blur_kernel % 2 == 0) {
    append(v, "blur_kernel", "must be odd and >= 1");
  }
  if (config.background_real && !fs::exists(*config.background_real)) {
    append(v, "background_real", "file does not exist");
  }
  if (!(config.shadow_bias > 0.0)) append(v, "shadow_bias", "must be > 0");
  if (config.shadow_map_size < 16) append(v, "shadow_map_size", "must be >= 16");

  return v;
}

}  // namespace tacsim
