// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tacsim/pose.hpp"

namespace tacsim {

/// One internal camera. Poses are expressed in the sensor frame; the
/// camera looks down its local +z axis, x right, y down in the image.
struct CameraSpec {
  std::string name = "cam0";
  Pose pose;
  double fov_y_deg = 60.0;  // vertical field of view, degrees in (0, 180)
  double near_clip = 0.001;  // meters
  double far_clip = 0.1;     // meters
  int width = 160;
  int height = 120;

  double fov_y_rad() const;
};

/// Point light in the sensor frame with linear RGB color and
/// 1 / (c + l*d + q*d^2) distance attenuation.
struct LightSpec {
  Pose pose;
  Vec3 color{1.0, 1.0, 1.0};
  double intensity = 1.0;
  Vec3 attenuation{1.0, 0.0, 25.0};  // constant, linear, quadratic
};

struct PhongMaterial {
  Vec3 ambient{0.1, 0.1, 0.1};
  Vec3 diffuse{0.6, 0.6, 0.6};
  Vec3 specular{0.3, 0.3, 0.3};
  double shininess = 16.0;  // >= 1
};

/// Parametric gel sheet, used instead of a mesh file.
struct SlabSpec {
  double width = 0.03;    // meters, x extent
  double height = 0.02;   // meters, y extent
  double curvature = 0.0;  // dome apex height, 0 = flat
  int resolution = 32;     // grid cells per side
};

struct GelSpec {
  std::variant<std::string, SlabSpec> mesh_source = SlabSpec{};
  Pose pose;
  PhongMaterial material;

  bool is_mesh_path() const { return std::holds_alternative<std::string>(mesh_source); }
};

/// Piece-wise linear force -> deformation-depth curve. The first
/// breakpoint is the sensing threshold (depth 0), the last one the
/// saturation point.
struct ForceMapping {
  struct Breakpoint {
    double force_n = 0.0;
    double depth_m = 0.0;
  };
  std::vector<Breakpoint> breakpoints;
};

struct SensorConfig {
  std::string name = "sensor";
  std::vector<CameraSpec> cameras;
  std::vector<LightSpec> lights;
  GelSpec gel;
  ForceMapping force_mapping;
  double noise_std = 0.0;      // per-channel Gaussian std on [0,1] colors
  int blur_kernel = 1;         // odd; 1 disables the blur stage
  bool shadows_enabled = false;
  std::optional<std::string> background_real;  // PNG for calibration compositing
  double shadow_bias = 5e-5;   // meters
  int shadow_map_size = 512;   // texels per side
};

bool operator==(const CameraSpec&, const CameraSpec&);
bool operator==(const LightSpec&, const LightSpec&);
bool operator==(const PhongMaterial&, const PhongMaterial&);
bool operator==(const SlabSpec&, const SlabSpec&);
bool operator==(const GelSpec&, const GelSpec&);
bool operator==(const ForceMapping::Breakpoint&, const ForceMapping::Breakpoint&);
bool operator==(const ForceMapping&, const ForceMapping&);
bool operator==(const SensorConfig&, const SensorConfig&);

struct Violation {
  std::string field;
  std::string constraint;
};

/// Parses and validates a sensor description. Relative paths inside the
/// file are resolved against the file's directory.
/// Throws MissingFile, ParseError, or ValidationError.
SensorConfig load_config(const std::string& path);

/// Inverse of load_config up to structural equality:
/// load_config(save_config(c, p), p) == c.
void save_config(const SensorConfig& config, const std::string& path);

/// Empty result iff every type invariant holds. Never throws; violations
/// are data naming the offending field and constraint.
std::vector<Violation> validate_config(const SensorConfig& config);

}  // namespace tacsim
