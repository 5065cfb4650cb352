// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tacsim/config.hpp"
#include "tacsim/mesh.hpp"
#include "tacsim/trace.hpp"

namespace tacsim {

enum class ScenarioKind { kPress, kShear, kSweep };

/// Contact object for generated scenarios.
struct PrimitiveSpec {
  enum class Shape { kSphere, kBox, kCylinder };
  Shape shape = Shape::kSphere;
  double sphere_radius = 0.00265;
  Vec3 box_extents{0.005, 0.005, 0.005};
  double cylinder_radius = 0.002;
  double cylinder_length = 0.01;

  /// "sphere:r", "box:x,y,z", or "cylinder:r,l" (meters).
  static PrimitiveSpec parse(const std::string& text);

  TriangleMesh make_mesh() const;
  /// Distance from the body origin to the gel plane when just touching.
  double rest_offset() const;
  /// Orientation that puts the contact feature against the gel plane
  /// (cylinders lie on their side).
  Quat rest_rotation() const;
};

/// Analytic stand-in for a physics engine: a contact object following a
/// motion path with a force profile against the flat gel plane.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kPress;
  PrimitiveSpec object;
  std::vector<std::pair<double, double>> force_profile;  // (t, newtons)
  std::vector<std::pair<double, Pose>> motion_path;      // (t, world pose)
  Vec3 contact_normal{0, 0, 1};  // world frame, out of the gel
};

ScenarioKind parse_scenario_kind(const std::string& text);

/// Builds the path and force profile against the sensor's gel, assuming
/// the sensor sits at the world origin.
ScenarioSpec make_scenario(ScenarioKind kind, const PrimitiveSpec& object,
                           double force_max, const SensorConfig& config,
                           double duration = 1.0);

/// Samples the scenario at `n_frames` evenly spaced times. Poses are
/// piecewise-lerped (slerp for rotations), forces piecewise-linear; a
/// contact report is emitted whenever the force is positive.
std::vector<TraceFrame> generate_scenario_trace(const ScenarioSpec& spec,
                                                const std::string& body_id,
                                                int n_frames);

}  // namespace tacsim
