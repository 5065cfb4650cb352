// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tacsim/errors.hpp"
#include "tacsim/primitives.hpp"

namespace tacsim {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InvalidArguments("bad number '" + token + "' in primitive spec");
    }
  }
  return out;
}

double lerp_profile(const std::vector<std::pair<double, double>>& knots, double t) {
  if (knots.empty()) return 0.0;
  if (t <= knots.front().first) return knots.front().second;
  if (t >= knots.back().first) return knots.back().second;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (t <= knots[i].first) {
      const double u =
          (t - knots[i - 1].first) / (knots[i].first - knots[i - 1].first);
      return knots[i - 1].second + u * (knots[i].second - knots[i - 1].second);
    }
  }
  return knots.back().second;
}

Pose lerp_path(const std::vector<std::pair<double, Pose>>& knots, double t) {
  if (knots.empty()) return Pose::identity();
  if (t <= knots.front().first) return knots.front().second;
  if (t >= knots.back().first) return knots.back().second;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (t <= knots[i].first) {
      const double u =
          (t - knots[i - 1].first) / (knots[i].first - knots[i - 1].first);
      const Pose& a = knots[i - 1].second;
      const Pose& b = knots[i].second;
      Pose out;
      out.translation = a.translation + u * (b.translation - a.translation);
      out.rotation = a.rotation.slerp(u, b.rotation).normalized();
      return out;
    }
  }
  return knots.back().second;
}

template <typename T>
void require_increasing(const std::vector<std::pair<double, T>>& knots,
                        const char* what) {
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw InvalidArguments(std::string(what) +
                             " timestamps must be strictly increasing");
    }
  }
}

}  // namespace

PrimitiveSpec PrimitiveSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvalidArguments("primitive must look like sphere:r, box:x,y,z, or "
                           "cylinder:r,l");
  }
  const std::string kind = text.substr(0, colon);
  const std::vector<double> nums = parse_numbers(text.substr(colon + 1));
  PrimitiveSpec spec;
  if (kind == "sphere") {
    if (nums.size() != 1 || nums[0] <= 0.0) {
      throw InvalidArguments("sphere needs one positive radius");
    }
    spec.shape = Shape::kSphere;
    spec.sphere_radius = nums[0];
  } else if (kind == "box") {
    if (nums.size() != 3 || *std::min_element(nums.begin(), nums.end()) <= 0.0) {
      throw InvalidArguments("box needs three positive extents");
    }
    spec.shape = Shape::kBox;
    spec.box_extents = Vec3(nums[0], nums[1], nums[2]);
  } else if (kind == "cylinder") {
    if (nums.size() != 2 || nums[0] <= 0.0 || nums[1] <= 0.0) {
      throw InvalidArguments("cylinder needs positive radius and length");
    }
    spec.shape = Shape::kCylinder;
    spec.cylinder_radius = nums[0];
    spec.cylinder_length = nums[1];
  } else {
    throw InvalidArguments("unknown primitive '" + kind + "'");
  }
  return spec;
}

TriangleMesh PrimitiveSpec::make_mesh() const {
  switch (shape) {
    case Shape::kSphere:
      return make_icosphere(sphere_radius, 3);
    case Shape::kBox: {
      // Subdivided so pre-smoothing can soften the contact boundary.
      TriangleMesh box = make_box(box_extents);
      for (int i = 0; i < 3; ++i) box = subdivide_midpoint(box);
      return box;
    }
    case Shape::kCylinder:
      return make_cylinder(cylinder_radius, cylinder_length);
  }
  throw InvalidArguments("unhandled primitive shape");
}

double PrimitiveSpec::rest_offset() const {
  switch (shape) {
    case Shape::kSphere:
      return sphere_radius;
    case Shape::kBox:
      return 0.5 * box_extents.z();
    case Shape::kCylinder:
      return cylinder_radius;  // lying on its side
  }
  return 0.0;
}

Quat PrimitiveSpec::rest_rotation() const {
  if (shape == Shape::kCylinder) {
    // Lay the +z axis along +x so the side line touches the gel.
    return Quat(Eigen::AngleAxisd(0.5 * std::numbers::pi, Vec3::UnitY()));
  }
  return Quat::Identity();
}

ScenarioKind parse_scenario_kind(const std::string& text) {
  if (text == "press") return ScenarioKind::kPress;
  if (text == "shear") return ScenarioKind::kShear;
  if (text == "sweep") return ScenarioKind::kSweep;
  throw InvalidArguments("scenario kind must be press, shear, or sweep");
}

ScenarioSpec make_scenario(ScenarioKind kind, const PrimitiveSpec& object,
                           double force_max, const SensorConfig& config,
                           double duration) {
  if (!(force_max >= 0.0)) throw InvalidArguments("force must be >= 0");
  if (!(duration > 0.0)) throw InvalidArguments("duration must be > 0");

  ScenarioSpec spec;
  spec.kind = kind;
  spec.object = object;

  // Sensor at the world origin: contact happens on the gel plane.
  const Pose& gel = config.gel.pose;
  spec.contact_normal = rotate(gel, Vec3(0, 0, 1));
  const Vec3 surface_center = gel.translation;
  const Vec3 lateral = rotate(gel, Vec3(1, 0, 0));

  double gel_width = 0.03;
  if (!config.gel.is_mesh_path()) {
    gel_width = std::get<SlabSpec>(config.gel.mesh_source).width;
  }
  const double shift = 0.22 * gel_width;

  const Vec3 rest = surface_center + spec.contact_normal * object.rest_offset();
  const Quat rot = object.rest_rotation();

  switch (kind) {
    case ScenarioKind::kPress:
      spec.motion_path = {{0.0, Pose{rest, rot}}, {duration, Pose{rest, rot}}};
      spec.force_profile = {{0.0, 0.0}, {duration, force_max}};
      break;
    case ScenarioKind::kShear:
      spec.motion_path = {{0.0, Pose{rest, rot}},
                          {duration, Pose{rest + lateral * shift, rot}}};
      spec.force_profile = {{0.0, force_max}, {duration, force_max}};
      break;
    case ScenarioKind::kSweep:
      spec.motion_path = {{0.0, Pose{rest - lateral * shift, rot}},
                          {duration, Pose{rest + lateral * shift, rot}}};
      spec.force_profile = {{0.0, force_max}, {duration, force_max}};
      break;
  }
  return spec;
}

std::vector<TraceFrame> generate_scenario_trace(const ScenarioSpec& spec,
                                                const std::string& body_id,
                                                int n_frames) {
  if (n_frames < 1) throw InvalidArguments("scenario needs at least one frame");
  require_increasing(spec.force_profile, "force profile");
  require_increasing(spec.motion_path, "motion path");
  if (spec.motion_path.empty()) throw InvalidArguments("motion path is empty");

  const double t0 = spec.motion_path.front().first;
  const double t1 = spec.motion_path.back().first;
  std::vector<TraceFrame> frames;
  frames.reserve(n_frames);
  for (int k = 0; k < n_frames; ++k) {
    const double t =
        n_frames == 1 ? t0 : t0 + (t1 - t0) * k / static_cast<double>(n_frames - 1);
    TraceFrame frame;
    frame.t = t;
    frame.poses.push_back({body_id, lerp_path(spec.motion_path, t)});
    const double force = lerp_profile(spec.force_profile, t);
    if (force > 0.0) {
      frame.contacts.push_back({body_id, force, spec.contact_normal});
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace tacsim
