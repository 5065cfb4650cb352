// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace tacsim {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;  // Hamilton convention, stored (w,x,y,z) in files

/// Rigid transform: p_world = rotation * p_local + translation.
/// Right-handed frames throughout; the quaternion is kept unit-length.
struct Pose {
  Vec3 translation{0.0, 0.0, 0.0};
  Quat rotation{1.0, 0.0, 0.0, 0.0};

  static Pose identity() { return Pose{}; }

  static Pose from_translation(const Vec3& t) { return Pose{t, Quat::Identity()}; }

  /// Axis does not need to be normalized; angle in radians.
  static Pose from_axis_angle(const Vec3& axis, double angle,
                              const Vec3& t = Vec3::Zero()) {
    return Pose{t, Quat(Eigen::AngleAxisd(angle, axis.normalized()))};
  }
};

/// a then b applied to local points: result(p) = a(b(p)).
Pose compose(const Pose& a, const Pose& b);

Pose inverse(const Pose& p);

Vec3 transform_point(const Pose& pose, const Vec3& p);

/// Rotation only, for directions and normals.
Vec3 rotate(const Pose& pose, const Vec3& v);

bool approx_equal(const Pose& a, const Pose& b, double tol = 1e-9);

}  // namespace tacsim
