// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/pose.hpp"

namespace tacsim {

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = (a.rotation * b.rotation).normalized();
  out.translation = a.translation + a.rotation * b.translation;
  return out;
}

Pose inverse(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.conjugate().normalized();
  out.translation = -(out.rotation * p.translation);
  return out;
}

Vec3 transform_point(const Pose& pose, const Vec3& p) {
  return pose.rotation * p + pose.translation;
}

Vec3 rotate(const Pose& pose, const Vec3& v) { return pose.rotation * v; }

bool approx_equal(const Pose& a, const Pose& b, double tol) {
  if ((a.translation - b.translation).norm() > tol) return false;
  // q and -q encode the same rotation.
  const double dot = std::abs(a.rotation.dot(b.rotation));
  return std::abs(dot - 1.0) <= tol;
}

}  // namespace tacsim
