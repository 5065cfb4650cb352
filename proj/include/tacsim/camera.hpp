// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "tacsim/config.hpp"
#include "tacsim/pose.hpp"

namespace tacsim {

/// Pinhole model for a camera looking down +z with x right and y down.
/// Pixel (i, j) covers [i, i+1) x [j, j+1); its center is (i+0.5, j+0.5)
/// in continuous image coordinates.
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
  double near_clip = 0.0;
  double far_clip = 0.0;

  static CameraIntrinsics from_spec(const CameraSpec& spec) {
    CameraIntrinsics k;
    k.width = spec.width;
    k.height = spec.height;
    k.near_clip = spec.near_clip;
    k.far_clip = spec.far_clip;
    k.fy = 0.5 * spec.height / std::tan(0.5 * spec.fov_y_rad());
    k.fx = k.fy;  // square pixels
    k.cx = 0.5 * spec.width;
    k.cy = 0.5 * spec.height;
    return k;
  }

  /// Camera-frame point of the continuous image coordinate (u, v) at depth z.
  Vec3 unproject(double u, double v, double z) const {
    return Vec3((u - cx) / fx * z, (v - cy) / fy * z, z);
  }

  /// Continuous image coordinates of a camera-frame point (z > 0).
  Eigen::Vector2d project(const Vec3& p_cam) const {
    return {fx * p_cam.x() / p_cam.z() + cx, fy * p_cam.y() / p_cam.z() + cy};
  }

  /// Direction (unit z component) of the ray through pixel center (i, j).
  Vec3 pixel_ray(int i, int j) const {
    return Vec3((i + 0.5 - cx) / fx, (j + 0.5 - cy) / fy, 1.0);
  }
};

}  // namespace tacsim
