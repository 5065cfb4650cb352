// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tacsim/camera.hpp"
#include "tacsim/image.hpp"
#include "tacsim/mesh.hpp"

namespace tacsim {

/// Depth grid plus the camera it came from; the intermediate form between
/// a depth image and the gel-replacement mesh.
struct Heightfield {
  int width = 0;
  int height = 0;
  std::vector<float> depths;  // row-major; invalid samples carry far_clip
  CameraSpec camera;

  bool valid_at(int x, int y) const {
    const float d = depths[y * width + x];
    return d >= camera.near_clip && d < camera.far_clip;
  }
};

/// Marks out-of-range samples invalid. Throws DimensionMismatch when the
/// image does not match the camera resolution.
Heightfield make_heightfield(const DepthImage& depth, const CameraSpec& camera);

/// Grid mesh in the camera frame: one vertex per valid pixel, unprojected
/// at the pixel center; two triangles per quad whose four corners are all
/// valid ((H-1)*(W-1)*2 faces when every pixel is valid). Normals face the
/// camera.
TriangleMesh heightfield_to_mesh(const Heightfield& field);

TriangleMesh depth_to_heightfield(const DepthImage& depth, const CameraSpec& camera);

}  // namespace tacsim
