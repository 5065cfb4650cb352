// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/heightfield.hpp"

#include "tacsim/errors.hpp"

namespace tacsim {

Heightfield make_heightfield(const DepthImage& depth, const CameraSpec& camera) {
  if (depth.width != camera.width || depth.height != camera.height) {
    throw DimensionMismatch("depth image does not match the camera resolution");
  }
  Heightfield field;
  field.width = depth.width;
  field.height = depth.height;
  field.camera = camera;
  field.depths = depth.data;
  for (auto& d : field.depths) {
    if (!(d >= camera.near_clip) || !(d < camera.far_clip) || !std::isfinite(d)) {
      d = static_cast<float>(camera.far_clip);
    }
  }
  return field;
}

TriangleMesh heightfield_to_mesh(const Heightfield& field) {
  const CameraIntrinsics k = CameraIntrinsics::from_spec(field.camera);
  TriangleMesh mesh;
  std::vector<std::int64_t> index(
      static_cast<std::size_t>(field.width) * field.height, -1);
  for (int y = 0; y < field.height; ++y) {
    for (int x = 0; x < field.width; ++x) {
      if (!field.valid_at(x, y)) continue;
      index[y * field.width + x] = static_cast<std::int64_t>(mesh.vertices.size());
      const double z = field.depths[y * field.width + x];
      mesh.vertices.push_back(k.unproject(x + 0.5, y + 0.5, z));
    }
  }
  auto at = [&](int x, int y) { return index[y * field.width + x]; };
  for (int y = 0; y + 1 < field.height; ++y) {
    for (int x = 0; x + 1 < field.width; ++x) {
      const std::int64_t a = at(x, y);
      const std::int64_t b = at(x + 1, y);
      const std::int64_t c = at(x + 1, y + 1);
      const std::int64_t d = at(x, y + 1);
      if (a < 0 || b < 0 || c < 0 || d < 0) continue;
      // Winding makes the computed normals face the camera (-z).
      mesh.faces.push_back({static_cast<std::uint32_t>(a),
                            static_cast<std::uint32_t>(c),
                            static_cast<std::uint32_t>(b)});
      mesh.faces.push_back({static_cast<std::uint32_t>(a),
                            static_cast<std::uint32_t>(d),
                            static_cast<std::uint32_t>(c)});
    }
  }
  compute_vertex_normals(mesh);
  return mesh;
}

TriangleMesh depth_to_heightfield(const DepthImage& depth, const CameraSpec& camera) {
  return heightfield_to_mesh(make_heightfield(depth, camera));
}

}  // namespace tacsim
