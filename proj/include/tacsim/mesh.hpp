// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tacsim/pose.hpp"

namespace tacsim {

/// Indexed triangle geometry. Vertex normals are unit length; faces never
/// repeat an index and always reference existing vertices.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> vertex_normals;
  std::vector<std::array<std::uint32_t, 3>> faces;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t face_count() const { return faces.size(); }
};

/// Throws MalformedMesh when an index is out of range, a face repeats an
/// index, or a stored normal is not unit length within 1e-6.
void validate_mesh(const TriangleMesh& mesh);

/// Area-weighted average of incident face normals, normalized per vertex.
/// Vertices referenced by no face get the +z fallback normal.
void compute_vertex_normals(TriangleMesh& mesh);

struct Aabb {
  Vec3 min{0, 0, 0};
  Vec3 max{0, 0, 0};

  bool contains(const Vec3& p, double tol = 0.0) const {
    return p.x() >= min.x() - tol && p.x() <= max.x() + tol &&
           p.y() >= min.y() - tol && p.y() <= max.y() + tol &&
           p.z() >= min.z() - tol && p.z() <= max.z() + tol;
  }
  std::array<Vec3, 8> corners() const;
};

/// Box containing every vertex after `pose` (and optional uniform scale).
Aabb mesh_aabb(const TriangleMesh& mesh, const Pose& pose, double scale = 1.0);

/// Uniform (umbrella) Laplacian smoothing: each free vertex moves by
/// `lambda` toward the centroid of its one-ring neighbors, `iterations`
/// times. Vertices on boundary edges stay pinned so open meshes keep their
/// silhouette. Topology is unchanged; normals are recomputed.
/// Throws MalformedMesh when some vertex has no neighbor.
TriangleMesh smooth_mesh(const TriangleMesh& mesh, int iterations, double lambda);

/// Sum over vertices of |v - centroid(one-ring)|^2; the quantity
/// smooth_mesh drives down.
double laplacian_energy(const TriangleMesh& mesh);

}  // namespace tacsim
