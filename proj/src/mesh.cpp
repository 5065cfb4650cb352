// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/mesh.hpp"

#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "tacsim/errors.hpp"

namespace tacsim {

void validate_mesh(const TriangleMesh& mesh) {
  const std::size_t n = mesh.vertices.size();
  if (mesh.vertex_normals.size() != n) {
    throw MalformedMesh("vertex normal count does not match vertex count");
  }
  for (const auto& f : mesh.faces) {
    for (std::uint32_t idx : f) {
      if (idx >= n) throw MalformedMesh("face index out of range");
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      throw MalformedMesh("degenerate face (repeated index)");
    }
  }
  for (const auto& vn : mesh.vertex_normals) {
    if (std::abs(vn.norm() - 1.0) > 1e-6) {
      throw MalformedMesh("vertex normal is not unit length");
    }
  }
}

void compute_vertex_normals(TriangleMesh& mesh) {
  mesh.vertex_normals.assign(mesh.vertices.size(), Vec3::Zero());
  for (const auto& f : mesh.faces) {
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& c = mesh.vertices[f[2]];
    // Cross product magnitude is twice the face area, so summing the raw
    // cross products is the area weighting.
    const Vec3 fn = (b - a).cross(c - a);
    mesh.vertex_normals[f[0]] += fn;
    mesh.vertex_normals[f[1]] += fn;
    mesh.vertex_normals[f[2]] += fn;
  }
  for (auto& vn : mesh.vertex_normals) {
    const double len = vn.norm();
    if (len > 1e-20) {
      vn /= len;
    } else {
      vn = Vec3(0, 0, 1);
    }
  }
}

std::array<Vec3, 8> Aabb::corners() const {
  return {Vec3(min.x(), min.y(), min.z()), Vec3(max.x(), min.y(), min.z()),
          Vec3(min.x(), max.y(), min.z()), Vec3(max.x(), max.y(), min.z()),
          Vec3(min.x(), min.y(), max.z()), Vec3(max.x(), min.y(), max.z()),
          Vec3(min.x(), max.y(), max.z()), Vec3(max.x(), max.y(), max.z())};
}

Aabb mesh_aabb(const TriangleMesh& mesh, const Pose& pose, double scale) {
  Aabb box;
  box.min = Vec3::Constant(std::numeric_limits<double>::max());
  box.max = Vec3::Constant(std::numeric_limits<double>::lowest());
  for (const auto& v : mesh.vertices) {
    const Vec3 p = transform_point(pose, scale * v);
    box.min = box.min.cwiseMin(p);
    box.max = box.max.cwiseMax(p);
  }
  if (mesh.vertices.empty()) {
    box.min = box.max = Vec3::Zero();
  }
  return box;
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::uint32_t>> neighbors;
  std::vector<bool> boundary;
};

Adjacency build_adjacency(const TriangleMesh& mesh) {
  Adjacency adj;
  adj.neighbors.resize(mesh.vertices.size());
  adj.boundary.assign(mesh.vertices.size(), false);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_count;
  auto add_edge = [&](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    ++edge_count[{a, b}];
  };
  for (const auto& f : mesh.faces) {
    add_edge(f[0], f[1]);
    add_edge(f[1], f[2]);
    add_edge(f[2], f[0]);
  }
  for (const auto& [edge, count] : edge_count) {
    adj.neighbors[edge.first].push_back(edge.second);
    adj.neighbors[edge.second].push_back(edge.first);
    if (count == 1) {
      adj.boundary[edge.first] = true;
      adj.boundary[edge.second] = true;
    }
  }
  return adj;
}

}  // namespace

TriangleMesh smooth_mesh(const TriangleMesh& mesh, int iterations, double lambda) {
  if (lambda <= 0.0 || lambda > 1.0) {
    throw InvalidArguments("smoothing lambda must be in (0, 1]");
  }
  TriangleMesh out = mesh;
  if (iterations <= 0) return out;

  const Adjacency adj = build_adjacency(mesh);
  for (std::size_t v = 0; v < out.vertices.size(); ++v) {
    if (adj.neighbors[v].empty()) {
      throw MalformedMesh("vertex without neighbors cannot be smoothed");
    }
  }

  std::vector<Vec3> next(out.vertices.size());
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t v = 0; v < out.vertices.size(); ++v) {
      if (adj.boundary[v]) {
        next[v] = out.vertices[v];
        continue;
      }
      Vec3 centroid = Vec3::Zero();
      for (std::uint32_t n : adj.neighbors[v]) centroid += out.vertices[n];
      centroid /= static_cast<double>(adj.neighbors[v].size());
      next[v] = out.vertices[v] + lambda * (centroid - out.vertices[v]);
    }
    out.vertices.swap(next);
  }
  compute_vertex_normals(out);
  return out;
}

double laplacian_energy(const TriangleMesh& mesh) {
  const Adjacency adj = build_adjacency(mesh);
  double energy = 0.0;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    if (adj.neighbors[v].empty()) continue;
    Vec3 centroid = Vec3::Zero();
    for (std::uint32_t n : adj.neighbors[v]) centroid += mesh.vertices[n];
    centroid /= static_cast<double>(adj.neighbors[v].size());
    energy += (mesh.vertices[v] - centroid).squaredNorm();
  }
  return energy;
}

}  // namespace tacsim
