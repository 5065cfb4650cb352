// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/primitives.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "tacsim/errors.hpp"

namespace tacsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

TriangleMesh make_icosphere(double radius, int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  std::vector<std::array<std::uint32_t, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& v : verts) v.normalize();

  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const auto idx = static_cast<std::uint32_t>(verts.size());
      verts.push_back(((verts[a] + verts[b]) * 0.5).normalized());
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<std::uint32_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const std::uint32_t ab = mid(f[0], f[1]);
      const std::uint32_t bc = mid(f[1], f[2]);
      const std::uint32_t ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces.swap(next);
  }

  TriangleMesh mesh;
  mesh.vertices.reserve(verts.size());
  for (const auto& v : verts) mesh.vertices.push_back(v * radius);
  mesh.faces = std::move(faces);
  // On a sphere, the exact normal is the radial direction.
  mesh.vertex_normals.reserve(verts.size());
  for (const auto& v : verts) mesh.vertex_normals.push_back(v);
  return mesh;
}

TriangleMesh make_uv_sphere(double radius, int slices, int stacks) {
  if (slices < 3 || stacks < 3) throw InvalidArguments("uv sphere too coarse");
  TriangleMesh mesh;
  // Poles first, then (stacks - 1) interior rings of `slices` vertices.
  mesh.vertices.emplace_back(0, 0, radius);
  for (int s = 1; s < stacks; ++s) {
    const double phi = kPi * s / stacks;
    for (int k = 0; k < slices; ++k) {
      const double theta = 2.0 * kPi * k / slices;
      mesh.vertices.emplace_back(radius * std::sin(phi) * std::cos(theta),
                                 radius * std::sin(phi) * std::sin(theta),
                                 radius * std::cos(phi));
    }
  }
  mesh.vertices.emplace_back(0, 0, -radius);
  const std::uint32_t south = static_cast<std::uint32_t>(mesh.vertices.size() - 1);

  auto ring = [&](int s, int k) {
    return static_cast<std::uint32_t>(1 + (s - 1) * slices + (k % slices));
  };
  for (int k = 0; k < slices; ++k) {
    mesh.faces.push_back({0, ring(1, k), ring(1, k + 1)});
  }
  for (int s = 1; s < stacks - 1; ++s) {
    for (int k = 0; k < slices; ++k) {
      mesh.faces.push_back({ring(s, k), ring(s + 1, k), ring(s + 1, k + 1)});
      mesh.faces.push_back({ring(s, k), ring(s + 1, k + 1), ring(s, k + 1)});
    }
  }
  for (int k = 0; k < slices; ++k) {
    mesh.faces.push_back({south, ring(stacks - 1, k + 1), ring(stacks - 1, k)});
  }

  mesh.vertex_normals.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) mesh.vertex_normals.push_back(v.normalized());
  return mesh;
}

TriangleMesh make_box(const Vec3& extents) {
  const Vec3 h = extents * 0.5;
  TriangleMesh mesh;
  mesh.vertices = {{-h.x(), -h.y(), -h.z()}, {h.x(), -h.y(), -h.z()},
                   {h.x(), h.y(), -h.z()},   {-h.x(), h.y(), -h.z()},
                   {-h.x(), -h.y(), h.z()},  {h.x(), -h.y(), h.z()},
                   {h.x(), h.y(), h.z()},    {-h.x(), h.y(), h.z()}};
  mesh.faces = {{0, 2, 1}, {0, 3, 2},   // -z
                {4, 5, 6}, {4, 6, 7},   // +z
                {0, 1, 5}, {0, 5, 4},   // -y
                {2, 3, 7}, {2, 7, 6},   // +y
                {1, 2, 6}, {1, 6, 5},   // +x
                {3, 0, 4}, {3, 4, 7}};  // -x
  compute_vertex_normals(mesh);
  return mesh;
}

TriangleMesh make_cylinder(double radius, double length, int segments) {
  if (segments < 3) throw InvalidArguments("cylinder needs >= 3 segments");
  TriangleMesh mesh;
  const double hz = length * 0.5;
  for (int k = 0; k < segments; ++k) {
    const double theta = 2.0 * kPi * k / segments;
    const double x = radius * std::cos(theta);
    const double y = radius * std::sin(theta);
    mesh.vertices.emplace_back(x, y, -hz);
    mesh.vertices.emplace_back(x, y, hz);
  }
  const auto bottom_center = static_cast<std::uint32_t>(mesh.vertices.size());
  mesh.vertices.emplace_back(0, 0, -hz);
  const auto top_center = static_cast<std::uint32_t>(mesh.vertices.size());
  mesh.vertices.emplace_back(0, 0, hz);

  for (int k = 0; k < segments; ++k) {
    const auto b0 = static_cast<std::uint32_t>(2 * k);
    const auto t0 = b0 + 1;
    const auto b1 = static_cast<std::uint32_t>(2 * ((k + 1) % segments));
    const auto t1 = b1 + 1;
    mesh.faces.push_back({b0, b1, t1});
    mesh.faces.push_back({b0, t1, t0});
    mesh.faces.push_back({bottom_center, b1, b0});
    mesh.faces.push_back({top_center, t0, t1});
  }
  compute_vertex_normals(mesh);
  return mesh;
}

TriangleMesh subdivide_midpoint(const TriangleMesh& mesh) {
  TriangleMesh out;
  out.vertices = mesh.vertices;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
  auto mid = [&](std::uint32_t a, std::uint32_t b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const auto idx = static_cast<std::uint32_t>(out.vertices.size());
    out.vertices.push_back(0.5 * (out.vertices[a] + out.vertices[b]));
    midpoint.emplace(key, idx);
    return idx;
  };
  out.faces.reserve(mesh.faces.size() * 4);
  for (const auto& f : mesh.faces) {
    const std::uint32_t ab = mid(f[0], f[1]);
    const std::uint32_t bc = mid(f[1], f[2]);
    const std::uint32_t ca = mid(f[2], f[0]);
    out.faces.push_back({f[0], ab, ca});
    out.faces.push_back({f[1], bc, ab});
    out.faces.push_back({f[2], ca, bc});
    out.faces.push_back({ab, bc, ca});
  }
  compute_vertex_normals(out);
  return out;
}

TriangleMesh make_gel_slab(double width, double height, double curvature,
                           int resolution) {
  if (resolution < 1) throw InvalidArguments("gel slab resolution must be >= 1");
  const int n = resolution;
  TriangleMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double u = static_cast<double>(i) / n - 0.5;
      const double v = static_cast<double>(j) / n - 0.5;
      const double x = u * width;
      const double y = v * height;
      // Paraboloid dome: apex `curvature` at the center, 0 at the rim of
      // the inscribed ellipse, clamped outside it.
      double z = 0.0;
      if (curvature != 0.0) {
        const double r2 = 4.0 * (u * u + v * v);
        z = curvature * std::max(0.0, 1.0 - r2);
      }
      mesh.vertices.emplace_back(x, y, z);
    }
  }
  auto at = [&](int i, int j) { return static_cast<std::uint32_t>(j * (n + 1) + i); };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // Winding chosen so computed normals face -z (the camera side).
      mesh.faces.push_back({at(i, j), at(i + 1, j + 1), at(i + 1, j)});
      mesh.faces.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
    }
  }
  compute_vertex_normals(mesh);
  return mesh;
}

}  // namespace tacsim
