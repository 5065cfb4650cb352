// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/mesh_io.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "tacsim/errors.hpp"

namespace tacsim {

namespace {

std::string lower_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// "3", "3/5", "3//7", "3/5/7" -> vertex and optional normal index (1-based).
void parse_face_corner(const std::string& token, long& v_idx, long& n_idx) {
  v_idx = 0;
  n_idx = 0;
  const auto slash1 = token.find('/');
  if (slash1 == std::string::npos) {
    v_idx = std::stol(token);
    return;
  }
  v_idx = std::stol(token.substr(0, slash1));
  const auto slash2 = token.find('/', slash1 + 1);
  if (slash2 == std::string::npos) return;  // v/t, no normal
  const std::string n = token.substr(slash2 + 1);
  if (!n.empty()) n_idx = std::stol(n);
}

}  // namespace

TriangleMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);

  std::vector<Vec3> positions;
  std::vector<Vec3> file_normals;
  // Per corner: position index plus normal index (or -1).
  struct Corner {
    std::uint32_t v;
    long n;
  };
  std::vector<std::array<Corner, 3>> face_corners;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw MalformedMesh("bad vertex record at line " + std::to_string(line_no));
      }
      positions.emplace_back(x, y, z);
    } else if (tag == "vn") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw MalformedMesh("bad normal record at line " + std::to_string(line_no));
      }
      file_normals.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<Corner> poly;
      std::string token;
      while (ls >> token) {
        long v_idx = 0, n_idx = 0;
        try {
          parse_face_corner(token, v_idx, n_idx);
        } catch (const std::exception&) {
          throw MalformedMesh("bad face token '" + token + "' at line " +
                              std::to_string(line_no));
        }
        if (v_idx <= 0 || static_cast<std::size_t>(v_idx) > positions.size()) {
          throw MalformedMesh("face vertex index out of range at line " +
                              std::to_string(line_no));
        }
        if (n_idx < 0 || static_cast<std::size_t>(n_idx) > file_normals.size()) {
          throw MalformedMesh("face normal index out of range at line " +
                              std::to_string(line_no));
        }
        poly.push_back({static_cast<std::uint32_t>(v_idx - 1), n_idx - 1});
      }
      if (poly.size() < 3) {
        throw MalformedMesh("face with fewer than 3 corners at line " +
                            std::to_string(line_no));
      }
      for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        face_corners.push_back({poly[0], poly[i], poly[i + 1]});
      }
    }
    // Other records (vt, o, g, s, usemtl, comments) are ignored.
  }

  TriangleMesh mesh;
  mesh.vertices = std::move(positions);
  mesh.faces.reserve(face_corners.size());
  bool all_corners_have_normals = !face_corners.empty();
  for (const auto& fc : face_corners) {
    mesh.faces.push_back({fc[0].v, fc[1].v, fc[2].v});
    for (const auto& c : fc) {
      if (c.n < 0) all_corners_have_normals = false;
    }
  }

  if (all_corners_have_normals) {
    // OBJ normals are per corner; fold them into per-vertex averages.
    mesh.vertex_normals.assign(mesh.vertices.size(), Vec3::Zero());
    for (const auto& fc : face_corners) {
      for (const auto& c : fc) {
        mesh.vertex_normals[c.v] += file_normals[static_cast<std::size_t>(c.n)];
      }
    }
    for (auto& vn : mesh.vertex_normals) {
      const double len = vn.norm();
      if (len > 1e-20) {
        vn /= len;
      } else {
        vn = Vec3(0, 0, 1);
      }
    }
  } else {
    compute_vertex_normals(mesh);
  }
  validate_mesh(mesh);
  return mesh;
}

TriangleMesh load_stl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path);

  char header[80];
  in.read(header, 80);
  if (!in) throw MalformedMesh("STL shorter than its 80-byte header");

  std::uint32_t tri_count = 0;
  in.read(reinterpret_cast<char*>(&tri_count), 4);
  if (!in) throw MalformedMesh("STL missing triangle count");

  TriangleMesh mesh;
  mesh.faces.reserve(tri_count);
  // Welds exactly-equal positions so vertex normals average across faces.
  std::unordered_map<std::string, std::uint32_t> vertex_index;
  auto intern = [&](const float xyz[3]) {
    std::string key(reinterpret_cast<const char*>(xyz), 12);
    auto it = vertex_index.find(key);
    if (it != vertex_index.end()) return it->second;
    const auto idx = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.emplace_back(xyz[0], xyz[1], xyz[2]);
    vertex_index.emplace(std::move(key), idx);
    return idx;
  };

  for (std::uint32_t t = 0; t < tri_count; ++t) {
    float record[12];  // normal + 3 vertices
    std::uint16_t attr = 0;
    in.read(reinterpret_cast<char*>(record), 48);
    in.read(reinterpret_cast<char*>(&attr), 2);
    if (!in) throw MalformedMesh("STL truncated at triangle " + std::to_string(t));
    const std::uint32_t a = intern(&record[3]);
    const std::uint32_t b = intern(&record[6]);
    const std::uint32_t c = intern(&record[9]);
    if (a == b || b == c || a == c) {
      throw MalformedMesh("STL contains a degenerate triangle");
    }
    mesh.faces.push_back({a, b, c});
  }
  compute_vertex_normals(mesh);
  validate_mesh(mesh);
  return mesh;
}

TriangleMesh load_mesh(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingFile(path);
  const std::string ext = lower_extension(path);
  if (ext == ".obj") return load_obj(path);
  if (ext == ".stl") return load_stl(path);
  throw MalformedMesh("unsupported mesh format: " + path);
}

void save_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.precision(12);
  for (const auto& v : mesh.vertices) {
    out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  }
  for (const auto& n : mesh.vertex_normals) {
    out << "vn " << n.x() << ' ' << n.y() << ' ' << n.z() << '\n';
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << "//" << f[0] + 1 << ' ' << f[1] + 1 << "//"
        << f[1] + 1 << ' ' << f[2] + 1 << "//" << f[2] + 1 << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tacsim
