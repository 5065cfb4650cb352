// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "tacsim/mesh.hpp"

namespace tacsim {

/// Loads an .obj (ASCII) or .stl (binary) file, dispatching on extension.
/// Vertex normals are taken from the file when every face corner carries
/// one, otherwise computed by area-weighted face-normal averaging.
/// Throws MissingFile or MalformedMesh.
TriangleMesh load_mesh(const std::string& path);

TriangleMesh load_obj(const std::string& path);
TriangleMesh load_stl(const std::string& path);

/// Writes positions, normals, and faces as an ASCII OBJ.
void save_obj(const TriangleMesh& mesh, const std::string& path);

}  // namespace tacsim
