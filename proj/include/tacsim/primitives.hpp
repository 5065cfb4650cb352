// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tacsim/mesh.hpp"

namespace tacsim {

/// Icosahedron subdivided `subdivisions` times, 20 * 4^n faces, outward
/// CCW winding. Vertices lie on the sphere of the given radius.
TriangleMesh make_icosphere(double radius, int subdivisions);

/// Latitude/longitude sphere: slices * (stacks - 2) * 2 + 2 * slices faces.
/// slices=100, stacks=61 gives exactly 12,000 faces, the reference body
/// size for the benchmark scenes.
TriangleMesh make_uv_sphere(double radius, int slices, int stacks);

/// Axis-aligned box centered at the origin, 12 faces, outward winding.
TriangleMesh make_box(const Vec3& extents);

/// Cylinder along +z, centered at the origin, with end caps.
TriangleMesh make_cylinder(double radius, double length, int segments = 48);

/// Midpoint subdivision: every triangle becomes four, shared edge
/// midpoints are welded. Normals recomputed.
TriangleMesh subdivide_midpoint(const TriangleMesh& mesh);

/// Gel surface as a (resolution x resolution) grid over
/// [-width/2, width/2] x [-height/2, height/2] in the gel frame.
/// curvature > 0 bulges the sheet toward +z (the outside of the sensor)
/// with a paraboloid profile of that apex height. Normals face -z, toward
/// the camera side.
TriangleMesh make_gel_slab(double width, double height, double curvature,
                           int resolution = 32);

}  // namespace tacsim
