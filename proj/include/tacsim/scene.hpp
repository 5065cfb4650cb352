// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tacsim/config.hpp"
#include "tacsim/mesh.hpp"
#include "tacsim/pose.hpp"

namespace tacsim {

struct Body {
  std::string id;
  std::shared_ptr<const TriangleMesh> mesh;
  Pose pose;  // world frame
  double scale = 1.0;
};

/// One contact from the physics side. The normal points out of the gel,
/// toward the contacting body.
struct ContactReport {
  std::string body_id;
  double normal_force = 0.0;        // newtons, >= 0
  Vec3 contact_normal{0, 0, 1};     // unit, world frame
};

/// Per-frame snapshot handed to the renderer. The gel is entry 0 and is
/// shaded two-sided; object poses already include the deformation offset.
struct DeformedBody {
  std::string id;
  std::shared_ptr<const TriangleMesh> mesh;
  Pose pose;
  double scale = 1.0;
  bool two_sided = false;
};

struct DeformedScene {
  std::vector<DeformedBody> bodies;
  Pose sensor_pose;
};

/// Mirror of the external physics world: bodies with poses, the gel
/// surface, and the current contact reports. Meshes enter the scene once,
/// at add_body time; pose updates never re-upload geometry.
class Scene {
 public:
  /// Creates the gel body from the sensor description. A gel mesh file is
  /// loaded here; a slab descriptor is tessellated here.
  Scene(const SensorConfig& config, const Pose& sensor_pose);

  void add_body(const std::string& id, std::shared_ptr<const TriangleMesh> mesh,
                const Pose& initial_pose, double scale = 1.0);

  /// O(1) in mesh size; throws UnknownId.
  void update_pose(const std::string& id, const Pose& pose);

  /// Replaces the contact list atomically: on UnknownId the previous list
  /// is kept.
  void set_contacts(std::span<const ContactReport> reports);

  bool has_body(const std::string& id) const { return bodies_.count(id) != 0; }
  const Body& body(const std::string& id) const;
  const std::map<std::string, Body>& bodies() const { return bodies_; }
  const std::vector<ContactReport>& contacts() const { return contacts_; }
  const Body& gel_body() const { return gel_body_; }
  const Pose& sensor_pose() const { return sensor_pose_; }

  /// Number of times mesh geometry entered the scene. Grows only with
  /// add_body calls, never with pose or contact updates.
  std::size_t geometry_upload_count() const { return geometry_uploads_; }

 private:
  std::map<std::string, Body> bodies_;
  Body gel_body_;
  std::vector<ContactReport> contacts_;
  Pose sensor_pose_;
  std::size_t geometry_uploads_ = 0;
};

/// Piece-wise linear interpolation of the breakpoint list: 0 below the
/// first force (sensing threshold), the last depth above the final force
/// (saturation), linear in between. Monotone non-decreasing and continuous.
double deformation_offset(const ForceMapping& mapping, double force_n);

/// Builds the render snapshot: each contacted body is shifted along
/// -contact_normal by the mapped depth (per report, summed) so it
/// penetrates the rigid gel surface; everything else is copied unchanged.
/// The Scene itself is not modified.
DeformedScene apply_deformation(const Scene& scene, const SensorConfig& config);

}  // namespace tacsim
