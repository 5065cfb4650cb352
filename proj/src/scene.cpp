// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/scene.hpp"

#include <cmath>

#include "tacsim/errors.hpp"
#include "tacsim/mesh_io.hpp"
#include "tacsim/primitives.hpp"

namespace tacsim {

Scene::Scene(const SensorConfig& config, const Pose& sensor_pose)
    : sensor_pose_(sensor_pose) {
  std::shared_ptr<const TriangleMesh> gel_mesh;
  if (config.gel.is_mesh_path()) {
    gel_mesh = std::make_shared<TriangleMesh>(
        load_mesh(std::get<std::string>(config.gel.mesh_source)));
  } else {
    const auto& slab = std::get<SlabSpec>(config.gel.mesh_source);
    gel_mesh = std::make_shared<TriangleMesh>(
        make_gel_slab(slab.width, slab.height, slab.curvature, slab.resolution));
  }
  gel_body_.id = "__gel";
  gel_body_.mesh = std::move(gel_mesh);
  gel_body_.pose = compose(sensor_pose, config.gel.pose);
  gel_body_.scale = 1.0;
}

void Scene::add_body(const std::string& id, std::shared_ptr<const TriangleMesh> mesh,
                     const Pose& initial_pose, double scale) {
  if (bodies_.count(id) != 0 || id == gel_body_.id) throw DuplicateId(id);
  if (!mesh) throw InvalidArguments("add_body: mesh is null");
  if (!(scale > 0.0)) throw InvalidArguments("add_body: scale must be > 0");
  Body body;
  body.id = id;
  body.mesh = std::move(mesh);
  body.pose = initial_pose;
  body.scale = scale;
  bodies_.emplace(id, std::move(body));
  ++geometry_uploads_;
}

void Scene::update_pose(const std::string& id, const Pose& pose) {
  auto it = bodies_.find(id);
  if (it == bodies_.end()) throw UnknownId(id);
  it->second.pose = pose;
}

void Scene::set_contacts(std::span<const ContactReport> reports) {
  for (const auto& report : reports) {
    if (bodies_.count(report.body_id) == 0) throw UnknownId(report.body_id);
  }
  contacts_.assign(reports.begin(), reports.end());
}

const Body& Scene::body(const std::string& id) const {
  auto it = bodies_.find(id);
  if (it == bodies_.end()) throw UnknownId(id);
  return it->second;
}

double deformation_offset(const ForceMapping& mapping, double force_n) {
  const auto& bps = mapping.breakpoints;
  if (bps.empty()) return 0.0;
  if (force_n <= bps.front().force_n) return 0.0;
  if (force_n >= bps.back().force_n) return bps.back().depth_m;
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (force_n <= bps[i].force_n) {
      const double t =
          (force_n - bps[i - 1].force_n) / (bps[i].force_n - bps[i - 1].force_n);
      return bps[i - 1].depth_m + t * (bps[i].depth_m - bps[i - 1].depth_m);
    }
  }
  return bps.back().depth_m;
}

DeformedScene apply_deformation(const Scene& scene, const SensorConfig& config) {
  DeformedScene out;
  out.sensor_pose = scene.sensor_pose();
  out.bodies.reserve(scene.bodies().size() + 1);

  const Body& gel = scene.gel_body();
  out.bodies.push_back({gel.id, gel.mesh, gel.pose, gel.scale, /*two_sided=*/true});

  for (const auto& [id, body] : scene.bodies()) {
    DeformedBody rb{id, body.mesh, body.pose, body.scale, /*two_sided=*/false};
    for (const auto& contact : scene.contacts()) {
      if (contact.body_id != id) continue;
      const double depth = deformation_offset(config.force_mapping,
                                              contact.normal_force);
      rb.pose.translation -= contact.contact_normal * depth;
    }
    out.bodies.push_back(std::move(rb));
  }
  return out;
}

}  // namespace tacsim
