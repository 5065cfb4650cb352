// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/renderer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <unordered_map>

#include "tacsim/errors.hpp"
#include "tacsim/heightfield.hpp"

namespace tacsim {

namespace {

using Eigen::Matrix3d;
using Eigen::Vector2d;
using Eigen::Vector3f;

// Projected screen coordinates are snapped to this sub-pixel grid so that
// a vertex landing exactly on a pixel center (the heightfield case) yields
// exact-zero edge functions instead of sign noise.
constexpr double kSnap = 1048576.0;  // 2^20 per pixel
inline double snap(double v) { return std::nearbyint(v * kSnap) / kSnap; }

struct RigidTransform {
  Matrix3d rot = Matrix3d::Identity();  // includes uniform scale for points
  Matrix3d rot_dir = Matrix3d::Identity();  // pure rotation, for normals
  Vec3 t = Vec3::Zero();

  Vec3 point(const Vec3& p) const { return rot * p + t; }
  Vec3 dir(const Vec3& d) const { return rot_dir * d; }
};

RigidTransform world_from_model(const Pose& pose, double scale) {
  RigidTransform m;
  m.rot_dir = pose.rotation.toRotationMatrix();
  m.rot = m.rot_dir * scale;
  m.t = pose.translation;
  return m;
}

RigidTransform frame_from_world(const Pose& frame_world_pose) {
  RigidTransform m;
  m.rot_dir = frame_world_pose.rotation.toRotationMatrix().transpose();
  m.rot = m.rot_dir;
  m.t = -(m.rot_dir * frame_world_pose.translation);
  return m;
}

RigidTransform chain(const RigidTransform& outer, const RigidTransform& inner) {
  RigidTransform m;
  m.rot = outer.rot * inner.rot;
  m.rot_dir = outer.rot_dir * inner.rot_dir;
  m.t = outer.rot * inner.t + outer.t;
  return m;
}

// Conservative separating-plane test of a body's local bounds against the
// view frustum; never culls anything visible.
bool outside_frustum(const Aabb& local_box, const RigidTransform& cam_from_model,
                     const CameraIntrinsics& k) {
  const auto corners = local_box.corners();
  std::array<Vec3, 8> c;
  for (int i = 0; i < 8; ++i) c[i] = cam_from_model.point(corners[i]);
  const double tx = k.cx / k.fx;
  const double ty = k.cy / k.fy;
  const auto all = [&](auto&& pred) {
    for (const auto& p : c) {
      if (!pred(p)) return false;
    }
    return true;
  };
  if (all([&](const Vec3& p) { return p.z() < k.near_clip; })) return true;
  if (all([&](const Vec3& p) { return p.z() > k.far_clip; })) return true;
  if (all([&](const Vec3& p) { return p.x() - p.z() * tx > 0.0; })) return true;
  if (all([&](const Vec3& p) { return -p.x() - p.z() * tx > 0.0; })) return true;
  if (all([&](const Vec3& p) { return p.y() - p.z() * ty > 0.0; })) return true;
  if (all([&](const Vec3& p) { return -p.y() - p.z() * ty > 0.0; })) return true;
  return false;
}

struct ClipVert {
  Vec3 cam;    // camera-frame position
  Vec3 world;  // world-frame position (attribute passes only)
  Vec3 nrm;    // world-frame normal (attribute passes only)
};

ClipVert lerp(const ClipVert& a, const ClipVert& b, double t) {
  ClipVert out;
  out.cam = a.cam + t * (b.cam - a.cam);
  out.world = a.world + t * (b.world - a.world);
  out.nrm = a.nrm + t * (b.nrm - a.nrm);
  return out;
}

struct RasterTarget {
  int width = 0;
  int height = 0;
  double near_clip = 0.0;
  double far_clip = 0.0;
  float* zbuf = nullptr;
  Vector3f* position = nullptr;  // null in depth-only passes
  Vector3f* normal = nullptr;
  std::uint8_t* covered = nullptr;

  bool wants_attrs() const { return position != nullptr; }
};

void raster_triangle(const ClipVert& v0, const ClipVert& v1, const ClipVert& v2,
                     const CameraIntrinsics& k, RasterTarget& tgt, bool two_sided,
                     const Vec3& eye_world) {
  const ClipVert* v[3] = {&v0, &v1, &v2};
  Vector2d s[3];
  for (int i = 0; i < 3; ++i) {
    const Vec3& c = v[i]->cam;
    s[i] = {snap(k.fx * c.x() / c.z() + k.cx), snap(k.fy * c.y() / c.z() + k.cy)};
  }

  // Front faces of CCW-wound meshes have negative signed area in
  // y-down screen coordinates.
  double area = (s[1].x() - s[0].x()) * (s[2].y() - s[0].y()) -
                (s[1].y() - s[0].y()) * (s[2].x() - s[0].x());
  if (!two_sided && area >= 0.0) return;
  if (area < 0.0) {
    // Canonical positive orientation so the inside test is w_i >= 0.
    std::swap(v[1], v[2]);
    std::swap(s[1], s[2]);
    area = -area;
  }
  if (!(area > 1e-12)) return;

  const double min_x = std::min({s[0].x(), s[1].x(), s[2].x()});
  const double max_x = std::max({s[0].x(), s[1].x(), s[2].x()});
  const double min_y = std::min({s[0].y(), s[1].y(), s[2].y()});
  const double max_y = std::max({s[0].y(), s[1].y(), s[2].y()});
  const int x0 = std::max(0, static_cast<int>(std::ceil(min_x - 0.5)));
  const int x1 = std::min(tgt.width - 1, static_cast<int>(std::floor(max_x - 0.5)));
  const int y0 = std::max(0, static_cast<int>(std::ceil(min_y - 0.5)));
  const int y1 = std::min(tgt.height - 1, static_cast<int>(std::floor(max_y - 0.5)));
  if (x0 > x1 || y0 > y1) return;

  // Edge functions: w_i >= 0 inside, w_i is the weight of vertex i.
  const auto edge = [](const Vector2d& a, const Vector2d& b, double px, double py) {
    return (b.x() - a.x()) * (py - a.y()) - (b.y() - a.y()) * (px - a.x());
  };
  const double px0 = x0 + 0.5;
  const double py0 = y0 + 0.5;
  double w0_row = edge(s[1], s[2], px0, py0);
  double w1_row = edge(s[2], s[0], px0, py0);
  double w2_row = edge(s[0], s[1], px0, py0);
  const double w0_dx = -(s[2].y() - s[1].y());
  const double w1_dx = -(s[0].y() - s[2].y());
  const double w2_dx = -(s[1].y() - s[0].y());
  const double w0_dy = s[2].x() - s[1].x();
  const double w1_dy = s[0].x() - s[2].x();
  const double w2_dy = s[1].x() - s[0].x();

  const double inv_area = 1.0 / area;
  const double iz[3] = {1.0 / v[0]->cam.z(), 1.0 / v[1]->cam.z(),
                        1.0 / v[2]->cam.z()};
  Vec3 pw[3], nw[3];
  if (tgt.wants_attrs()) {
    for (int i = 0; i < 3; ++i) {
      pw[i] = v[i]->world * iz[i];
      nw[i] = v[i]->nrm * iz[i];
    }
  }

  for (int y = y0; y <= y1; ++y) {
    double w0 = w0_row, w1 = w1_row, w2 = w2_row;
    for (int x = x0; x <= x1; ++x, w0 += w0_dx, w1 += w1_dx, w2 += w2_dx) {
      if (w0 < 0.0 || w1 < 0.0 || w2 < 0.0) continue;
      const double l0 = w0 * inv_area;
      const double l1 = w1 * inv_area;
      const double l2 = w2 * inv_area;
      const double izp = l0 * iz[0] + l1 * iz[1] + l2 * iz[2];
      const double z = 1.0 / izp;
      if (z > tgt.far_clip) continue;
      const std::size_t idx = static_cast<std::size_t>(y) * tgt.width + x;
      if (!(z < static_cast<double>(tgt.zbuf[idx]))) continue;
      tgt.zbuf[idx] = static_cast<float>(std::max(z, tgt.near_clip));
      if (!tgt.wants_attrs()) continue;
      const Vec3 pos = (l0 * pw[0] + l1 * pw[1] + l2 * pw[2]) * z;
      Vec3 nrm = (l0 * nw[0] + l1 * nw[1] + l2 * nw[2]) * z;
      const double len = nrm.norm();
      nrm = len > 1e-20 ? Vec3(nrm / len) : Vec3(0, 0, 1);
      // Two-sided surfaces (the gel seen from inside) shade the side that
      // faces the viewer.
      if (two_sided && nrm.dot(eye_world - pos) < 0.0) nrm = -nrm;
      tgt.position[idx] = pos.cast<float>();
      tgt.normal[idx] = nrm.cast<float>();
      tgt.covered[idx] = 1;
    }
    w0_row += w0_dy;
    w1_row += w1_dy;
    w2_row += w2_dy;
  }
}

struct PassScratch {
  std::vector<Vec3> cam;
  std::vector<Vec3> world;
  std::vector<Vec3> nrm;
};

void raster_body(const TriangleMesh& mesh, const RigidTransform& model_to_world,
                 const RigidTransform& world_to_cam, const CameraIntrinsics& k,
                 RasterTarget& tgt, bool two_sided, const Vec3& eye_world,
                 PassScratch& scratch) {
  const RigidTransform cam_from_model = chain(world_to_cam, model_to_world);
  const bool attrs = tgt.wants_attrs();
  const std::size_t n = mesh.vertices.size();

  scratch.cam.resize(n);
  if (attrs) {
    scratch.world.resize(n);
    scratch.nrm.resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    scratch.cam[i] = cam_from_model.point(mesh.vertices[i]);
    if (attrs) {
      scratch.world[i] = model_to_world.point(mesh.vertices[i]);
      scratch.nrm[i] = model_to_world.dir(mesh.vertex_normals[i]);
    }
  }

  const double near = k.near_clip;
  ClipVert poly[4];
  ClipVert tri[3];
  for (const auto& f : mesh.faces) {
    const double z0 = scratch.cam[f[0]].z();
    const double z1 = scratch.cam[f[1]].z();
    const double z2 = scratch.cam[f[2]].z();
    if (z0 < near && z1 < near && z2 < near) continue;
    if (z0 > k.far_clip && z1 > k.far_clip && z2 > k.far_clip) continue;

    for (int i = 0; i < 3; ++i) {
      tri[i].cam = scratch.cam[f[i]];
      if (attrs) {
        tri[i].world = scratch.world[f[i]];
        tri[i].nrm = scratch.nrm[f[i]];
      }
    }

    if (z0 >= near && z1 >= near && z2 >= near) {
      raster_triangle(tri[0], tri[1], tri[2], k, tgt, two_sided, eye_world);
      continue;
    }

    // Sutherland-Hodgman clip against z = near; yields 3 or 4 vertices.
    int count = 0;
    for (int i = 0; i < 3; ++i) {
      const ClipVert& a = tri[i];
      const ClipVert& b = tri[(i + 1) % 3];
      const bool a_in = a.cam.z() >= near;
      const bool b_in = b.cam.z() >= near;
      if (a_in) poly[count++] = a;
      if (a_in != b_in) {
        const double t = (near - a.cam.z()) / (b.cam.z() - a.cam.z());
        poly[count++] = lerp(a, b, t);
        poly[count - 1].cam.z() = near;  // exact on the plane
      }
    }
    for (int i = 1; i + 1 < count; ++i) {
      raster_triangle(poly[0], poly[i], poly[i + 1], k, tgt, two_sided, eye_world);
    }
  }
}

Aabb local_bounds(const TriangleMesh& mesh) {
  return mesh_aabb(mesh, Pose::identity(), 1.0);
}

// Per-render cache of local mesh bounds so spectator bodies cost O(1).
using BoundsCache = std::unordered_map<const TriangleMesh*, Aabb>;

const Aabb& cached_bounds(BoundsCache& cache, const TriangleMesh& mesh) {
  auto it = cache.find(&mesh);
  if (it == cache.end()) it = cache.emplace(&mesh, local_bounds(mesh)).first;
  return it->second;
}

void run_rows(int height, int threads, const std::function<void(int, int)>& fn) {
  if (threads <= 1 || height < 2) {
    fn(0, height);
    return;
  }
  const int n = std::min(threads, height);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int t = 0; t < n; ++t) {
    const int y0 = height * t / n;
    const int y1 = height * (t + 1) / n;
    pool.emplace_back(fn, y0, y1);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

double ShadowMap::visibility(const Vec3& p_world) const {
  if (depth.empty()) return 1.0;
  const Vec3 pl = world_to_light.rotation * p_world + world_to_light.translation;
  if (pl.z() <= near_clip) return 1.0;  // beside or behind the light
  const double u = fx * pl.x() / pl.z() + cx;
  const double v = fy * pl.y() / pl.z() + cy;
  const int xi = static_cast<int>(std::floor(u));
  const int yi = static_cast<int>(std::floor(v));
  if (xi < 0 || yi < 0 || xi >= size || yi >= size) return 1.0;
  const double d = depth[static_cast<std::size_t>(yi) * size + xi];
  if (d >= far_clip) return 1.0;  // sentinel: no occluder on this texel
  return pl.z() <= d + bias ? 1.0 : 0.0;
}

Vec3 shade_phong(const Vec3& position, const Vec3& normal, const Vec3& view_dir,
                 const PhongMaterial& material, std::span<const LightSpec> lights,
                 std::span<const ShadowMap> shadow_maps) {
  Vec3 color = material.ambient;
  for (std::size_t i = 0; i < lights.size(); ++i) {
    const LightSpec& light = lights[i];
    const Vec3 to_light = light.pose.translation - position;
    const double dist = to_light.norm();
    if (dist < 1e-12) continue;
    const Vec3 l = to_light / dist;
    const double n_dot_l = normal.dot(l);
    if (n_dot_l <= 0.0) continue;

    double vis = 1.0;
    if (i < shadow_maps.size()) vis = shadow_maps[i].visibility(position);
    if (vis <= 0.0) continue;

    const double att = 1.0 / (light.attenuation.x() + light.attenuation.y() * dist +
                              light.attenuation.z() * dist * dist);
    const Vec3 reflect = 2.0 * n_dot_l * normal - l;
    const double r_dot_v = std::max(0.0, reflect.dot(view_dir));
    const double spec = r_dot_v > 0.0 ? std::pow(r_dot_v, material.shininess) : 0.0;
    const Vec3 term = material.diffuse * n_dot_l + material.specular * spec;
    color += vis * att * light.intensity * light.color.cwiseProduct(term);
  }
  return color.cwiseMax(0.0).cwiseMin(1.0);
}

Renderer::Renderer(SensorConfig config, RenderOptions options)
    : config_(std::move(config)), options_(options) {
  threads_ = options_.threads > 0
                 ? options_.threads
                 : std::max(1u, std::thread::hardware_concurrency());
}

DepthImage Renderer::rasterize_depth(const DeformedScene& scene,
                                     const CameraSpec& camera) const {
  const CameraIntrinsics k = CameraIntrinsics::from_spec(camera);
  DepthImage out = DepthImage::filled(camera.width, camera.height,
                                      static_cast<float>(camera.far_clip),
                                      static_cast<float>(camera.near_clip),
                                      static_cast<float>(camera.far_clip));
  RasterTarget tgt;
  tgt.width = out.width;
  tgt.height = out.height;
  tgt.near_clip = camera.near_clip;
  tgt.far_clip = camera.far_clip;
  tgt.zbuf = out.data.data();

  const Pose cam_world = compose(scene.sensor_pose, camera.pose);
  const RigidTransform world_to_cam = frame_from_world(cam_world);
  BoundsCache bounds;
  PassScratch scratch;
  for (const auto& body : scene.bodies) {
    const RigidTransform model = world_from_model(body.pose, body.scale);
    if (options_.enable_culling &&
        outside_frustum(cached_bounds(bounds, *body.mesh),
                        chain(world_to_cam, model), k)) {
      continue;
    }
    raster_body(*body.mesh, model, world_to_cam, k, tgt, body.two_sided,
                cam_world.translation, scratch);
  }
  return out;
}

ShadowMap Renderer::render_shadow_map(const DeformedScene& scene,
                                      const LightSpec& light, int resolution,
                                      int light_index) const {
  // Fit the frustum to the gel bounds (first two-sided body), or to the
  // whole scene when there is none.
  Aabb focus;
  bool found = false;
  for (const auto& body : scene.bodies) {
    if (!body.two_sided) continue;
    focus = mesh_aabb(*body.mesh, body.pose, body.scale);
    found = true;
    break;
  }
  if (!found) {
    bool any = false;
    for (const auto& body : scene.bodies) {
      const Aabb b = mesh_aabb(*body.mesh, body.pose, body.scale);
      if (!any) {
        focus = b;
        any = true;
      } else {
        focus.min = focus.min.cwiseMin(b.min);
        focus.max = focus.max.cwiseMax(b.max);
      }
    }
  }

  const Pose light_world = compose(scene.sensor_pose, light.pose);
  const Vec3 lp = light_world.translation;
  const Vec3 center = 0.5 * (focus.min + focus.max);
  Vec3 zdir = center - lp;
  if (zdir.norm() < 1e-12) {
    zdir = Vec3(0, 0, 1);
  } else {
    zdir.normalize();
  }
  const Vec3 up = std::abs(zdir.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(0, 1, 0);
  const Vec3 xdir = up.cross(zdir).normalized();
  const Vec3 ydir = zdir.cross(xdir);
  Matrix3d rot_lw;  // light-from-world
  rot_lw.row(0) = xdir.transpose();
  rot_lw.row(1) = ydir.transpose();
  rot_lw.row(2) = zdir.transpose();

  double max_tan = 0.05;
  double max_dist = 0.0;
  for (const Vec3& corner : focus.corners()) {
    const Vec3 v = corner - lp;
    const double along = v.dot(zdir);
    max_dist = std::max(max_dist, v.norm());
    if (along <= 1e-9) {
      max_tan = std::numeric_limits<double>::max();
      continue;
    }
    max_tan = std::max(max_tan, (v - along * zdir).norm() / along);
  }
  const double half_fov =
      std::min(1.45, std::atan(std::min(max_tan, 1e6)) * 1.15 + 1e-3);

  ShadowMap map;
  map.light_index = light_index;
  map.size = resolution;
  map.bias = config_.shadow_bias;
  map.world_to_light.rotation = Quat(rot_lw).normalized();
  map.world_to_light.translation = -(rot_lw * lp);
  map.fx = map.fy = 0.5 * resolution / std::tan(half_fov);
  map.cx = map.cy = 0.5 * resolution;
  // Occluders may sit anywhere between the light and the gel, so the near
  // plane stays tiny; depth is stored as linear float, so this costs no
  // precision.
  map.far_clip = std::max(2e-4, 2.0 * max_dist);
  map.near_clip = std::max(1e-5, 1e-3 * map.far_clip);
  map.depth.assign(static_cast<std::size_t>(resolution) * resolution,
                   static_cast<float>(map.far_clip));

  CameraIntrinsics k;
  k.fx = map.fx;
  k.fy = map.fy;
  k.cx = map.cx;
  k.cy = map.cy;
  k.width = k.height = resolution;
  k.near_clip = map.near_clip;
  k.far_clip = map.far_clip;

  RasterTarget tgt;
  tgt.width = tgt.height = resolution;
  tgt.near_clip = map.near_clip;
  tgt.far_clip = map.far_clip;
  tgt.zbuf = map.depth.data();

  const RigidTransform world_to_light = frame_from_world(
      Pose{lp, map.world_to_light.rotation.conjugate().normalized()});
  BoundsCache bounds;
  PassScratch scratch;
  for (const auto& body : scene.bodies) {
    if (body.two_sided) continue;  // the gel receives, never casts
    const RigidTransform model = world_from_model(body.pose, body.scale);
    if (options_.enable_culling &&
        outside_frustum(cached_bounds(bounds, *body.mesh),
                        chain(world_to_light, model), k)) {
      continue;
    }
    // Depth from the light wants the nearest front surface; back faces of
    // closed occluders can never be it.
    raster_body(*body.mesh, model, world_to_light, k, tgt, body.two_sided, lp,
                scratch);
  }
  return map;
}

std::vector<ShadowMap> Renderer::make_shadow_maps(const DeformedScene& scene) const {
  std::vector<ShadowMap> maps;
  maps.reserve(config_.lights.size());
  for (std::size_t i = 0; i < config_.lights.size(); ++i) {
    maps.push_back(render_shadow_map(scene, config_.lights[i],
                                     config_.shadow_map_size,
                                     static_cast<int>(i)));
  }
  return maps;
}

FrameBuffers Renderer::render_camera_buffers(const DeformedScene& scene,
                                             std::size_t camera_index) {
  if (camera_index >= config_.cameras.size()) {
    throw InvalidArguments("camera index out of range");
  }
  std::vector<ShadowMap> maps;
  if (config_.shadows_enabled) maps = make_shadow_maps(scene);
  const CameraSpec& camera = config_.cameras[camera_index];

  FrameBuffers fb;
  fb.width = camera.width;
  fb.height = camera.height;
  fb.near_clip = static_cast<float>(camera.near_clip);
  fb.far_clip = static_cast<float>(camera.far_clip);
  const std::size_t npx = static_cast<std::size_t>(fb.width) * fb.height;
  fb.depth.assign(npx, fb.far_clip);
  fb.position.assign(npx, Vector3f::Zero());
  fb.normal.assign(npx, Vector3f::Zero());
  fb.covered.assign(npx, 0);
  fb.linear_color.assign(npx, Vector3f::Zero());

  const CameraIntrinsics k = CameraIntrinsics::from_spec(camera);
  RasterTarget tgt;
  tgt.width = fb.width;
  tgt.height = fb.height;
  tgt.near_clip = camera.near_clip;
  tgt.far_clip = camera.far_clip;
  tgt.zbuf = fb.depth.data();
  tgt.position = fb.position.data();
  tgt.normal = fb.normal.data();
  tgt.covered = fb.covered.data();

  const Pose cam_world = compose(scene.sensor_pose, camera.pose);
  const RigidTransform world_to_cam = frame_from_world(cam_world);
  BoundsCache bounds;
  PassScratch scratch;
  for (const auto& body : scene.bodies) {
    const RigidTransform model = world_from_model(body.pose, body.scale);
    if (options_.enable_culling &&
        outside_frustum(cached_bounds(bounds, *body.mesh),
                        chain(world_to_cam, model), k)) {
      continue;
    }
    raster_body(*body.mesh, model, world_to_cam, k, tgt, body.two_sided,
                cam_world.translation, scratch);
  }

  // Lights move with the sensor.
  std::vector<LightSpec> world_lights = config_.lights;
  for (auto& light : world_lights) {
    light.pose = compose(scene.sensor_pose, light.pose);
  }

  const Vec3 eye = cam_world.translation;
  run_rows(fb.height, threads_, [&](int y_begin, int y_end) {
    for (int y = y_begin; y < y_end; ++y) {
      for (int x = 0; x < fb.width; ++x) {
        const std::size_t idx = fb.index(x, y);
        if (!fb.covered[idx]) continue;
        const Vec3 pos = fb.position[idx].cast<double>();
        const Vec3 nrm = fb.normal[idx].cast<double>();
        const Vec3 view = (eye - pos).normalized();
        const Vec3 color = shade_phong(pos, nrm, view, config_.gel.material,
                                       world_lights, maps);
        fb.linear_color[idx] = color.cast<float>();
      }
    }
  });
  return fb;
}

namespace {

RgbImage quantize_buffers(const FrameBuffers& fb) {
  RgbImage rgb = RgbImage::filled(fb.width, fb.height, 0);
  for (std::size_t i = 0; i < fb.linear_color.size(); ++i) {
    rgb.data[i * 3 + 0] = quantize_channel(fb.linear_color[i].x());
    rgb.data[i * 3 + 1] = quantize_channel(fb.linear_color[i].y());
    rgb.data[i * 3 + 2] = quantize_channel(fb.linear_color[i].z());
  }
  return rgb;
}

}  // namespace

RenderOutput Renderer::render(const DeformedScene& scene, std::uint64_t noise_seed) {
  RenderOutput out;
  out.images.reserve(config_.cameras.size());
  for (std::size_t i = 0; i < config_.cameras.size(); ++i) {
    FrameBuffers fb = render_camera_buffers(scene, i);
    RgbImage rgb = quantize_buffers(fb);
    if (config_.blur_kernel > 1) {
      rgb = gaussian_blur(rgb, config_.blur_kernel,
                          blur_sigma_for_kernel(config_.blur_kernel));
    }
    if (config_.noise_std > 0.0) {
      rgb = add_noise(rgb, config_.noise_std, noise_seed + i);
    }
    DepthImage depth;
    depth.width = fb.width;
    depth.height = fb.height;
    depth.near_clip = fb.near_clip;
    depth.far_clip = fb.far_clip;
    depth.data = fb.depth;
    out.images.push_back(
        {config_.cameras[i].name, std::move(rgb), std::move(depth)});
  }
  return out;
}

RgbImage Renderer::render_from_depth(const DepthImage& depth,
                                     std::size_t camera_index,
                                     std::uint64_t noise_seed) {
  if (camera_index >= config_.cameras.size()) {
    throw InvalidArguments("camera index out of range");
  }
  const CameraSpec& camera = config_.cameras[camera_index];
  if (depth.width != camera.width || depth.height != camera.height) {
    throw DimensionMismatch("depth image does not match the camera resolution");
  }
  auto mesh = std::make_shared<TriangleMesh>(depth_to_heightfield(depth, camera));

  // The heightfield replaces the gel: same camera/light rig, sensor at the
  // origin, surface placed where the camera saw it.
  DeformedScene scene;
  scene.sensor_pose = Pose::identity();
  scene.bodies.push_back(
      {"__heightfield", std::move(mesh), camera.pose, 1.0, /*two_sided=*/true});

  FrameBuffers fb = render_camera_buffers(scene, camera_index);
  RgbImage rgb = quantize_buffers(fb);
  if (config_.blur_kernel > 1) {
    rgb = gaussian_blur(rgb, config_.blur_kernel,
                        blur_sigma_for_kernel(config_.blur_kernel));
  }
  if (config_.noise_std > 0.0) {
    rgb = add_noise(rgb, config_.noise_std, noise_seed + camera_index);
  }
  return rgb;
}

}  // namespace tacsim
