// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tacsim/defaults.hpp"
#include "tacsim/errors.hpp"
#include "tacsim/image_io.hpp"
#include "tacsim/primitives.hpp"
#include "tacsim/renderer.hpp"
#include "tacsim/scene.hpp"

using namespace tacsim;
using tacsim::testing::TempDir;

namespace {

SensorConfig flat_test_config(int width = 32, int height = 24) {
  SensorConfig config = default_digit_config();
  config.cameras[0].width = width;
  config.cameras[0].height = height;
  config.blur_kernel = 1;
  config.noise_std = 0.0;
  config.shadows_enabled = false;
  return config;
}

DeformedScene scene_of(std::vector<DeformedBody> bodies) {
  DeformedScene scene;
  scene.bodies = std::move(bodies);
  return scene;
}

// Two camera-facing triangles forming a quad spanning the whole view.
std::shared_ptr<TriangleMesh> full_view_quad(double z, double half = 0.2) {
  auto mesh = std::make_shared<TriangleMesh>();
  mesh->vertices = {Vec3(-half, -half, z), Vec3(half, -half, z),
                    Vec3(half, half, z), Vec3(-half, half, z)};
  mesh->faces = {{0, 2, 1}, {0, 3, 2}};
  compute_vertex_normals(*mesh);
  return mesh;
}

DeformedScene pressed_sphere_scene(const SensorConfig& config, double force) {
  Scene scene(config, Pose::identity());
  auto ball = std::make_shared<TriangleMesh>(make_icosphere(0.00265, 3));
  const Vec3 gel_center = config.gel.pose.translation;
  scene.add_body("ball", ball,
                 Pose::from_translation(gel_center + Vec3(0, 0, 0.00265)));
  if (force > 0.0) {
    const std::vector<ContactReport> reports = {{"ball", force, Vec3(0, 0, 1)}};
    scene.set_contacts(reports);
  }
  return apply_deformation(scene, config);
}

}  // namespace

TEST_CASE("rasterize_depth: empty scene is all far-clip sentinel") {
  const SensorConfig config = flat_test_config();
  Renderer renderer(config, {});
  const DepthImage depth = renderer.rasterize_depth(scene_of({}), config.cameras[0]);
  for (float d : depth.data) CHECK(d == doctest::Approx(config.cameras[0].far_clip));
}

TEST_CASE("rasterize_depth: full-view quad at constant depth") {
  const SensorConfig config = flat_test_config();
  const DeformedScene scene =
      scene_of({{"quad", full_view_quad(0.02), Pose::identity(), 1.0, true}});
  Renderer renderer(config, {});
  const DepthImage depth = renderer.rasterize_depth(scene, config.cameras[0]);
  for (float d : depth.data) CHECK(std::abs(d - 0.02f) < 1e-6f);
}

TEST_CASE("rasterize_depth matches brute-force ray casting off edges") {
  const SensorConfig config = flat_test_config(32, 24);
  const CameraSpec& cam = config.cameras[0];
  const CameraIntrinsics k = CameraIntrinsics::from_spec(cam);
  Renderer renderer(config, {});

  std::mt19937 rng(99);
  for (int scene_idx = 0; scene_idx < 5; ++scene_idx) {
    const auto soup = tacsim::testing::random_view_triangles(rng, k, 30);
    auto mesh = std::make_shared<TriangleMesh>(tacsim::testing::soup_to_mesh(soup));
    const DeformedScene scene =
        scene_of({{"soup", mesh, Pose::identity(), 1.0, true}});
    const DepthImage depth = renderer.rasterize_depth(scene, cam);

    int compared = 0;
    for (int y = 0; y < cam.height; ++y) {
      for (int x = 0; x < cam.width; ++x) {
        if (tacsim::testing::near_projected_edge(soup, k, Pose::identity(), x, y,
                                                 1.0)) {
          continue;
        }
        const double expected =
            tacsim::testing::raycast_depth(soup, k, Pose::identity(), x, y);
        CHECK(std::abs(depth.at(x, y) - expected) < 1e-4);
        ++compared;
      }
    }
    CHECK(compared > 0);
  }
}

TEST_CASE("shadow map: empty scene stays sentinel, occluders are recorded") {
  SensorConfig config = flat_test_config();
  Renderer renderer(config, {});
  const ShadowMap empty_map =
      renderer.render_shadow_map(scene_of({}), config.lights[0], 64);
  for (float d : empty_map.depth) {
    CHECK(d == doctest::Approx(empty_map.far_clip));
  }

  // An occluder between the light and the gel writes its depth somewhere.
  auto blocker = std::make_shared<TriangleMesh>(make_box(Vec3(0.004, 0.004, 0.001)));
  DeformedScene scene = scene_of(
      {{"gel", full_view_quad(0.022, 0.02), Pose::identity(), 1.0, true},
       {"blocker", blocker, Pose::from_translation(Vec3(0, 0, 0.018)), 1.0, false}});
  const ShadowMap map = renderer.render_shadow_map(scene, config.lights[0], 128);
  int hits = 0;
  for (float d : map.depth) {
    if (d < map.far_clip) ++hits;
  }
  CHECK(hits > 0);
}

TEST_CASE("shadow test: point behind an occluder fails, point beside it passes") {
  SensorConfig config = flat_test_config();
  // One light straight above the gel center simplifies the geometry.
  config.lights.resize(1);
  config.lights[0].pose.translation = Vec3(0, 0, 0.002);
  Renderer renderer(config, {});

  auto blocker = std::make_shared<TriangleMesh>(make_box(Vec3(0.004, 0.004, 0.001)));
  DeformedScene scene = scene_of(
      {{"gel", full_view_quad(0.022, 0.02), Pose::identity(), 1.0, true},
       {"blocker", blocker, Pose::from_translation(Vec3(0, 0, 0.012)), 1.0, false}});
  const ShadowMap map = renderer.render_shadow_map(scene, config.lights[0], 256);

  // Directly behind the blocker on the gel plane vs. well off to the side.
  CHECK(map.visibility(Vec3(0, 0, 0.022)) == 0.0);
  CHECK(map.visibility(Vec3(0.015, 0, 0.022)) == 1.0);
}

TEST_CASE("shade_phong: ambient term only") {
  PhongMaterial material;
  material.ambient = Vec3(0.25, 0.5, 0.75);
  const Vec3 color = shade_phong(Vec3::Zero(), Vec3(0, 0, 1), Vec3(0, 0, 1),
                                 material, {});
  CHECK(color == material.ambient);
}

TEST_CASE("shade_phong: back-facing light adds nothing beyond ambient") {
  PhongMaterial material;
  material.ambient = Vec3(0.1, 0.1, 0.1);
  material.diffuse = Vec3(1, 1, 1);
  material.specular = Vec3(1, 1, 1);
  std::vector<LightSpec> lights(1);
  lights[0].pose.translation = Vec3(0, 0, -1);  // behind the surface
  lights[0].attenuation = Vec3(1, 0, 0);
  const Vec3 color =
      shade_phong(Vec3::Zero(), Vec3(0, 0, 1), Vec3(0, 0, 1), material, lights);
  CHECK(color == material.ambient);
}

TEST_CASE("shade_phong: closed-form 45-degree diffuse value") {
  PhongMaterial material;
  material.ambient = Vec3(0, 0, 0);
  material.diffuse = Vec3(1, 1, 1);
  material.specular = Vec3(0, 0, 0);
  std::vector<LightSpec> lights(1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  lights[0].pose.translation = Vec3(0, inv_sqrt2, inv_sqrt2);  // unit distance
  lights[0].color = Vec3(1, 1, 1);
  lights[0].intensity = 1.0;
  lights[0].attenuation = Vec3(1, 0, 0);  // att = 1
  const Vec3 color =
      shade_phong(Vec3::Zero(), Vec3(0, 0, 1), Vec3(0, 0, 1), material, lights);
  CHECK(color.x() == doctest::Approx(inv_sqrt2).epsilon(1e-9));
  CHECK(color.y() == doctest::Approx(inv_sqrt2).epsilon(1e-9));
  CHECK(color.z() == doctest::Approx(inv_sqrt2).epsilon(1e-9));
}

TEST_CASE("shade_phong agrees with the independent reference") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    PhongMaterial material;
    material.ambient = Vec3(unit(rng), unit(rng), unit(rng)) * 0.3;
    material.diffuse = Vec3(unit(rng), unit(rng), unit(rng));
    material.specular = Vec3(unit(rng), unit(rng), unit(rng));
    material.shininess = 1.0 + unit(rng) * 80.0;

    std::vector<LightSpec> lights(1 + static_cast<std::size_t>(unit(rng) * 3));
    for (auto& light : lights) {
      light.pose.translation =
          Vec3(unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) * 0.05);
      light.color = Vec3(unit(rng), unit(rng), unit(rng));
      light.intensity = unit(rng) * 2.0;
      light.attenuation = Vec3(0.5 + unit(rng), unit(rng) * 10.0, unit(rng) * 500.0);
    }

    const Vec3 position(unit(rng) * 0.02 - 0.01, unit(rng) * 0.02 - 0.01,
                        0.02 + unit(rng) * 0.01);
    const Vec3 normal =
        Vec3(unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) - 0.5).normalized();
    const Vec3 view =
        Vec3(unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) - 0.5).normalized();

    const Vec3 got = shade_phong(position, normal, view, material, lights);
    const Vec3 expected =
        tacsim::testing::phong_reference(position, normal, view, material, lights);
    CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("render: deterministic background; repeated renders bit-identical") {
  SensorConfig config = flat_test_config(64, 48);
  config.blur_kernel = 5;
  Renderer renderer(config, {});
  Scene scene(config, Pose::identity());
  const DeformedScene view = apply_deformation(scene, config);
  const RenderOutput a = renderer.render(view);
  const RenderOutput b = renderer.render(view);
  REQUIRE(a.images.size() == 1);
  CHECK(a.images[0].rgb == b.images[0].rgb);
  CHECK(a.images[0].depth == b.images[0].depth);

  // Background covers the full frame: no sentinel depths.
  for (float d : a.images[0].depth.data) {
    CHECK(d < config.cameras[0].far_clip);
  }
}

TEST_CASE("render: every covered fragment equals shade_phong on its G-buffer") {
  SensorConfig config = flat_test_config(48, 36);
  config.shadows_enabled = true;
  Renderer renderer(config, {});
  const DeformedScene view = pressed_sphere_scene(config, 4.0);

  FrameBuffers fb = renderer.render_camera_buffers(view, 0);
  const std::vector<ShadowMap> maps = renderer.make_shadow_maps(view);
  std::vector<LightSpec> world_lights = config.lights;  // sensor at origin

  const Vec3 eye = config.cameras[0].pose.translation;
  int checked = 0;
  for (int y = 0; y < fb.height; ++y) {
    for (int x = 0; x < fb.width; ++x) {
      const std::size_t idx = fb.index(x, y);
      if (!fb.covered[idx]) continue;
      const Vec3 pos = fb.position[idx].cast<double>();
      const Vec3 nrm = fb.normal[idx].cast<double>();
      const Vec3 view_dir = (eye - pos).normalized();
      const Vec3 expected =
          shade_phong(pos, nrm, view_dir, config.gel.material, world_lights, maps);
      const Vec3 got = fb.linear_color[idx].cast<double>();
      CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-6);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("render: pressed sphere grows the contact region with force") {
  SensorConfig config = flat_test_config(80, 60);
  Renderer renderer(config, {});
  Scene scene(config, Pose::identity());
  const DepthImage background =
      renderer.rasterize_depth(apply_deformation(scene, config),
                               config.cameras[0]);

  std::size_t previous = 0;
  for (double force : {1.5, 3.0, 6.0, 12.0}) {
    const DeformedScene view = pressed_sphere_scene(config, force);
    const DepthImage depth = renderer.rasterize_depth(view, config.cameras[0]);
    const Mask mask = contact_mask(depth, background, 1e-5);
    CHECK(mask.count() >= previous);
    previous = mask.count();
  }
  CHECK(previous > 0);
}

TEST_CASE("render: culling on/off and parallel/serial are bit-identical") {
  SensorConfig config = flat_test_config(64, 48);
  config.shadows_enabled = true;
  const DeformedScene view = pressed_sphere_scene(config, 4.0);

  RenderOptions plain;
  plain.threads = 1;
  RenderOptions no_cull = plain;
  no_cull.enable_culling = false;
  RenderOptions parallel = plain;
  parallel.threads = 4;

  Renderer a(config, plain), b(config, no_cull), c(config, parallel);
  const RenderOutput ra = a.render(view, 7);
  const RenderOutput rb = b.render(view, 7);
  const RenderOutput rc = c.render(view, 7);
  CHECK(ra.images[0].rgb == rb.images[0].rgb);
  CHECK(ra.images[0].depth == rb.images[0].depth);
  CHECK(ra.images[0].rgb == rc.images[0].rgb);
  CHECK(ra.images[0].depth == rc.images[0].depth);
}

TEST_CASE("render_from_depth: background consistency within one LSB") {
  SensorConfig config = flat_test_config(64, 48);
  config.blur_kernel = 5;
  Renderer renderer(config, {});
  Scene scene(config, Pose::identity());
  const DeformedScene view = apply_deformation(scene, config);
  const RenderOutput direct = renderer.render(view);
  const RgbImage from_depth = renderer.render_from_depth(direct.images[0].depth, 0);

  REQUIRE(from_depth.data.size() == direct.images[0].rgb.data.size());
  for (std::size_t i = 0; i < from_depth.data.size(); ++i) {
    const int diff = std::abs(static_cast<int>(from_depth.data[i]) -
                              static_cast<int>(direct.images[0].rgb.data[i]));
    CHECK(diff <= 1);
  }
}

TEST_CASE("render_from_depth: a dimple toward the lights brightens") {
  SensorConfig config = flat_test_config(64, 48);
  // One grazing light beside the gel: flat gel catches almost none of it,
  // the dimple flank facing the light catches a lot.
  config.lights.resize(1);
  config.lights[0].pose.translation = Vec3(0.012, 0.0, 0.0215);
  config.lights[0].color = Vec3(1, 1, 1);
  config.lights[0].intensity = 1.0;
  config.lights[0].attenuation = Vec3(1.0, 0.0, 25.0);
  Renderer renderer(config, {});
  Scene scene(config, Pose::identity());
  const DeformedScene view = apply_deformation(scene, config);
  const RenderOutput direct = renderer.render(view);
  const DepthImage& background_depth = direct.images[0].depth;

  DepthImage dimpled = background_depth;
  Mask mask;
  mask.width = dimpled.width;
  mask.height = dimpled.height;
  mask.data.assign(dimpled.data.size(), 0);
  const double cx = dimpled.width / 2.0, cy = dimpled.height / 2.0;
  for (int y = 0; y < dimpled.height; ++y) {
    for (int x = 0; x < dimpled.width; ++x) {
      const double r2 = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / 36.0;
      const double bump = 0.0012 * std::exp(-r2);
      if (bump > 1e-5) {
        dimpled.at(x, y) -= static_cast<float>(bump);  // toward the camera
        mask.data[y * mask.width + x] = 1;
      }
    }
  }

  const RgbImage flat = renderer.render_from_depth(background_depth, 0);
  const RgbImage dimple = renderer.render_from_depth(dimpled, 0);
  const double lum_flat = tacsim::testing::mean_luminance(flat, mask);
  const double lum_dimple = tacsim::testing::mean_luminance(dimple, mask);
  CHECK(lum_dimple > lum_flat);
}

TEST_CASE("render_from_depth rejects mismatched dimensions") {
  SensorConfig config = flat_test_config(64, 48);
  Renderer renderer(config, {});
  const DepthImage wrong = DepthImage::filled(32, 32, 0.02f, 0.001f, 0.1f);
  CHECK_THROWS_AS(renderer.render_from_depth(wrong, 0), DimensionMismatch);
}

TEST_CASE("composite_calibrated arithmetic, identity, and clamping") {
  RgbImage sim = RgbImage::filled(4, 4, 120);
  RgbImage sim_bg = RgbImage::filled(4, 4, 100);
  RgbImage real = RgbImage::filled(4, 4, 200);
  const RgbImage out = composite_calibrated(sim, sim_bg, real);
  for (auto v : out.data) CHECK(v == 220);

  // sim == sim_background: the result is exactly the real image.
  const RgbImage same = composite_calibrated(sim_bg, sim_bg, real);
  CHECK(same == real);

  // Clamping at 255 and 0.
  sim = RgbImage::filled(4, 4, 255);
  sim_bg = RgbImage::filled(4, 4, 0);
  const RgbImage high = composite_calibrated(sim, sim_bg, real);
  for (auto v : high.data) CHECK(v == 255);
  const RgbImage low = composite_calibrated(sim_bg, sim, real);
  for (auto v : low.data) CHECK(v == 0);  // 0 - 255 + 200 clamps at 0

  const RgbImage small = RgbImage::filled(2, 2, 0);
  CHECK_THROWS_AS(composite_calibrated(sim, sim_bg, small), DimensionMismatch);
}

TEST_CASE("gaussian_blur: constant image unchanged, kernel 1 is identity") {
  const RgbImage constant = RgbImage::filled(16, 16, 77);
  CHECK(gaussian_blur(constant, 5, 1.0) == constant);
  RgbImage ramp = RgbImage::filled(16, 16, 0);
  for (int x = 0; x < 16; ++x) ramp.at(x, 3, 1) = static_cast<std::uint8_t>(x * 10);
  CHECK(gaussian_blur(ramp, 1, 0.8) == ramp);
}

TEST_CASE("gaussian_blur: impulse response matches the analytic kernel") {
  const std::vector<double> kernel = gaussian_kernel(3, 0.8);
  double sum = 0.0;
  for (double w : kernel) sum += w;
  CHECK(std::abs(sum - 1.0) < 1e-6);

  RgbImage impulse = RgbImage::filled(9, 9, 0);
  impulse.at(4, 4, 0) = 255;
  impulse.at(4, 4, 1) = 255;
  impulse.at(4, 4, 2) = 255;
  const RgbImage response = gaussian_blur(impulse, 3, 0.8);
  // Center of the separable response is w_c^2.
  const double expected_center = kernel[1] * kernel[1] * 255.0;
  CHECK(std::abs(response.at(4, 4, 0) - expected_center) <= 0.5 + 1e-9);
  // Off-center taps likewise.
  const double expected_side = kernel[0] * kernel[1] * 255.0;
  CHECK(std::abs(response.at(3, 4, 0) - expected_side) <= 0.5 + 1e-9);
}

TEST_CASE("add_noise: zero std is identity; equal seeds are bit-identical") {
  const RgbImage base = RgbImage::filled(32, 32, 128);
  CHECK(add_noise(base, 0.0, 1) == base);
  const RgbImage a = add_noise(base, 0.05, 42);
  const RgbImage b = add_noise(base, 0.05, 42);
  CHECK(a == b);
  CHECK(!(a == base));
  const RgbImage c = add_noise(base, 0.05, 43);
  CHECK(!(a == c));
}

TEST_CASE("add_noise: sample mean stays within 3 sigma / sqrt(N)") {
  const int side = 320;  // ~10^5 pixels
  const RgbImage base = RgbImage::filled(side, side, 128);
  const double std_dev = 0.05;
  const RgbImage noisy = add_noise(base, std_dev, 7);
  double mean = 0.0;
  for (auto v : noisy.data) mean += v;
  mean /= static_cast<double>(noisy.data.size());
  const double n = static_cast<double>(noisy.data.size());
  const double tolerance = 3.0 * std_dev * 255.0 / std::sqrt(n);
  CHECK(std::abs(mean - 128.0) < tolerance + 0.5);  // +0.5 for rounding bias
}

TEST_CASE("contact_mask basics and the pressed-sphere disc") {
  const DepthImage flat = DepthImage::filled(32, 32, 0.02f, 0.001f, 0.1f);
  CHECK(contact_mask(flat, flat, 1e-4).count() == 0);

  DepthImage offset = flat;
  for (auto& d : offset.data) d += 0.001f;
  CHECK(contact_mask(offset, flat, 1e-4).count() == offset.data.size());

  const DepthImage other = DepthImage::filled(16, 16, 0.02f, 0.001f, 0.1f);
  CHECK_THROWS_AS(contact_mask(flat, other, 1e-4), DimensionMismatch);

  // A pressed sphere produces one roughly disc-shaped component.
  SensorConfig config = flat_test_config(80, 60);
  Renderer renderer(config, {});
  Scene scene(config, Pose::identity());
  const DepthImage background = renderer.rasterize_depth(
      apply_deformation(scene, config), config.cameras[0]);
  const DeformedScene pressed = pressed_sphere_scene(config, 8.0);
  const DepthImage depth = renderer.rasterize_depth(pressed, config.cameras[0]);
  const Mask mask = contact_mask(depth, background, 1e-5);
  CHECK(mask.count() > 10);
  CHECK(tacsim::testing::connected_components(mask) == 1);
}

TEST_CASE("PNG and PFM files round-trip exactly") {
  TempDir dir("imageio");
  std::mt19937 rng(23);
  RgbImage rgb = RgbImage::filled(37, 21, 0);
  for (auto& v : rgb.data) v = static_cast<std::uint8_t>(rng() & 0xFF);
  write_png(rgb, dir.file("img.png"));
  CHECK(read_png(dir.file("img.png")) == rgb);

  DepthImage depth = DepthImage::filled(19, 13, 0.0f, 0.001f, 0.1f);
  std::uniform_real_distribution<float> z(0.001f, 0.1f);
  for (auto& d : depth.data) d = z(rng);
  write_pfm(depth, dir.file("img.pfm"));
  const DepthImage back = read_pfm(dir.file("img.pfm"));
  CHECK(back.width == depth.width);
  CHECK(back.height == depth.height);
  CHECK(back.data == depth.data);
}
