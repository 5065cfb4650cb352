// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tacsim/camera.hpp"
#include "tacsim/config.hpp"
#include "tacsim/image.hpp"
#include "tacsim/scene.hpp"

namespace tacsim {

/// Depth rendered from a light's viewpoint over a frustum fitted to the
/// gel bounds. Texels without an occluder carry the far_clip sentinel.
struct ShadowMap {
  int light_index = 0;
  int size = 0;
  std::vector<float> depth;  // light-frame z, row-major
  Pose world_to_light;       // world point -> light camera frame
  double fx = 0.0, fy = 0.0, cx = 0.0, cy = 0.0;
  double near_clip = 0.0;
  double far_clip = 0.0;
  double bias = 5e-5;  // meters, > 0

  /// 1.0 when the world point sees the light (or projects outside the
  /// map), 0.0 when some occluder is closer than depth + bias.
  double visibility(const Vec3& p_world) const;
};

struct RenderOutput {
  struct CameraImage {
    std::string camera_name;
    RgbImage rgb;
    DepthImage depth;
  };
  std::vector<CameraImage> images;  // one per camera, config order
};

/// Per-pixel shading inputs and the pre-quantization color computed from
/// them, exposed so tests can re-derive every fragment independently.
struct FrameBuffers {
  int width = 0;
  int height = 0;
  std::vector<float> depth;                  // camera z; far sentinel
  std::vector<Eigen::Vector3f> position;     // world frame
  std::vector<Eigen::Vector3f> normal;       // world frame, unit, as shaded
  std::vector<std::uint8_t> covered;
  std::vector<Eigen::Vector3f> linear_color;  // clamped to [0,1]
  float near_clip = 0.0f;
  float far_clip = 0.0f;

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
};

/// Local illumination:
///   color = k_a + sum over lights of
///           vis * att(d) * intensity * light_color *
///           (k_d * (N.L) + k_s * max(R.V, 0)^shininess)   when N.L > 0
/// with att(d) = 1 / (c + l*d + q*d^2) and R = 2 (N.L) N - L. Lights whose
/// N.L <= 0 contribute nothing beyond the ambient term. `lights` must be
/// in the same frame as position/normal/view_dir; `shadow_maps`, when
/// non-empty, is indexed parallel to `lights`. Output clamped to [0,1].
Vec3 shade_phong(const Vec3& position, const Vec3& normal, const Vec3& view_dir,
                 const PhongMaterial& material, std::span<const LightSpec> lights,
                 std::span<const ShadowMap> shadow_maps = {});

struct RenderOptions {
  int threads = 0;            // 0 = hardware concurrency
  bool enable_culling = true;  // per-body frustum culling (identical output)
};

/// Software rasterizer for one sensor: z-buffered perspective projection,
/// perspective-correct attribute interpolation, multi-light Phong shading
/// with shadow maps, then blur / noise / 8-bit quantization. Parallel and
/// serial execution are bit-identical. An instance owns scratch buffers
/// and must not be shared across threads mid-frame.
class Renderer {
 public:
  explicit Renderer(SensorConfig config, RenderOptions options = {});

  const SensorConfig& config() const { return config_; }
  int thread_count() const { return threads_; }

  /// Full pipeline for every camera. `noise_seed` picks the noise stream
  /// when config.noise_std > 0 (camera i uses noise_seed + i).
  RenderOutput render(const DeformedScene& scene, std::uint64_t noise_seed = 0);

  /// Depth-only pass: nearest front-facing surface along each pixel-center
  /// ray, far-clip sentinel elsewhere. Bodies outside the frustum cost no
  /// per-pixel work.
  DepthImage rasterize_depth(const DeformedScene& scene,
                             const CameraSpec& camera) const;

  /// Depth from the light's viewpoint. Two-sided bodies (the gel) receive
  /// shadows but do not cast them.
  ShadowMap render_shadow_map(const DeformedScene& scene, const LightSpec& light,
                              int resolution, int light_index = 0) const;

  std::vector<ShadowMap> make_shadow_maps(const DeformedScene& scene) const;

  /// Replaces the gel with a heightfield built from `depth` and renders
  /// the RGB image for that camera. Throws DimensionMismatch.
  RgbImage render_from_depth(const DepthImage& depth, std::size_t camera_index = 0,
                             std::uint64_t noise_seed = 0);

  /// Raster + shade for one camera, exposing all intermediate buffers.
  FrameBuffers render_camera_buffers(const DeformedScene& scene,
                                     std::size_t camera_index);

 private:
  SensorConfig config_;
  RenderOptions options_;
  int threads_ = 1;
};

/// out = clamp(sim - sim_background + real_background), per pixel per
/// channel in widened integers. Throws DimensionMismatch.
RgbImage composite_calibrated(const RgbImage& sim, const RgbImage& sim_background,
                              const RgbImage& real_background);

/// Separable Gaussian convolution with clamp-to-edge borders; kernel 1 is
/// the identity. The 1-D kernel is normalized to sum 1.
RgbImage gaussian_blur(const RgbImage& img, int kernel, double sigma);

std::vector<double> gaussian_kernel(int size, double sigma);

/// Default blur sigma for a given odd kernel size.
double blur_sigma_for_kernel(int kernel);

/// Zero-mean Gaussian noise (std on the [0,1] color scale), fixed
/// generator so equal seeds give identical images on every platform.
RgbImage add_noise(const RgbImage& img, double std_dev, std::uint64_t seed);

/// Round-half-up quantization of a clamped linear color to 8 bits.
std::uint8_t quantize_channel(double linear);

}  // namespace tacsim
