// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tacsim/errors.hpp"
#include "tacsim/renderer.hpp"

namespace tacsim {

namespace {

// Box-Muller on a pinned mt19937_64 stream; std::normal_distribution is
// implementation-defined, this is not.
struct GaussianStream {
  explicit GaussianStream(std::uint64_t seed) : rng(seed) {}

  double next() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare = r * std::sin(a);
    has_spare = true;
    return r * std::cos(a);
  }

  std::mt19937_64 rng;
  double spare = 0.0;
  bool has_spare = false;
};

}  // namespace

std::uint8_t quantize_channel(double linear) {
  if (linear <= 0.0) return 0;
  if (linear >= 1.0) return 255;
  return static_cast<std::uint8_t>(std::floor(linear * 255.0 + 0.5));
}

RgbImage composite_calibrated(const RgbImage& sim, const RgbImage& sim_background,
                              const RgbImage& real_background) {
  if (sim.width != sim_background.width || sim.height != sim_background.height ||
      sim.width != real_background.width || sim.height != real_background.height) {
    throw DimensionMismatch("composite_calibrated: image sizes differ");
  }
  RgbImage out = RgbImage::filled(sim.width, sim.height, 0);
  for (std::size_t i = 0; i < sim.data.size(); ++i) {
    const int v = static_cast<int>(sim.data[i]) -
                  static_cast<int>(sim_background.data[i]) +
                  static_cast<int>(real_background.data[i]);
    out.data[i] = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
  }
  return out;
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  if (size < 1 || size % 2 == 0) {
    throw InvalidArguments("gaussian kernel size must be odd and >= 1");
  }
  std::vector<double> weights(size, 1.0);
  if (size == 1 || sigma <= 0.0) {
    weights.assign(size, 0.0);
    weights[size / 2] = 1.0;
    return weights;
  }
  const int radius = size / 2;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - radius;
    weights[i] = std::exp(-0.5 * d * d / (sigma * sigma));
    sum += weights[i];
  }
  for (auto& w : weights) w /= sum;
  return weights;
}

double blur_sigma_for_kernel(int kernel) {
  if (kernel <= 1) return 0.0;
  return 0.3 * ((kernel - 1) * 0.5 - 1.0) + 0.8;
}

RgbImage gaussian_blur(const RgbImage& img, int kernel, double sigma) {
  if (kernel < 1 || kernel % 2 == 0) {
    throw InvalidArguments("blur kernel must be odd and >= 1");
  }
  if (kernel == 1 || sigma <= 0.0) return img;
  const std::vector<double> w = gaussian_kernel(kernel, sigma);
  const int radius = kernel / 2;
  const int width = img.width;
  const int height = img.height;

  std::vector<double> tmp(static_cast<std::size_t>(width) * height * 3);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double acc[3] = {0, 0, 0};
      for (int k = -radius; k <= radius; ++k) {
        const int xx = std::clamp(x + k, 0, width - 1);
        const std::size_t src = (static_cast<std::size_t>(y) * width + xx) * 3;
        const double wk = w[k + radius];
        acc[0] += wk * img.data[src + 0];
        acc[1] += wk * img.data[src + 1];
        acc[2] += wk * img.data[src + 2];
      }
      const std::size_t dst = (static_cast<std::size_t>(y) * width + x) * 3;
      tmp[dst + 0] = acc[0];
      tmp[dst + 1] = acc[1];
      tmp[dst + 2] = acc[2];
    }
  }

  RgbImage out = RgbImage::filled(width, height, 0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double acc[3] = {0, 0, 0};
      for (int k = -radius; k <= radius; ++k) {
        const int yy = std::clamp(y + k, 0, height - 1);
        const std::size_t src = (static_cast<std::size_t>(yy) * width + x) * 3;
        const double wk = w[k + radius];
        acc[0] += wk * tmp[src + 0];
        acc[1] += wk * tmp[src + 1];
        acc[2] += wk * tmp[src + 2];
      }
      const std::size_t dst = (static_cast<std::size_t>(y) * width + x) * 3;
      for (int c = 0; c < 3; ++c) {
        out.data[dst + c] = static_cast<std::uint8_t>(
            std::clamp(std::floor(acc[c] + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

RgbImage add_noise(const RgbImage& img, double std_dev, std::uint64_t seed) {
  if (std_dev < 0.0) throw InvalidArguments("noise std must be >= 0");
  if (std_dev == 0.0) return img;
  GaussianStream stream(seed);
  RgbImage out = img;
  const double scale = std_dev * 255.0;
  for (auto& value : out.data) {
    const double noisy = value + stream.next() * scale;
    value = static_cast<std::uint8_t>(std::clamp(std::floor(noisy + 0.5), 0.0, 255.0));
  }
  return out;
}

}  // namespace tacsim
