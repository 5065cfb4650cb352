// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace tacsim {

/// 8-bit RGB, row-major, 3 interleaved channels, top row first.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width * height * 3

  static RgbImage filled(int width, int height, std::uint8_t value = 0);
  std::uint8_t& at(int x, int y, int c) { return data[(y * width + x) * 3 + c]; }
  std::uint8_t at(int x, int y, int c) const { return data[(y * width + x) * 3 + c]; }
};

/// Camera-frame z in meters, row-major f32, top row first. Pixels with no
/// geometry carry the far-clip sentinel.
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // width * height
  float near_clip = 0.0f;
  float far_clip = 0.0f;  // doubles as the background sentinel

  static DepthImage filled(int width, int height, float value, float near_clip,
                           float far_clip);
  float& at(int x, int y) { return data[y * width + x]; }
  float at(int x, int y) const { return data[y * width + x]; }
};

/// Binary pixel mask (1 = set).
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(int x, int y) const { return data[y * width + x]; }
  std::size_t count() const;
};

bool operator==(const RgbImage& a, const RgbImage& b);
bool operator==(const DepthImage& a, const DepthImage& b);

/// True where |depth - background_depth| > threshold (meters).
/// Throws DimensionMismatch.
Mask contact_mask(const DepthImage& depth, const DepthImage& background_depth,
                  double threshold);

/// Chebyshev (square structuring element) dilation by `radius` pixels.
Mask dilate(const Mask& mask, int radius);

}  // namespace tacsim
