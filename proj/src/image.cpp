// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/image.hpp"

#include <algorithm>
#include <cmath>

#include "tacsim/errors.hpp"

namespace tacsim {

RgbImage RgbImage::filled(int width, int height, std::uint8_t value) {
  RgbImage img;
  img.width = width;
  img.height = height;
  img.data.assign(static_cast<std::size_t>(width) * height * 3, value);
  return img;
}

DepthImage DepthImage::filled(int width, int height, float value, float near_clip,
                              float far_clip) {
  DepthImage img;
  img.width = width;
  img.height = height;
  img.near_clip = near_clip;
  img.far_clip = far_clip;
  img.data.assign(static_cast<std::size_t>(width) * height, value);
  return img;
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(data.begin(), data.end(), 1));
}

bool operator==(const RgbImage& a, const RgbImage& b) {
  return a.width == b.width && a.height == b.height && a.data == b.data;
}

bool operator==(const DepthImage& a, const DepthImage& b) {
  return a.width == b.width && a.height == b.height && a.data == b.data;
}

Mask contact_mask(const DepthImage& depth, const DepthImage& background_depth,
                  double threshold) {
  if (depth.width != background_depth.width ||
      depth.height != background_depth.height) {
    throw DimensionMismatch("contact_mask: depth image sizes differ");
  }
  Mask mask;
  mask.width = depth.width;
  mask.height = depth.height;
  mask.data.resize(depth.data.size());
  for (std::size_t i = 0; i < depth.data.size(); ++i) {
    const double diff =
        std::abs(static_cast<double>(depth.data[i]) - background_depth.data[i]);
    mask.data[i] = diff > threshold ? 1 : 0;
  }
  return mask;
}

Mask dilate(const Mask& mask, int radius) {
  if (radius <= 0) return mask;
  Mask out;
  out.width = mask.width;
  out.height = mask.height;
  out.data.assign(mask.data.size(), 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.at(x, y)) continue;
      const int y0 = std::max(0, y - radius);
      const int y1 = std::min(mask.height - 1, y + radius);
      const int x0 = std::max(0, x - radius);
      const int x1 = std::min(mask.width - 1, x + radius);
      for (int yy = y0; yy <= y1; ++yy) {
        for (int xx = x0; xx <= x1; ++xx) {
          out.data[yy * mask.width + xx] = 1;
        }
      }
    }
  }
  return out;
}

}  // namespace tacsim
