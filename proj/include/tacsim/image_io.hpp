// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "tacsim/image.hpp"

namespace tacsim {

/// 8-bit RGB PNG. Reading converts palette/gray/alpha/16-bit inputs to
/// plain RGB8. Throws MissingFile or IoError.
void write_png(const RgbImage& image, const std::string& path);
RgbImage read_png(const std::string& path);

/// Grayscale PFM ("Pf", little-endian, scale -1.0), bottom row first on
/// disk. Values are camera-frame z in meters.
void write_pfm(const DepthImage& image, const std::string& path);

/// near/far metadata is not stored in the file; the caller may restore it.
DepthImage read_pfm(const std::string& path);

}  // namespace tacsim
