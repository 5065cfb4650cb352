// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "tacsim/errors.hpp"

namespace tacsim {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

void write_png(const RgbImage& image, const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw IoError("cannot open for writing: " + path);

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png write failed: " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_const_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = image.data.data() + static_cast<std::size_t>(y) * image.width * 3;
  }
  png_write_rows(png, const_cast<png_bytepp>(rows.data()), image.height);
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

RgbImage read_png(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingFile(path);
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw IoError("cannot open: " + path);

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("png read failed: " + path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_set_expand(png);          // palette / low-bit gray -> 8 bit
  png_set_strip_16(png);        // 16 bit -> 8 bit
  png_set_strip_alpha(png);     // drop alpha
  png_set_gray_to_rgb(png);     // gray -> RGB
  png_read_update_info(png, info);

  RgbImage image;
  image.width = static_cast<int>(png_get_image_width(png, info));
  image.height = static_cast<int>(png_get_image_height(png, info));
  if (png_get_channels(png, info) != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("unexpected channel count after RGB conversion: " + path);
  }
  image.data.resize(static_cast<std::size_t>(image.width) * image.height * 3);
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = image.data.data() + static_cast<std::size_t>(y) * image.width * 3;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

void write_pfm(const DepthImage& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "Pf\n" << image.width << ' ' << image.height << "\n-1.0\n";
  // PFM stores the bottom row first.
  for (int y = image.height - 1; y >= 0; --y) {
    out.write(reinterpret_cast<const char*>(image.data.data() +
                                            static_cast<std::size_t>(y) * image.width),
              static_cast<std::streamsize>(image.width) * 4);
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

DepthImage read_pfm(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingFile(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string magic;
  int width = 0, height = 0;
  double scale = 0.0;
  in >> magic >> width >> height >> scale;
  if (magic != "Pf" || width <= 0 || height <= 0) {
    throw IoError("not a grayscale PFM: " + path);
  }
  if (scale >= 0.0) throw IoError("big-endian PFM is not supported: " + path);
  in.get();  // single whitespace after the scale line

  DepthImage image;
  image.width = width;
  image.height = height;
  image.data.resize(static_cast<std::size_t>(width) * height);
  for (int y = height - 1; y >= 0; --y) {
    in.read(reinterpret_cast<char*>(image.data.data() +
                                    static_cast<std::size_t>(y) * width),
            static_cast<std::streamsize>(width) * 4);
  }
  if (!in.good()) throw IoError("truncated PFM: " + path);
  return image;
}

}  // namespace tacsim
