/*
 * Copyright 2026 The lfsyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lfsyn/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lfsyn {
namespace {

struct FileHandle {
  FILE* f = nullptr;
  explicit FileHandle(const std::string& path, const char* mode)
      : f(std::fopen(path.c_str(), mode)) {}
  ~FileHandle() {
    if (f) std::fclose(f);
  }
};

}  // namespace

PngData read_png(const std::string& path) {
  FileHandle file(path, "rb");
  if (!file.f) throw std::runtime_error("read_png: cannot open " + path);

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("read_png: libpng init failed");
  }

  PngData out;
  std::vector<png_bytep> rows;
  std::vector<uint8_t> raw;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("read_png: malformed PNG file " + path);
  }

  png_init_io(png, file.f);
  png_read_info(png, info);

  const int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (depth == 16) png_set_swap(png);  // file is big-endian
  png_read_update_info(png, info);

  out.w = static_cast<int>(png_get_image_width(png, info));
  out.h = static_cast<int>(png_get_image_height(png, info));
  out.channels = png_get_channels(png, info);
  out.bit_depth = png_get_bit_depth(png, info);
  if (out.channels != 1 && out.channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("read_png: unsupported channel count in " + path);
  }

  const size_t stride = png_get_rowbytes(png, info);
  raw.resize(stride * out.h);
  rows.resize(out.h);
  for (int y = 0; y < out.h; ++y) rows[y] = raw.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  const size_t n = static_cast<size_t>(out.w) * out.h * out.channels;
  out.samples.resize(n);
  if (out.bit_depth == 16) {
    const uint16_t* src = reinterpret_cast<const uint16_t*>(raw.data());
    std::copy_n(src, n, out.samples.data());
  } else {
    for (size_t i = 0; i < n; ++i) out.samples[i] = raw[i];
  }
  return out;
}

void write_png(const std::string& path, const PngData& img) {
  require(img.bit_depth == 8 || img.bit_depth == 16,
          "write_png: bit depth must be 8 or 16");
  require(img.channels == 1 || img.channels == 3,
          "write_png: channels must be 1 or 3");
  require(img.samples.size() ==
              static_cast<size_t>(img.w) * img.h * img.channels,
          "write_png: sample buffer does not match extents");

  FileHandle file(path, "wb");
  if (!file.f) throw std::runtime_error("write_png: cannot open " + path);

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("write_png: libpng init failed");
  }

  const size_t n = img.samples.size();
  std::vector<uint8_t> raw;
  std::vector<png_bytep> rows(img.h);
  size_t stride;
  if (img.bit_depth == 16) {
    stride = static_cast<size_t>(img.w) * img.channels * 2;
    raw.resize(n * 2);
    std::copy_n(reinterpret_cast<const uint8_t*>(img.samples.data()), n * 2,
                raw.data());
  } else {
    stride = static_cast<size_t>(img.w) * img.channels;
    raw.resize(n);
    for (size_t i = 0; i < n; ++i)
      raw[i] = static_cast<uint8_t>(img.samples[i]);
  }
  for (int y = 0; y < img.h; ++y) rows[y] = raw.data() + y * stride;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("write_png: failed writing " + path);
  }

  png_init_io(png, file.f);
  // Pinned encoder settings: fixed compression and no adaptive filtering,
  // so equal pixels give equal bytes.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, img.w, img.h, img.bit_depth,
               img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (img.bit_depth == 16) png_set_swap(png);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image png_to_image(const PngData& png) {
  Image out(png.h, png.w, png.channels);
  const float maxv = png.bit_depth == 16 ? 65535.f : 255.f;
  for (size_t i = 0; i < out.px.size(); ++i)
    out.px[i] = static_cast<float>(png.samples[i]) / maxv;
  return out;
}

PngData image_to_png(const Image& img, int bit_depth) {
  require(bit_depth == 8 || bit_depth == 16,
          "image_to_png: bit depth must be 8 or 16");
  PngData out;
  out.w = img.w;
  out.h = img.h;
  out.channels = img.c;
  out.bit_depth = bit_depth;
  const float maxv = bit_depth == 16 ? 65535.f : 255.f;
  out.samples.resize(img.px.size());
  for (size_t i = 0; i < img.px.size(); ++i) {
    const float v = std::clamp(img.px[i], 0.f, 1.f) * maxv;
    out.samples[i] = static_cast<uint16_t>(std::lround(v));
  }
  return out;
}

Image read_image_png(const std::string& path) {
  return png_to_image(read_png(path));
}

void write_image_png(const std::string& path, const Image& img,
                     int bit_depth) {
  write_png(path, image_to_png(img, bit_depth));
}

}  // namespace lfsyn
