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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfsyn/image.hpp"

namespace lfsyn {

/// Raw quantized PNG payload: row-major [y][x][c] samples. 8-bit files are
/// widened into the same uint16 container with values in [0,255].
struct PngData {
  int w = 0;
  int h = 0;
  int channels = 0;   // 1 (gray) or 3 (rgb)
  int bit_depth = 8;  // 8 or 16
  std::vector<uint16_t> samples;
};

PngData read_png(const std::string& path);

/// Writes with pinned encoder settings so identical samples produce
/// byte-identical files.
void write_png(const std::string& path, const PngData& img);

/// Dequantize (divide by the bit-depth maximum).
Image png_to_image(const PngData& png);

/// Quantize with round-to-nearest after clamping to [0,1].
PngData image_to_png(const Image& img, int bit_depth);

Image read_image_png(const std::string& path);
void write_image_png(const std::string& path, const Image& img,
                     int bit_depth = 8);

}  // namespace lfsyn
