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

#include <vector>

#include "lfsyn/common.hpp"

namespace lfsyn {

/// Planar-free 2D image: row-major [y][x][c], values nominally in [0,1].
struct Image {
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<float> px;

  Image() = default;
  Image(int height, int width, int channels, float fill = 0.f)
      : h(height), w(width), c(channels),
        px(static_cast<size_t>(height) * width * channels, fill) {}

  float& at(int y, int x, int ch) {
    return px[(static_cast<size_t>(y) * w + x) * c + ch];
  }
  float at(int y, int x, int ch) const {
    return px[(static_cast<size_t>(y) * w + x) * c + ch];
  }
};

/// BT.601 luminance of an RGB image; output clamped to [0,1].
Image to_luminance(const Image& rgb);

/// Bilinear resample with half-pixel-centered coordinates
/// (align-corners-false semantics) and clamp-to-edge.
Image resize_bilinear(const Image& img, int new_h, int new_w);

/// Clamp-to-edge bilinear lookup at a continuous position.
float sample_bilinear(const Image& img, float x, float y, int ch);

}  // namespace lfsyn
