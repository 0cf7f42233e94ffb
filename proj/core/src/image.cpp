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

#include "lfsyn/image.hpp"

#include <algorithm>
#include <cmath>

namespace lfsyn {

Image to_luminance(const Image& rgb) {
  require(rgb.c == 3, "to_luminance: expected 3 channels, got " +
                          std::to_string(rgb.c));
  Image out(rgb.h, rgb.w, 1);
  const size_t n = static_cast<size_t>(rgb.h) * rgb.w;
  for (size_t i = 0; i < n; ++i) {
    const float y = 0.299f * rgb.px[i * 3] + 0.587f * rgb.px[i * 3 + 1] +
                    0.114f * rgb.px[i * 3 + 2];
    out.px[i] = std::clamp(y, 0.f, 1.f);
  }
  return out;
}

float sample_bilinear(const Image& img, float x, float y, int ch) {
  const float sx = std::clamp(x, 0.f, static_cast<float>(img.w - 1));
  const float sy = std::clamp(y, 0.f, static_cast<float>(img.h - 1));
  const int x0 = static_cast<int>(sx);
  const int y0 = static_cast<int>(sy);
  const int x1 = std::min(x0 + 1, img.w - 1);
  const int y1 = std::min(y0 + 1, img.h - 1);
  const float tx = sx - static_cast<float>(x0);
  const float ty = sy - static_cast<float>(y0);
  const float top = (1.f - tx) * img.at(y0, x0, ch) + tx * img.at(y0, x1, ch);
  const float bot = (1.f - tx) * img.at(y1, x0, ch) + tx * img.at(y1, x1, ch);
  return (1.f - ty) * top + ty * bot;
}

Image resize_bilinear(const Image& img, int new_h, int new_w) {
  require(new_h >= 1 && new_w >= 1, "resize_bilinear: extents must be >= 1");
  if (new_h == img.h && new_w == img.w) return img;
  Image out(new_h, new_w, img.c);
  const float sy = static_cast<float>(img.h) / static_cast<float>(new_h);
  const float sx = static_cast<float>(img.w) / static_cast<float>(new_w);
  for (int y = 0; y < new_h; ++y) {
    const float fy = (static_cast<float>(y) + 0.5f) * sy - 0.5f;
    for (int x = 0; x < new_w; ++x) {
      const float fx = (static_cast<float>(x) + 0.5f) * sx - 0.5f;
      for (int ch = 0; ch < img.c; ++ch)
        out.at(y, x, ch) = sample_bilinear(img, fx, fy, ch);
    }
  }
  return out;
}

}  // namespace lfsyn
