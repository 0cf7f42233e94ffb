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

#include "lfsyn/shifting.hpp"

#include <cmath>

namespace lfsyn {

Image shift_image(const Image& img, int delta_u, int delta_v, double eta) {
  require(std::isfinite(eta), "shift_image: eta must be finite");
  // Offsets in float so that integral eta*delta stays exactly integral.
  const float ox = static_cast<float>(eta) * static_cast<float>(delta_u);
  const float oy = static_cast<float>(eta) * static_cast<float>(delta_v);
  if (ox == 0.f && oy == 0.f) return img;
  Image out(img.h, img.w, img.c);
  for (int y = 0; y < img.h; ++y) {
    const float sy = static_cast<float>(y) - oy;
    for (int x = 0; x < img.w; ++x) {
      const float sx = static_cast<float>(x) - ox;
      for (int c = 0; c < img.c; ++c)
        out.at(y, x, c) = sample_bilinear(img, sx, sy, c);
    }
  }
  return out;
}

ShiftedStack shift_stack(const Image& img, int angular_u, int angular_v,
                         int center_u, int center_v, double eta) {
  ShiftedStack stack(angular_u, angular_v, img.h, img.w, img.c, center_u,
                     center_v, eta);
  for (int v = 0; v < angular_v; ++v)
    for (int u = 0; u < angular_u; ++u)
      stack.set_view(u, v, shift_image(img, u - center_u, v - center_v, eta));
  return stack;
}

}  // namespace lfsyn
