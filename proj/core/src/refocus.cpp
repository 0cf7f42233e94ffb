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

#include "lfsyn/refocus.hpp"

#include <cmath>

namespace lfsyn {

Image refocus(const LightField& lf, float alpha) {
  Image acc(lf.H, lf.W, lf.C);
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u) {
      const Image view = lf.view(u, v);
      const float ox = alpha * static_cast<float>(u - lf.center_u);
      const float oy = alpha * static_cast<float>(v - lf.center_v);
      for (int y = 0; y < lf.H; ++y)
        for (int x = 0; x < lf.W; ++x)
          for (int c = 0; c < lf.C; ++c)
            acc.at(y, x, c) += sample_bilinear(
                view, static_cast<float>(x) + ox, static_cast<float>(y) + oy, c);
    }
  for (auto& p : acc.px) p = p / static_cast<float>(lf.views());
  return acc;
}

Image lf_mean_image(const LightField& lf) {
  Image acc(lf.H, lf.W, lf.C);
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u) {
      const Image view = lf.view(u, v);
      for (size_t i = 0; i < acc.px.size(); ++i) acc.px[i] += view.px[i];
    }
  for (auto& p : acc.px) p = p / static_cast<float>(lf.views());
  return acc;
}

Image lf_std_image(const LightField& lf) {
  require(lf.views() >= 2, "lf_std_image: need at least 2 views");
  const Image m = lf_mean_image(lf);
  Image acc(lf.H, lf.W, lf.C);
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u) {
      const Image view = lf.view(u, v);
      for (size_t i = 0; i < acc.px.size(); ++i) {
        const float d = view.px[i] - m.px[i];
        acc.px[i] += d * d;
      }
    }
  const float inv = 1.f / static_cast<float>(lf.views() - 1);
  for (auto& p : acc.px) p = std::sqrt(p * inv);
  return acc;
}

}  // namespace lfsyn
