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

#include "lfsyn/lightfield.hpp"

#include <cstring>

namespace lfsyn {

LightField::LightField(int angular_u, int angular_v, int height, int width,
                       int channels, int cu, int cv, double eta_value,
                       int depth)
    : U(angular_u), V(angular_v), H(height), W(width), C(channels),
      center_u(cu), center_v(cv), eta(eta_value), bit_depth(depth) {
  require(U >= 1 && V >= 1 && H >= 1 && W >= 1, "LightField: empty extents");
  require(C == 1 || C == 3, "LightField: channels must be 1 or 3");
  require(0 <= center_u && center_u < U && 0 <= center_v && center_v < V,
          "LightField: central view (" + std::to_string(cu) + "," +
              std::to_string(cv) + ") outside angular grid " +
              std::to_string(U) + "x" + std::to_string(V));
  require(bit_depth == 8 || bit_depth == 16,
          "LightField: bit depth must be 8 or 16");
  data.assign(static_cast<size_t>(U) * V * H * W * C, 0.f);
}

Image LightField::view(int u, int v) const {
  require(0 <= u && u < U && 0 <= v && v < V,
          "LightField::view: index out of range");
  Image img(H, W, C);
  std::memcpy(img.px.data(), data.data() + view_offset(u, v),
              img.px.size() * sizeof(float));
  return img;
}

void LightField::set_view(int u, int v, const Image& img) {
  require(0 <= u && u < U && 0 <= v && v < V,
          "LightField::set_view: index out of range");
  require(img.h == H && img.w == W && img.c == C,
          "LightField::set_view: image extents do not match");
  std::memcpy(data.data() + view_offset(u, v), img.px.data(),
              img.px.size() * sizeof(float));
}

Image central_view(const LightField& lf) {
  return lf.view(lf.center_u, lf.center_v);
}

LightField to_luminance(const LightField& lf) {
  require(lf.C == 3, "to_luminance: light field is not RGB");
  LightField out(lf.U, lf.V, lf.H, lf.W, 1, lf.center_u, lf.center_v, lf.eta,
                 lf.bit_depth);
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u) out.set_view(u, v, to_luminance(lf.view(u, v)));
  return out;
}

Image extract_epi(const LightField& lf, int fixed_y, int fixed_v) {
  require(0 <= fixed_y && fixed_y < lf.H, "extract_epi: y out of range");
  require(0 <= fixed_v && fixed_v < lf.V, "extract_epi: v out of range");
  Image epi(lf.U, lf.W, lf.C);
  for (int u = 0; u < lf.U; ++u)
    for (int x = 0; x < lf.W; ++x)
      for (int c = 0; c < lf.C; ++c)
        epi.at(u, x, c) = lf.at(fixed_v, u, fixed_y, x, c);
  return epi;
}

Image extract_epi_vertical(const LightField& lf, int fixed_x, int fixed_u) {
  require(0 <= fixed_x && fixed_x < lf.W, "extract_epi_vertical: x out of range");
  require(0 <= fixed_u && fixed_u < lf.U, "extract_epi_vertical: u out of range");
  Image epi(lf.V, lf.H, lf.C);
  for (int v = 0; v < lf.V; ++v)
    for (int y = 0; y < lf.H; ++y)
      for (int c = 0; c < lf.C; ++c)
        epi.at(v, y, c) = lf.at(v, fixed_u, y, fixed_x, c);
  return epi;
}

LightField resize_bilinear(const LightField& lf, int new_h, int new_w) {
  LightField out(lf.U, lf.V, new_h, new_w, lf.C, lf.center_u, lf.center_v,
                 lf.eta, lf.bit_depth);
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u)
      out.set_view(u, v, resize_bilinear(lf.view(u, v), new_h, new_w));
  return out;
}

}  // namespace lfsyn
