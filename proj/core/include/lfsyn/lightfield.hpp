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

#include "lfsyn/image.hpp"

namespace lfsyn {

/// Angular position of a sub-aperture image relative to the central view.
struct ViewIndex {
  int u = 0;
  int v = 0;
  int delta_u = 0;  // u - center_u
  int delta_v = 0;  // v - center_v
};

/// Dense 4D light field L(x,y,u,v), stored [v][u][y][x][c]. Values are
/// kept in [0,1] by load and by save-time clamping. A light field is
/// treated as immutable once filled; reads are thread-safe.
struct LightField {
  int U = 0;  // angular columns
  int V = 0;  // angular rows
  int H = 0;
  int W = 0;
  int C = 0;  // 1 (luminance) or 3 (rgb)
  int center_u = 0;
  int center_v = 0;
  double eta = 0.0;    // pixels per angular step
  int bit_depth = 8;   // quantization used on save
  std::vector<float> data;

  LightField() = default;
  LightField(int angular_u, int angular_v, int height, int width, int channels,
             int cu, int cv, double eta_value = 0.0, int depth = 8);

  size_t view_offset(int u, int v) const {
    return (static_cast<size_t>(v) * U + u) * H * W * C;
  }
  float& at(int v, int u, int y, int x, int ch) {
    return data[view_offset(u, v) + (static_cast<size_t>(y) * W + x) * C + ch];
  }
  float at(int v, int u, int y, int x, int ch) const {
    return data[view_offset(u, v) + (static_cast<size_t>(y) * W + x) * C + ch];
  }

  Image view(int u, int v) const;
  void set_view(int u, int v, const Image& img);
  ViewIndex view_index(int u, int v) const {
    return {u, v, u - center_u, v - center_v};
  }
  int views() const { return U * V; }
};

Image central_view(const LightField& lf);

/// Per-view BT.601 luminance; requires C == 3.
LightField to_luminance(const LightField& lf);

/// Horizontal epipolar plane image E(x,u) at fixed (y, v): row u holds
/// L(x, fixed_y, u, fixed_v).
Image extract_epi(const LightField& lf, int fixed_y, int fixed_v);

/// Vertical counterpart E(y,v) at fixed (x, u): row v holds
/// L(fixed_x, y, u=fixed_u, v).
Image extract_epi_vertical(const LightField& lf, int fixed_x, int fixed_u);

/// Per-SAI bilinear resize.
LightField resize_bilinear(const LightField& lf, int new_h, int new_w);

}  // namespace lfsyn
