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

#include <string>

#include "lfsyn/lightfield.hpp"

namespace lfsyn {

// Procedural layered scenes: deterministic desk-scale ground truth for
// training and evaluation. Every SAI is an exact analytic render (value
// noise is evaluated continuously), so EPI slopes equal the layer
// disparities by construction.

enum class MaskKind { kFull, kEllipse, kRect };

struct LayerSpec {
  float disparity = 0.f;    // px per angular step
  uint64_t texture_seed = 0;
  float base = 0.5f;        // texture mean level
  float amplitude = 0.2f;   // texture half-range
  float lattice = 12.f;     // value-noise cell size in px
  MaskKind mask = MaskKind::kFull;
  // Mask geometry in normalized [0,1] image coordinates.
  float cx = 0.5f, cy = 0.5f;
  float rx = 0.25f, ry = 0.25f;
  float feather = 1.5f;     // soft edge width in px
};

struct SceneSpec {
  std::vector<LayerSpec> layers;  // layers[0] must be a full background
};

/// Continuous value-noise texture lookup for a layer, per channel.
float layer_texture(const LayerSpec& layer, int channel, float x, float y);

/// Layer opacity at a continuous position (already in pixel coordinates).
float layer_mask(const LayerSpec& layer, float x, float y, int width,
                 int height);

/// Renders the scene: each SAI translates every layer by
/// (disparity * du, disparity * dv) and composites back to front.
LightField generate_synthetic_lf(const SceneSpec& scene, int angular_u,
                                 int angular_v, int height, int width,
                                 int center_u, int center_v,
                                 double eta = 0.8);

/// Background at disparity 0.5 plus a brighter foreground ellipse at 1.1,
/// with textures derived from the seed.
SceneSpec default_two_plane_scene(uint64_t seed);

SceneSpec scene_from_json_file(const std::string& path);
void scene_to_json_file(const SceneSpec& scene, const std::string& path);

}  // namespace lfsyn
