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

#include "lfsyn/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "lfsyn/random.hpp"

namespace lfsyn {
namespace {

using json = nlohmann::ordered_json;

double lattice_value(uint64_t seed, int64_t ix, int64_t iy, int channel) {
  uint64_t key = seed;
  key = mix64(key ^ static_cast<uint64_t>(ix));
  key = mix64(key ^ static_cast<uint64_t>(iy));
  key = mix64(key ^ static_cast<uint64_t>(channel));
  return hash_unit(key);
}

float fade(float t) { return t * t * (3.f - 2.f * t); }

float smooth01(float t) {
  t = std::clamp(t, 0.f, 1.f);
  return t * t * (3.f - 2.f * t);
}

}  // namespace

float layer_texture(const LayerSpec& layer, int channel, float x, float y) {
  const float gx = x / layer.lattice;
  const float gy = y / layer.lattice;
  const int64_t ix = static_cast<int64_t>(std::floor(gx));
  const int64_t iy = static_cast<int64_t>(std::floor(gy));
  const float fx = fade(gx - static_cast<float>(ix));
  const float fy = fade(gy - static_cast<float>(iy));
  const float v00 = static_cast<float>(lattice_value(layer.texture_seed, ix, iy, channel));
  const float v10 = static_cast<float>(lattice_value(layer.texture_seed, ix + 1, iy, channel));
  const float v01 = static_cast<float>(lattice_value(layer.texture_seed, ix, iy + 1, channel));
  const float v11 = static_cast<float>(lattice_value(layer.texture_seed, ix + 1, iy + 1, channel));
  const float n = (1.f - fy) * ((1.f - fx) * v00 + fx * v10) +
                  fy * ((1.f - fx) * v01 + fx * v11);
  return std::clamp(layer.base + layer.amplitude * (2.f * n - 1.f), 0.f, 1.f);
}

float layer_mask(const LayerSpec& layer, float x, float y, int width,
                 int height) {
  if (layer.mask == MaskKind::kFull) return 1.f;
  const float cx = layer.cx * static_cast<float>(width);
  const float cy = layer.cy * static_cast<float>(height);
  float edge_px;  // signed distance to the boundary, positive inside
  if (layer.mask == MaskKind::kEllipse) {
    const float rx = layer.rx * static_cast<float>(width);
    const float ry = layer.ry * static_cast<float>(height);
    const float dx = (x - cx) / rx;
    const float dy = (y - cy) / ry;
    const float d = std::sqrt(dx * dx + dy * dy);
    edge_px = (1.f - d) * std::min(rx, ry);
  } else {
    const float hx = layer.rx * static_cast<float>(width);
    const float hy = layer.ry * static_cast<float>(height);
    edge_px = std::min(hx - std::abs(x - cx), hy - std::abs(y - cy));
  }
  if (layer.feather <= 0.f) return edge_px > 0.f ? 1.f : 0.f;
  return smooth01(edge_px / layer.feather + 0.5f);
}

LightField generate_synthetic_lf(const SceneSpec& scene, int angular_u,
                                 int angular_v, int height, int width,
                                 int center_u, int center_v, double eta) {
  require(!scene.layers.empty(), "generate_synthetic_lf: scene has no layers");
  require(scene.layers[0].mask == MaskKind::kFull,
          "generate_synthetic_lf: first layer must be a full background");
  for (const auto& l : scene.layers)
    require(std::isfinite(l.disparity),
            "generate_synthetic_lf: non-finite layer disparity");

  LightField lf(angular_u, angular_v, height, width, 3, center_u, center_v,
                eta);
#pragma omp parallel for schedule(static)
  for (int view = 0; view < angular_u * angular_v; ++view) {
    const int u = view % angular_u;
    const int v = view / angular_u;
    const float du = static_cast<float>(u - center_u);
    const float dv = static_cast<float>(v - center_v);
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) {
        float color[3];
        {
          const auto& bg = scene.layers[0];
          const float sx = static_cast<float>(x) - bg.disparity * du;
          const float sy = static_cast<float>(y) - bg.disparity * dv;
          for (int c = 0; c < 3; ++c) color[c] = layer_texture(bg, c, sx, sy);
        }
        for (size_t k = 1; k < scene.layers.size(); ++k) {
          const auto& layer = scene.layers[k];
          const float sx = static_cast<float>(x) - layer.disparity * du;
          const float sy = static_cast<float>(y) - layer.disparity * dv;
          const float m = layer_mask(layer, sx, sy, width, height);
          if (m <= 0.f) continue;
          for (int c = 0; c < 3; ++c)
            color[c] = (1.f - m) * color[c] + m * layer_texture(layer, c, sx, sy);
        }
        for (int c = 0; c < 3; ++c) lf.at(v, u, y, x, c) = color[c];
      }
  }
  return lf;
}

SceneSpec default_two_plane_scene(uint64_t seed) {
  SceneSpec scene;
  LayerSpec bg;
  bg.disparity = 0.5f;
  bg.texture_seed = mix64(seed ^ 0xb6ull);
  bg.base = 0.32f;
  bg.amplitude = 0.22f;
  bg.lattice = 14.f;
  scene.layers.push_back(bg);

  LayerSpec fg;
  fg.disparity = 1.1f;
  fg.texture_seed = mix64(seed ^ 0xf6ull);
  fg.base = 0.68f;
  fg.amplitude = 0.18f;
  fg.lattice = 9.f;
  fg.mask = MaskKind::kEllipse;
  fg.cx = 0.48f;
  fg.cy = 0.46f;
  fg.rx = 0.30f;
  fg.ry = 0.34f;
  fg.feather = 1.5f;
  scene.layers.push_back(fg);
  return scene;
}

namespace {

const char* mask_name(MaskKind kind) {
  switch (kind) {
    case MaskKind::kFull: return "full";
    case MaskKind::kEllipse: return "ellipse";
    case MaskKind::kRect: return "rect";
  }
  return "full";
}

MaskKind mask_from_name(const std::string& name, const std::string& path) {
  if (name == "full") return MaskKind::kFull;
  if (name == "ellipse") return MaskKind::kEllipse;
  if (name == "rect") return MaskKind::kRect;
  throw std::runtime_error("scene_from_json_file: " + path +
                           ": unknown mask kind \"" + name + "\"");
}

}  // namespace

SceneSpec scene_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("scene_from_json_file: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("scene_from_json_file: " + path +
                             ": invalid JSON (" + e.what() + ")");
  }
  if (!j.contains("layers") || !j["layers"].is_array() || j["layers"].empty())
    throw std::runtime_error("scene_from_json_file: " + path +
                             ": expected a non-empty \"layers\" array");
  SceneSpec scene;
  for (const auto& lj : j["layers"]) {
    LayerSpec l;
    l.disparity = lj.value("disparity", 0.f);
    l.texture_seed = lj.value("seed", uint64_t(0));
    l.base = lj.value("base", 0.5f);
    l.amplitude = lj.value("amplitude", 0.2f);
    l.lattice = lj.value("lattice", 12.f);
    l.mask = mask_from_name(lj.value("mask", std::string("full")), path);
    l.cx = lj.value("cx", 0.5f);
    l.cy = lj.value("cy", 0.5f);
    l.rx = lj.value("rx", 0.25f);
    l.ry = lj.value("ry", 0.25f);
    l.feather = lj.value("feather", 1.5f);
    scene.layers.push_back(l);
  }
  if (scene.layers[0].mask != MaskKind::kFull)
    throw std::runtime_error("scene_from_json_file: " + path +
                             ": first layer must use mask \"full\"");
  return scene;
}

void scene_to_json_file(const SceneSpec& scene, const std::string& path) {
  json j;
  j["layers"] = json::array();
  for (const auto& l : scene.layers) {
    json lj;
    lj["disparity"] = l.disparity;
    lj["seed"] = l.texture_seed;
    lj["base"] = l.base;
    lj["amplitude"] = l.amplitude;
    lj["lattice"] = l.lattice;
    lj["mask"] = mask_name(l.mask);
    lj["cx"] = l.cx;
    lj["cy"] = l.cy;
    lj["rx"] = l.rx;
    lj["ry"] = l.ry;
    lj["feather"] = l.feather;
    j["layers"].push_back(lj);
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("scene_to_json_file: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace lfsyn
