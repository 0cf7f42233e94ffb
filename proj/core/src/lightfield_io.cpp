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

#include "lfsyn/lightfield_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "lfsyn/png_io.hpp"

namespace lfsyn {
namespace {

using json = nlohmann::ordered_json;

int require_int(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key))
    throw std::runtime_error("load_lightfield: " + path + ": missing key \"" +
                             key + "\"");
  if (!j[key].is_number_integer())
    throw std::runtime_error("load_lightfield: " + path + ": key \"" + key +
                             "\" is not an integer");
  return j[key].get<int>();
}

}  // namespace

std::string metadata_path_for(const std::string& lf_path) {
  std::filesystem::path p(lf_path);
  p.replace_extension(".json");
  return p.string();
}

void save_lightfield(const LightField& lf, const std::string& path) {
  require(!lf.data.empty(), "save_lightfield: empty light field");

  PngData png;
  png.w = lf.U * lf.W;
  png.h = lf.V * lf.H;
  png.channels = lf.C;
  png.bit_depth = lf.bit_depth;
  png.samples.resize(static_cast<size_t>(png.w) * png.h * png.channels);
  const float maxv = lf.bit_depth == 16 ? 65535.f : 255.f;
  for (int v = 0; v < lf.V; ++v)
    for (int u = 0; u < lf.U; ++u)
      for (int y = 0; y < lf.H; ++y)
        for (int x = 0; x < lf.W; ++x)
          for (int c = 0; c < lf.C; ++c) {
            const size_t dst =
                ((static_cast<size_t>(v) * lf.H + y) * png.w +
                 (static_cast<size_t>(u) * lf.W + x)) *
                    lf.C +
                c;
            const float val = std::clamp(lf.at(v, u, y, x, c), 0.f, 1.f);
            png.samples[dst] = static_cast<uint16_t>(std::lround(val * maxv));
          }
  write_png(path, png);

  json meta;
  meta["ang_u"] = lf.U;
  meta["ang_v"] = lf.V;
  meta["width"] = lf.W;
  meta["height"] = lf.H;
  meta["center_u"] = lf.center_u;
  meta["center_v"] = lf.center_v;
  meta["eta"] = lf.eta;
  meta["bit_depth"] = lf.bit_depth;
  std::ofstream out(metadata_path_for(path));
  if (!out)
    throw std::runtime_error("save_lightfield: cannot write " +
                             metadata_path_for(path));
  out << meta.dump(2) << "\n";
}

LightField load_lightfield(const std::string& path) {
  const std::string meta_path = metadata_path_for(path);
  std::ifstream in(meta_path);
  if (!in)
    throw std::runtime_error("load_lightfield: missing metadata file " +
                             meta_path);
  json meta;
  try {
    in >> meta;
  } catch (const json::exception& e) {
    throw std::runtime_error("load_lightfield: " + meta_path +
                             ": invalid JSON (" + e.what() + ")");
  }

  const int U = require_int(meta, "ang_u", meta_path);
  const int V = require_int(meta, "ang_v", meta_path);
  const int W = require_int(meta, "width", meta_path);
  const int H = require_int(meta, "height", meta_path);
  const int cu = require_int(meta, "center_u", meta_path);
  const int cv = require_int(meta, "center_v", meta_path);
  const int bit_depth = require_int(meta, "bit_depth", meta_path);
  if (!meta.contains("eta") || !meta["eta"].is_number())
    throw std::runtime_error("load_lightfield: " + meta_path +
                             ": missing numeric key \"eta\"");
  const double eta = meta["eta"].get<double>();

  PngData png = read_png(path);
  if (png.w != U * W)
    throw std::runtime_error(
        "load_lightfield: " + path + ": metadata says ang_u=" +
        std::to_string(U) + ", width=" + std::to_string(W) +
        " but tile grid is " + std::to_string(png.w) + " px wide (" +
        std::to_string(png.w / std::max(W, 1)) + " columns)");
  if (png.h != V * H)
    throw std::runtime_error(
        "load_lightfield: " + path + ": metadata says ang_v=" +
        std::to_string(V) + ", height=" + std::to_string(H) +
        " but tile grid is " + std::to_string(png.h) + " px tall (" +
        std::to_string(png.h / std::max(H, 1)) + " rows)");
  if (png.bit_depth != bit_depth)
    throw std::runtime_error("load_lightfield: " + path +
                             ": metadata bit_depth " +
                             std::to_string(bit_depth) + " but PNG stores " +
                             std::to_string(png.bit_depth) + " bits");

  LightField lf(U, V, H, W, png.channels, cu, cv, eta, bit_depth);
  const float maxv = bit_depth == 16 ? 65535.f : 255.f;
  for (int v = 0; v < V; ++v)
    for (int u = 0; u < U; ++u)
      for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
          for (int c = 0; c < lf.C; ++c) {
            const size_t src = ((static_cast<size_t>(v) * H + y) * png.w +
                                (static_cast<size_t>(u) * W + x)) *
                                   lf.C +
                               c;
            lf.at(v, u, y, x, c) = static_cast<float>(png.samples[src]) / maxv;
          }
  return lf;
}

}  // namespace lfsyn
