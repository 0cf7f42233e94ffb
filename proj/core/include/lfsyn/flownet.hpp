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

#include "lfsyn/conv.hpp"

namespace lfsyn {

/// Architecture of the flow estimation network: one pre-convolution, four
/// densely connected blocks of three dilated convolutions, and a
/// convolution head emitting U*V*2 flow channels with no activation.
/// Dense connectivity is global: every dense layer consumes the
/// concatenation of the pre-convolution output and all previous dense
/// outputs; there are no transition layers, pooling, or normalization.
struct NetworkSpec {
  int angular_u = 8;
  int angular_v = 8;
  int in_channels = 1;
  int pre_channels = 16;
  int growth = 16;
  int blocks = 4;
  int layers_per_block = 3;
  int kernel = 3;
  std::vector<int> dense_dilations;  // blocks * layers_per_block entries

  int dense_layers() const { return blocks * layers_per_block; }
  int total_layers() const { return dense_layers() + 2; }
  int head_channels() const { return angular_u * angular_v * 2; }
  int head_in_channels() const { return pre_channels + dense_layers() * growth; }

  /// 1 + (k-1) * sum of dilations over every layer, pre and head included.
  int receptive_field() const;

  uint64_t digest() const;
};

/// Spec used throughout: 3x3 kernels, 16 pre-conv channels, growth 16, and
/// per-block dilations (1,2,4), (2,4,8), (4,8,16), (16,32,64), which give a
/// receptive field wider than a 256 px input.
NetworkSpec make_network_spec(int angular_u, int angular_v);

struct LayerShape {
  std::string name;
  int64_t in_ch;
  int64_t out_ch;
  int dilation;
  Activation activation;
};

/// Per-layer shapes in evaluation order: "pre", "b0l0".."b3l2", "head".
std::vector<LayerShape> layer_shapes(const NetworkSpec& spec);

/// Ordered convolution parameters (the network weights).
template <typename T>
struct NetworkParams {
  std::vector<ConvLayer<T>> layers;

  /// Weight/bias tensors in layer order, for the optimizer and checkpoints.
  std::vector<Tensor<T>> tensors() const {
    std::vector<Tensor<T>> out;
    out.reserve(layers.size() * 2);
    for (const auto& l : layers) {
      out.push_back(l.weights);
      out.push_back(l.bias);
    }
    return out;
  }
};

/// He-initialized hidden layers from a seeded deterministic stream; the
/// head is zero-initialized so a fresh network predicts zero flow.
template <typename T>
NetworkParams<T> init_network(const NetworkSpec& spec, uint64_t seed);

/// Flow tensor [U*V*2, H, W] from a [1,H,W] luminance input. Channel
/// (v*U+u)*2 holds dx for view (u,v); the next channel holds dy.
template <typename T>
Tensor<T> forward(const NetworkParams<T>& params, const NetworkSpec& spec,
                  const Tensor<T>& y_image);

/// Per-view pixel offsets, stored [v][u][2][y][x] with channels (dx, dy).
struct FlowField {
  int U = 0;
  int V = 0;
  int H = 0;
  int W = 0;
  std::vector<float> data;

  FlowField() = default;
  FlowField(int angular_u, int angular_v, int height, int width)
      : U(angular_u), V(angular_v), H(height), W(width),
        data(static_cast<size_t>(angular_u) * angular_v * 2 * height * width,
             0.f) {}

  float& at(int v, int u, int ch, int y, int x) {
    return data[(((static_cast<size_t>(v) * U + u) * 2 + ch) * H + y) * W + x];
  }
  float at(int v, int u, int ch, int y, int x) const {
    return data[(((static_cast<size_t>(v) * U + u) * 2 + ch) * H + y) * W + x];
  }
};

FlowField flow_from_tensor(const Tensor<float>& t, int angular_u,
                           int angular_v);

// Checkpoint file: magic "LFAF", format version, spec digest, then one
// entry per weight/bias tensor (name, shape, little-endian float32 data).
void save_checkpoint(const NetworkParams<float>& params,
                     const NetworkSpec& spec, const std::string& path);
NetworkParams<float> load_checkpoint(const NetworkSpec& spec,
                                     const std::string& path);

}  // namespace lfsyn
