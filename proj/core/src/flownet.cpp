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

#include "lfsyn/flownet.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "lfsyn/ops.hpp"
#include "lfsyn/random.hpp"

namespace lfsyn {

namespace {

constexpr char kMagic[4] = {'L', 'F', 'A', 'F'};
constexpr uint32_t kFormatVersion = 1;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_u32(std::ostream& os, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64(std::ostream& os, uint64_t v) {
  write_u32(os, static_cast<uint32_t>(v));
  write_u32(os, static_cast<uint32_t>(v >> 32));
}

uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

uint64_t read_u64(std::istream& is) {
  const uint64_t lo = read_u32(is);
  const uint64_t hi = read_u32(is);
  return lo | (hi << 32);
}

}  // namespace

int NetworkSpec::receptive_field() const {
  int dil_sum = 2;  // pre and head run at dilation 1
  for (int d : dense_dilations) dil_sum += d;
  return 1 + (kernel - 1) * dil_sum;
}

uint64_t NetworkSpec::digest() const {
  std::string s = "U=" + std::to_string(angular_u) +
                  ";V=" + std::to_string(angular_v) +
                  ";in=" + std::to_string(in_channels) +
                  ";pre=" + std::to_string(pre_channels) +
                  ";growth=" + std::to_string(growth) +
                  ";blocks=" + std::to_string(blocks) +
                  ";lpb=" + std::to_string(layers_per_block) +
                  ";k=" + std::to_string(kernel) + ";dil=";
  for (int d : dense_dilations) s += std::to_string(d) + ",";
  return fnv1a(s);
}

NetworkSpec make_network_spec(int angular_u, int angular_v) {
  require(angular_u >= 1 && angular_v >= 1,
          "make_network_spec: angular extents must be >= 1");
  NetworkSpec spec;
  spec.angular_u = angular_u;
  spec.angular_v = angular_v;
  spec.dense_dilations = {1, 2, 4, 2, 4, 8, 4, 8, 16, 16, 32, 64};
  return spec;
}

std::vector<LayerShape> layer_shapes(const NetworkSpec& spec) {
  require(static_cast<int>(spec.dense_dilations.size()) == spec.dense_layers(),
          "NetworkSpec: need " + std::to_string(spec.dense_layers()) +
              " dilations, got " + std::to_string(spec.dense_dilations.size()));
  std::vector<LayerShape> shapes;
  shapes.push_back({"pre", spec.in_channels, spec.pre_channels, 1,
                    Activation::kRelu});
  for (int i = 0; i < spec.dense_layers(); ++i) {
    const std::string name = "b" + std::to_string(i / spec.layers_per_block) +
                             "l" + std::to_string(i % spec.layers_per_block);
    shapes.push_back({name, spec.pre_channels + int64_t(i) * spec.growth,
                      spec.growth, spec.dense_dilations[i], Activation::kRelu});
  }
  shapes.push_back({"head", spec.head_in_channels(), spec.head_channels(), 1,
                    Activation::kNone});
  return shapes;
}

template <typename T>
NetworkParams<T> init_network(const NetworkSpec& spec, uint64_t seed) {
  GaussianRng rng(seed);
  NetworkParams<T> params;
  for (const auto& ls : layer_shapes(spec)) {
    const Shape wshape{ls.out_ch, ls.in_ch, spec.kernel, spec.kernel};
    std::vector<T> w(numel(wshape), T(0));
    if (ls.name != "head") {
      const double stddev =
          std::sqrt(2.0 / static_cast<double>(ls.in_ch * spec.kernel * spec.kernel));
      for (auto& x : w) x = static_cast<T>(rng.next() * stddev);
    }
    params.layers.push_back(make_conv_layer<T>(
        Tensor<T>::from_vector(wshape, std::move(w), true),
        Tensor<T>::zeros({ls.out_ch}, true), ls.dilation, ls.activation));
  }
  return params;
}

template <typename T>
Tensor<T> forward(const NetworkParams<T>& params, const NetworkSpec& spec,
                  const Tensor<T>& y_image) {
  require(static_cast<int>(params.layers.size()) == spec.total_layers(),
          "forward: parameter set has " + std::to_string(params.layers.size()) +
              " layers, spec expects " + std::to_string(spec.total_layers()));
  require(y_image.defined() && y_image.rank() == 3 &&
              y_image.dim(0) == spec.in_channels,
          "forward: input must be a [" + std::to_string(spec.in_channels) +
              ",H,W] luminance tensor");

  Tensor<T> features = conv2d(y_image, params.layers[0]);
  for (int i = 0; i < spec.dense_layers(); ++i) {
    Tensor<T> out = conv2d(features, params.layers[1 + i]);
    features = concat_channels<T>({features, out});
  }
  return conv2d(features, params.layers.back());
}

FlowField flow_from_tensor(const Tensor<float>& t, int angular_u,
                           int angular_v) {
  require(t.rank() == 3 && t.dim(0) == int64_t(angular_u) * angular_v * 2,
          "flow_from_tensor: tensor shape " + shape_str(t.shape()) +
              " does not hold " + std::to_string(angular_u) + "x" +
              std::to_string(angular_v) + " flow pairs");
  FlowField f(angular_u, angular_v, static_cast<int>(t.dim(1)),
              static_cast<int>(t.dim(2)));
  std::memcpy(f.data.data(), t.values().data(),
              f.data.size() * sizeof(float));
  return f;
}

void save_checkpoint(const NetworkParams<float>& params,
                     const NetworkSpec& spec, const std::string& path) {
  const auto shapes = layer_shapes(spec);
  require(params.layers.size() == shapes.size(),
          "save_checkpoint: parameter/spec layer count mismatch");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_checkpoint: cannot open " + path);
  os.write(kMagic, 4);
  write_u32(os, kFormatVersion);
  write_u64(os, spec.digest());
  write_u32(os, static_cast<uint32_t>(params.layers.size() * 2));
  for (size_t i = 0; i < params.layers.size(); ++i) {
    for (int part = 0; part < 2; ++part) {
      const Tensor<float>& t =
          part == 0 ? params.layers[i].weights : params.layers[i].bias;
      const std::string name = shapes[i].name + (part == 0 ? ".w" : ".b");
      write_u32(os, static_cast<uint32_t>(name.size()));
      os.write(name.data(), static_cast<std::streamsize>(name.size()));
      write_u32(os, static_cast<uint32_t>(t.rank()));
      for (size_t d = 0; d < t.rank(); ++d)
        write_u64(os, static_cast<uint64_t>(t.dim(d)));
      for (float v : t.values()) write_u32(os, std::bit_cast<uint32_t>(v));
    }
  }
  if (!os) throw std::runtime_error("save_checkpoint: write failed: " + path);
}

NetworkParams<float> load_checkpoint(const NetworkSpec& spec,
                                     const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_checkpoint: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("load_checkpoint: " + path +
                             " is not a flow network checkpoint");
  const uint32_t version = read_u32(is);
  if (version != kFormatVersion)
    throw std::runtime_error("load_checkpoint: " + path +
                             ": unsupported format version " +
                             std::to_string(version));
  const uint64_t digest = read_u64(is);
  if (digest != spec.digest())
    throw std::runtime_error(
        "load_checkpoint: " + path +
        ": checkpoint was written for a different network spec");
  const auto shapes = layer_shapes(spec);
  const uint32_t entries = read_u32(is);
  if (entries != shapes.size() * 2)
    throw std::runtime_error("load_checkpoint: " + path + ": expected " +
                             std::to_string(shapes.size() * 2) +
                             " tensors, found " + std::to_string(entries));

  NetworkParams<float> params = init_network<float>(spec, 0);
  for (size_t i = 0; i < shapes.size(); ++i) {
    for (int part = 0; part < 2; ++part) {
      const std::string want = shapes[i].name + (part == 0 ? ".w" : ".b");
      const uint32_t name_len = read_u32(is);
      std::string name(name_len, '\0');
      is.read(name.data(), name_len);
      if (!is || name != want)
        throw std::runtime_error("load_checkpoint: " + path +
                                 ": expected tensor \"" + want +
                                 "\", found \"" + name + "\"");
      Tensor<float>& t =
          part == 0 ? params.layers[i].weights : params.layers[i].bias;
      const uint32_t ndim = read_u32(is);
      Shape shape(ndim);
      for (auto& d : shape) d = static_cast<int64_t>(read_u64(is));
      if (shape != t.shape())
        throw std::runtime_error("load_checkpoint: " + path + ": tensor \"" +
                                 name + "\" has shape " + shape_str(shape) +
                                 ", spec expects " + shape_str(t.shape()));
      auto& vals = t.mutable_values();
      for (auto& v : vals) v = std::bit_cast<float>(read_u32(is));
    }
  }
  if (!is)
    throw std::runtime_error("load_checkpoint: " + path + ": truncated file");
  return params;
}

template NetworkParams<float> init_network(const NetworkSpec&, uint64_t);
template NetworkParams<double> init_network(const NetworkSpec&, uint64_t);
template Tensor<float> forward(const NetworkParams<float>&, const NetworkSpec&,
                               const Tensor<float>&);
template Tensor<double> forward(const NetworkParams<double>&,
                                const NetworkSpec&, const Tensor<double>&);

}  // namespace lfsyn
