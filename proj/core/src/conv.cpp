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

#include "lfsyn/conv.hpp"

#include <algorithm>
#include <cstring>

#include "lfsyn/gemm.hpp"
#include "lfsyn/ops.hpp"

namespace lfsyn {
namespace {

struct ConvDims {
  int64_t ic, oc, kh, kw, h, w;
  int dilation;
  int64_t k() const { return ic * kh * kw; }
  int64_t hw() const { return h * w; }
};

// col[(c*kh+i)*kw+j][y*w+x] = in[c][y + d*(i-ch)][x + d*(j-cw)], zero outside.
template <typename T>
void im2col(const T* in, const ConvDims& d, T* col) {
  const int64_t ch = (d.kh - 1) / 2, cw = (d.kw - 1) / 2;
#pragma omp parallel for schedule(static)
  for (int64_t r = 0; r < d.k(); ++r) {
    const int64_t c = r / (d.kh * d.kw);
    const int64_t i = (r / d.kw) % d.kh;
    const int64_t j = r % d.kw;
    const int64_t dy = d.dilation * (i - ch);
    const int64_t dx = d.dilation * (j - cw);
    T* row = col + r * d.hw();
    const T* plane = in + c * d.hw();
    for (int64_t y = 0; y < d.h; ++y) {
      T* dst = row + y * d.w;
      const int64_t sy = y + dy;
      if (sy < 0 || sy >= d.h) {
        std::fill_n(dst, d.w, T(0));
        continue;
      }
      const int64_t x0 =
          std::clamp<int64_t>(-dx, 0, d.w);
      const int64_t x1 =
          std::clamp<int64_t>(d.w - dx, x0, d.w);
      if (x0 > 0) std::fill_n(dst, x0, T(0));
      if (x1 > x0)
        std::memcpy(dst + x0, plane + sy * d.w + x0 + dx,
                    static_cast<size_t>(x1 - x0) * sizeof(T));
      if (x1 < d.w) std::fill_n(dst + x1, d.w - x1, T(0));
    }
  }
}

// Adjoint of im2col: scatters dcol back onto the input gradient. Parallel
// over input channels; each channel only receives its own rows, in fixed
// (i, j, y, x) order.
template <typename T>
void col2im_accum(const T* dcol, const ConvDims& d, T* din) {
  const int64_t ch = (d.kh - 1) / 2, cw = (d.kw - 1) / 2;
#pragma omp parallel for schedule(static)
  for (int64_t c = 0; c < d.ic; ++c) {
    T* plane = din + c * d.hw();
    for (int64_t i = 0; i < d.kh; ++i) {
      for (int64_t j = 0; j < d.kw; ++j) {
        const int64_t r = (c * d.kh + i) * d.kw + j;
        const int64_t dy = d.dilation * (i - ch);
        const int64_t dx = d.dilation * (j - cw);
        const T* row = dcol + r * d.hw();
        const int64_t y0 = std::max<int64_t>(0, -dy);
        const int64_t y1 = std::min<int64_t>(d.h, d.h - dy);
        const int64_t x0 = std::max<int64_t>(0, -dx);
        const int64_t x1 = std::min<int64_t>(d.w, d.w - dx);
        for (int64_t y = y0; y < y1; ++y) {
          T* dst = plane + (y + dy) * d.w + dx;
          const T* src = row + y * d.w;
#pragma omp simd
          for (int64_t x = x0; x < x1; ++x) dst[x] += src[x];
        }
      }
    }
  }
}

template <typename T>
void validate_layer(const ConvLayer<T>& layer) {
  require(layer.weights.defined() && layer.weights.rank() == 4,
          "ConvLayer: weights must have shape [out_ch,in_ch,kh,kw]");
  require(layer.weights.dim(2) % 2 == 1 && layer.weights.dim(3) % 2 == 1,
          "ConvLayer: kernel extents must be odd");
  require(layer.dilation >= 1, "ConvLayer: dilation must be >= 1");
  require(layer.bias.defined() && layer.bias.rank() == 1 &&
              layer.bias.dim(0) == layer.weights.dim(0),
          "ConvLayer: bias shape must be [out_ch]");
}

}  // namespace

template <typename T>
ConvLayer<T> make_conv_layer(Tensor<T> weights, Tensor<T> bias, int dilation,
                             Activation activation) {
  ConvLayer<T> layer{std::move(weights), std::move(bias), dilation, activation};
  validate_layer(layer);
  return layer;
}

template <typename T>
Tensor<T> conv2d(const Tensor<T>& input, const ConvLayer<T>& layer) {
  validate_layer(layer);
  require(input.defined() && input.rank() == 3,
          "conv2d: input must have shape [C,H,W]");
  require(input.dim(0) == layer.in_channels(),
          "conv2d: input has " + std::to_string(input.dim(0)) +
              " channels, layer expects " +
              std::to_string(layer.in_channels()));

  const ConvDims d{input.dim(0),        layer.out_channels(),
                   layer.weights.dim(2), layer.weights.dim(3),
                   input.dim(1),        input.dim(2),
                   layer.dilation};

  auto col = std::make_shared<std::vector<T>>(d.k() * d.hw());
  im2col(input.values().data(), d, col->data());

  std::vector<T> out(d.oc * d.hw());
  const auto& bias = layer.bias.values();
#pragma omp parallel for schedule(static)
  for (int64_t oc = 0; oc < d.oc; ++oc)
    std::fill_n(out.data() + oc * d.hw(), d.hw(), bias[oc]);
  gemm_nn<T>(d.oc, d.k(), d.hw(), layer.weights.values().data(), col->data(),
             out.data());

  auto in_node = input.node();
  auto w_node = layer.weights.node();
  auto b_node = layer.bias.node();
  Tensor<T> raw = Tensor<T>::make_node(
      Shape{d.oc, d.h, d.w}, std::move(out),
      {input, layer.weights, layer.bias},
      [in_node, w_node, b_node, col, d](detail::TensorNode<T>& nd) {
        const T* g = nd.grad.data();
        if (b_node->requires_grad) {
          auto& bg = b_node->ensure_grad();
#pragma omp parallel for schedule(static)
          for (int64_t oc = 0; oc < d.oc; ++oc) {
            T acc = T(0);
            const T* row = g + oc * d.hw();
            for (int64_t i = 0; i < d.hw(); ++i) acc += row[i];
            bg[oc] += acc;
          }
        }
        if (w_node->requires_grad) {
          auto& wg = w_node->ensure_grad();
          gemm_nt<T>(d.oc, d.hw(), d.k(), g, col->data(), wg.data());
        }
        if (in_node->requires_grad) {
          // dcol = W^T * g, then scatter back through the im2col pattern.
          const auto& wv = w_node->values;
          std::vector<T> wt(d.k() * d.oc);
          for (int64_t oc = 0; oc < d.oc; ++oc)
            for (int64_t k = 0; k < d.k(); ++k)
              wt[k * d.oc + oc] = wv[oc * d.k() + k];
          std::vector<T> dcol(d.k() * d.hw(), T(0));
          gemm_nn<T>(d.k(), d.oc, d.hw(), wt.data(), g, dcol.data());
          col2im_accum(dcol.data(), d, in_node->ensure_grad().data());
        }
      });
  return layer.activation == Activation::kRelu ? relu(raw) : raw;
}

template ConvLayer<float> make_conv_layer(Tensor<float>, Tensor<float>, int,
                                          Activation);
template ConvLayer<double> make_conv_layer(Tensor<double>, Tensor<double>, int,
                                           Activation);
template Tensor<float> conv2d(const Tensor<float>&, const ConvLayer<float>&);
template Tensor<double> conv2d(const Tensor<double>&, const ConvLayer<double>&);

}  // namespace lfsyn
