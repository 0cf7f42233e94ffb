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

#include "lfsyn/tensor.hpp"

namespace lfsyn {

enum class Activation { kNone, kRelu };

/// One dilated 2D convolution layer. Kernels must have odd extents so that
/// "same" zero padding with margin dilation*(k-1)/2 is well defined.
template <typename T>
struct ConvLayer {
  Tensor<T> weights;  // [out_ch, in_ch, kh, kw]
  Tensor<T> bias;     // [out_ch]
  int dilation = 1;
  Activation activation = Activation::kNone;

  int64_t out_channels() const { return weights.dim(0); }
  int64_t in_channels() const { return weights.dim(1); }
};

/// Validates shapes and invariants and assembles the layer.
template <typename T>
ConvLayer<T> make_conv_layer(Tensor<T> weights, Tensor<T> bias, int dilation,
                             Activation activation);

/// Dilated same-padding convolution of a [C,H,W] tensor, yielding
/// [out_ch,H,W]. Differentiable w.r.t. input, weights, and bias; the
/// configured activation is applied to the result.
template <typename T>
Tensor<T> conv2d(const Tensor<T>& input, const ConvLayer<T>& layer);

}  // namespace lfsyn
