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

#include <vector>

#include "lfsyn/tensor.hpp"

namespace lfsyn {

// Differentiable primitives. Each returns a new tensor wired into the
// graph of its operands; gradients are exact (ReLU and |x| use the zero
// subgradient at the kink, sqrt uses it at zero).

template <typename T> Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> scale(const Tensor<T>& a, T c);
template <typename T> Tensor<T> square(const Tensor<T>& a);
template <typename T> Tensor<T> sqrt(const Tensor<T>& a);  // requires a >= 0
template <typename T> Tensor<T> abs(const Tensor<T>& a);
template <typename T> Tensor<T> relu(const Tensor<T>& a);

/// Full reductions to a scalar tensor (shape []).
template <typename T> Tensor<T> sum(const Tensor<T>& a);
template <typename T> Tensor<T> mean(const Tensor<T>& a);

/// Reductions over the leading axis: [N, ...] -> [...]. Require rank >= 1.
template <typename T> Tensor<T> sum_axis0(const Tensor<T>& a);
template <typename T> Tensor<T> mean_axis0(const Tensor<T>& a);

/// a[n, ...] - b[...] with b broadcast along the leading axis.
template <typename T>
Tensor<T> sub_broadcast0(const Tensor<T>& a, const Tensor<T>& b);

/// Concatenation along the leading axis; trailing extents must match.
/// A single input is returned unchanged.
template <typename T>
Tensor<T> concat_channels(const std::vector<Tensor<T>>& parts);

/// Contiguous [begin, end) slab of the leading axis.
template <typename T>
Tensor<T> slice_axis0(const Tensor<T>& a, int64_t begin, int64_t end);

/// Gather of leading-axis slabs in the given order.
template <typename T>
Tensor<T> select_axis0(const Tensor<T>& a, std::vector<int64_t> indices);

/// Forward differences along the innermost (x) / second innermost (y)
/// axis: [..., H, W] -> [..., H, W-1] resp. [..., H-1, W].
template <typename T> Tensor<T> diff_x(const Tensor<T>& a);
template <typename T> Tensor<T> diff_y(const Tensor<T>& a);

}  // namespace lfsyn
