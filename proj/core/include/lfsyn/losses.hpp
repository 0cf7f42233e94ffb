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

#include "lfsyn/ops.hpp"

namespace lfsyn {

// Spatio-angular objective over single-channel light field tensors shaped
// [N,H,W] with views ordered n = v*U + u. All statistics are averaged over
// pixels so the weights stay meaningful across resolutions.

template <typename T>
struct LossWeights {
  T lambda_g = T(10);
  T lambda_e = T(10);
  T lambda_tv = T(1e-6);
};

/// Per-pixel mean image over all views: [N,H,W] -> [H,W].
template <typename T>
Tensor<T> lf_mean(const Tensor<T>& lf);

/// Per-pixel sqrt of the unbiased second moment (the printed formula keeps
/// the square root). Requires N >= 2.
template <typename T>
Tensor<T> lf_std(const Tensor<T>& lf);

/// L1 distance between mean images plus L1 distance between std images.
template <typename T>
Tensor<T> global_loss(const Tensor<T>& pred, const Tensor<T>& gt);

/// The same statistics per angular row (fixed u, varying v) and per
/// angular column (fixed v, varying u), accumulated and normalized by
/// (U+V). Rows or columns with fewer than two views keep only the mean
/// term.
template <typename T>
Tensor<T> local_loss(const Tensor<T>& pred, const Tensor<T>& gt, int angular_u,
                     int angular_v);

/// Mean squared forward difference of the flow in x plus in y.
template <typename T>
Tensor<T> tv_reg(const Tensor<T>& flow);

/// Plain pixel-wise L1; kept as the ablation baseline only.
template <typename T>
Tensor<T> pixel_l1(const Tensor<T>& pred, const Tensor<T>& gt);

/// lambda_g * global + lambda_e * local + lambda_tv * tv(flow).
template <typename T>
Tensor<T> total_objective(const Tensor<T>& pred, const Tensor<T>& gt,
                          const Tensor<T>& flow, const LossWeights<T>& w,
                          int angular_u, int angular_v);

}  // namespace lfsyn
