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

/// Adam optimizer state. Moment buffers mirror the parameter list exactly;
/// step counts the number of updates applied.
template <typename T>
struct AdamState {
  int64_t step = 0;
  T lr;
  T beta1;
  T beta2;
  T epsilon;
  std::vector<std::vector<T>> m;
  std::vector<std::vector<T>> v;

  explicit AdamState(const std::vector<Tensor<T>>& params, T lr_ = T(1e-3),
                     T beta1_ = T(0.9), T beta2_ = T(0.999),
                     T epsilon_ = T(1e-8))
      : lr(lr_), beta1(beta1_), beta2(beta2_), epsilon(epsilon_) {
    m.reserve(params.size());
    v.reserve(params.size());
    for (const auto& p : params) {
      m.emplace_back(p.numel(), T(0));
      v.emplace_back(p.numel(), T(0));
    }
  }

  // Running beta powers; multiplied once per step so the bias correction is
  // reproducible without std::pow.
  T beta1_pow = T(1);
  T beta2_pow = T(1);
};

/// One bias-corrected Adam update from the gradients attached to `params`.
/// Rejects non-finite gradients before touching any parameter.
template <typename T>
void adam_step(std::vector<Tensor<T>>& params, AdamState<T>& state);

}  // namespace lfsyn
