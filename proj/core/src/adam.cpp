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

#include "lfsyn/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace lfsyn {

template <typename T>
void adam_step(std::vector<Tensor<T>>& params, AdamState<T>& state) {
  require(params.size() == state.m.size(),
          "adam_step: state tracks " + std::to_string(state.m.size()) +
              " parameters, got " + std::to_string(params.size()));
  for (size_t p = 0; p < params.size(); ++p) {
    require(static_cast<int64_t>(state.m[p].size()) == params[p].numel(),
            "adam_step: moment shape mismatch for parameter " +
                std::to_string(p));
    for (T g : params[p].grad())
      if (!std::isfinite(g))
        throw std::runtime_error(
            "adam_step: non-finite gradient in parameter " +
            std::to_string(p) + "; update aborted");
  }

  ++state.step;
  state.beta1_pow *= state.beta1;
  state.beta2_pow *= state.beta2;
  const T bc1 = T(1) - state.beta1_pow;
  const T bc2 = T(1) - state.beta2_pow;

  for (size_t p = 0; p < params.size(); ++p) {
    const auto& g = params[p].grad();
    auto& theta = params[p].mutable_values();
    T* m = state.m[p].data();
    T* v = state.v[p].data();
    const int64_t n = params[p].numel();
    const T b1 = state.beta1, b2 = state.beta2;
    const T lr = state.lr, eps = state.epsilon;
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
      m[i] = b1 * m[i] + (T(1) - b1) * g[i];
      v[i] = b2 * v[i] + (T(1) - b2) * g[i] * g[i];
      const T mhat = m[i] / bc1;
      const T vhat = v[i] / bc2;
      theta[i] -= lr * mhat / std::sqrt(vhat + eps);
    }
  }
}

template void adam_step(std::vector<Tensor<float>>&, AdamState<float>&);
template void adam_step(std::vector<Tensor<double>>&, AdamState<double>&);

}  // namespace lfsyn
