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

#include "lfsyn/flownet.hpp"
#include "lfsyn/shifting.hpp"

namespace lfsyn {

/// Backward-warps img by per-pixel offsets:
/// out(x,y) = img(x + dx(x,y), y + dy(x,y)), bilinear, clamp-to-edge.
/// img is [C,H,W], flow is [2,H,W] with channels (dx, dy);
/// differentiable w.r.t. both.
template <typename T>
Tensor<T> bilinear_sample(const Tensor<T>& img, const Tensor<T>& flow);

/// Eager image-domain warp by the flow of view (u,v).
Image warp_image(const Image& img, const FlowField& flow, int u, int v);

struct SynthesisResult {
  LightField rgb;   // the product
  LightField y;     // luminance field, what the losses see
  FlowField flow;   // estimated appearance flow
};

/// Full synthesis composition: estimate flow from the luminance of the
/// central image, build RGB and Y shifted stacks, and warp both per view
/// with the same flow.
SynthesisResult synthesize(const Image& central_rgb,
                           const NetworkParams<float>& params,
                           const NetworkSpec& spec, int center_u, int center_v,
                           double eta);

/// Synthesis with an externally supplied (e.g. post-processed) flow.
SynthesisResult render_with_flow(const Image& central_rgb,
                                 const FlowField& flow, int center_u,
                                 int center_v, double eta);

}  // namespace lfsyn
