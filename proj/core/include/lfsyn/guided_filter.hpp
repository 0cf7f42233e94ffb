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
#include "lfsyn/image.hpp"

namespace lfsyn {

/// He's guided filter: q = mean(a) * guide + mean(b) with
/// a = cov(guide,input) / (var(guide) + eps), computed over
/// (2*radius+1)^2 box windows with edge-replicated box means.
/// Single-channel guide and input of equal extents.
Image guided_filter(const Image& guide, const Image& input, int radius,
                    float eps);

/// Flow aggregation before warping: each view's dx and dy channel is
/// filtered independently, guided by the central luminance image.
FlowField aggregate_flow(const FlowField& flow, const Image& guide_y,
                         int radius, float eps);

}  // namespace lfsyn
