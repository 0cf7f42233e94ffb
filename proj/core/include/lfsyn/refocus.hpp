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

#include "lfsyn/lightfield.hpp"

namespace lfsyn {

/// Shift-and-add refocusing:
/// R(x,y) = (1/N) * sum_{u,v} L(x + alpha*du, y + alpha*dv, u, v),
/// bilinear with clamp-to-edge. alpha = 0 reproduces lf_mean_image
/// bit-exactly (same accumulation order and arithmetic).
Image refocus(const LightField& lf, float alpha);

/// Per-pixel mean image over all views.
Image lf_mean_image(const LightField& lf);

/// Per-pixel sqrt of the unbiased second moment over all views; N >= 2.
Image lf_std_image(const LightField& lf);

}  // namespace lfsyn
