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

/// Pre-shifted stack: every SAI is a pure translation of one source image,
/// and the central SAI is bit-identical to it.
using ShiftedStack = LightField;

/// out(x,y) = img(x - eta*delta_u, y - eta*delta_v), bilinear with
/// clamp-to-edge. Integral eta*delta reduces to an exact pixel copy.
Image shift_image(const Image& img, int delta_u, int delta_v, double eta);

/// Applies shift_image toward every angular position of a U x V grid.
ShiftedStack shift_stack(const Image& img, int angular_u, int angular_v,
                         int center_u, int center_v, double eta);

}  // namespace lfsyn
