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

/// 10*log10(1/MSE) for [0,1] data, capped at 99 dB (identical inputs).
double psnr(const Image& a, const Image& b);
double psnr(const LightField& a, const LightField& b);

/// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// dynamic range 1, averaged over windows fully inside the image. RGB
/// inputs are converted to luminance first.
double ssim(const Image& a, const Image& b);

}  // namespace lfsyn
