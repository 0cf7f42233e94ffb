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

#include "lfsyn/metrics.hpp"

#include <cmath>
#include <vector>

namespace lfsyn {
namespace {

constexpr double kPsnrCap = 99.0;
constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;

double psnr_from_sums(double sq_sum, size_t count) {
  const double mse = sq_sum / static_cast<double>(count);
  if (mse <= 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  require(a.h == b.h && a.w == b.w && a.c == b.c,
          "psnr: image extents differ");
  double acc = 0.0;
  for (size_t i = 0; i < a.px.size(); ++i) {
    const double d = static_cast<double>(a.px[i]) - b.px[i];
    acc += d * d;
  }
  return psnr_from_sums(acc, a.px.size());
}

double psnr(const LightField& a, const LightField& b) {
  require(a.U == b.U && a.V == b.V && a.H == b.H && a.W == b.W && a.C == b.C,
          "psnr: light field extents differ");
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - b.data[i];
    acc += d * d;
  }
  return psnr_from_sums(acc, a.data.size());
}

double ssim(const Image& a_in, const Image& b_in) {
  const Image a = a_in.c == 3 ? to_luminance(a_in) : a_in;
  const Image b = b_in.c == 3 ? to_luminance(b_in) : b_in;
  require(a.c == 1 && b.c == 1, "ssim: inputs must be gray or RGB");
  require(a.h == b.h && a.w == b.w, "ssim: image extents differ");
  require(a.h >= kSsimWindow && a.w >= kSsimWindow,
          "ssim: image smaller than the " + std::to_string(kSsimWindow) +
              "px window");

  const int r = kSsimWindow / 2;
  double win[kSsimWindow][kSsimWindow];
  double wsum = 0.0;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx) {
      const double g =
          std::exp(-(dx * dx + dy * dy) / (2.0 * kSsimSigma * kSsimSigma));
      win[dy + r][dx + r] = g;
      wsum += g;
    }
  for (auto& row : win)
    for (auto& wv : row) wv /= wsum;

  constexpr double c1 = 0.01 * 0.01;
  constexpr double c2 = 0.03 * 0.03;
  double total = 0.0;
  size_t count = 0;
  for (int y = r; y < a.h - r; ++y)
    for (int x = r; x < a.w - r; ++x) {
      double mu_a = 0, mu_b = 0, aa = 0, bb = 0, ab = 0;
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
          const double wv = win[dy + r][dx + r];
          const double va = a.at(y + dy, x + dx, 0);
          const double vb = b.at(y + dy, x + dx, 0);
          mu_a += wv * va;
          mu_b += wv * vb;
          aa += wv * va * va;
          bb += wv * vb * vb;
          ab += wv * va * vb;
        }
      const double var_a = aa - mu_a * mu_a;
      const double var_b = bb - mu_b * mu_b;
      const double cov = ab - mu_a * mu_b;
      total += ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      ++count;
    }
  return total / static_cast<double>(count);
}

}  // namespace lfsyn
