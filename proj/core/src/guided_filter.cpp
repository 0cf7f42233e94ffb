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

#include "lfsyn/guided_filter.hpp"

#include <algorithm>
#include <vector>

namespace lfsyn {
namespace {

// Box mean with edge replication: windows keep their full (2r+1) width by
// counting the nearest edge sample for out-of-range taps.
void box_mean_1d(const double* src, double* dst, int n, int r, int stride) {
  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + src[i * stride];
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(i - r, 0);
    const int hi = std::min(i + r, n - 1);
    double sum = prefix[hi + 1] - prefix[lo];
    if (i - r < 0) sum += static_cast<double>(r - i) * src[0];
    if (i + r > n - 1) sum += static_cast<double>(i + r - (n - 1)) * src[(n - 1) * stride];
    dst[i * stride] = sum / (2 * r + 1);
  }
}

std::vector<double> box_mean(const std::vector<double>& img, int h, int w,
                             int r) {
  std::vector<double> tmp(img.size()), out(img.size());
  for (int y = 0; y < h; ++y)
    box_mean_1d(img.data() + static_cast<size_t>(y) * w,
                tmp.data() + static_cast<size_t>(y) * w, w, r, 1);
  for (int x = 0; x < w; ++x) box_mean_1d(tmp.data() + x, out.data() + x, h, r, w);
  return out;
}

}  // namespace

Image guided_filter(const Image& guide, const Image& input, int radius,
                    float eps) {
  require(guide.c == 1 && input.c == 1,
          "guided_filter: guide and input must be single-channel");
  require(guide.h == input.h && guide.w == input.w,
          "guided_filter: guide and input extents differ");
  require(radius >= 1, "guided_filter: radius must be >= 1");
  require(eps > 0.f, "guided_filter: eps must be positive");

  const int h = guide.h, w = guide.w;
  const size_t n = static_cast<size_t>(h) * w;
  std::vector<double> gd(n), pd(n), gg(n), gp(n);
  for (size_t i = 0; i < n; ++i) {
    gd[i] = guide.px[i];
    pd[i] = input.px[i];
    gg[i] = gd[i] * gd[i];
    gp[i] = gd[i] * pd[i];
  }

  const auto mean_g = box_mean(gd, h, w, radius);
  const auto mean_p = box_mean(pd, h, w, radius);
  const auto corr_gg = box_mean(gg, h, w, radius);
  const auto corr_gp = box_mean(gp, h, w, radius);

  std::vector<double> a(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    const double var = corr_gg[i] - mean_g[i] * mean_g[i];
    const double cov = corr_gp[i] - mean_g[i] * mean_p[i];
    a[i] = cov / (var + static_cast<double>(eps));
    b[i] = mean_p[i] - a[i] * mean_g[i];
  }
  const auto mean_a = box_mean(a, h, w, radius);
  const auto mean_b = box_mean(b, h, w, radius);

  Image out(h, w, 1);
  for (size_t i = 0; i < n; ++i)
    out.px[i] = static_cast<float>(mean_a[i] * gd[i] + mean_b[i]);
  return out;
}

FlowField aggregate_flow(const FlowField& flow, const Image& guide_y,
                         int radius, float eps) {
  require(guide_y.c == 1, "aggregate_flow: guide must be single-channel");
  require(guide_y.h == flow.H && guide_y.w == flow.W,
          "aggregate_flow: guide extents do not match the flow");
  FlowField out(flow.U, flow.V, flow.H, flow.W);
  const int planes = flow.U * flow.V * 2;
  const size_t plane_sz = static_cast<size_t>(flow.H) * flow.W;
#pragma omp parallel for schedule(static)
  for (int p = 0; p < planes; ++p) {
    Image channel(flow.H, flow.W, 1);
    std::copy_n(flow.data.data() + p * plane_sz, plane_sz, channel.px.data());
    const Image filtered = guided_filter(guide_y, channel, radius, eps);
    std::copy_n(filtered.px.data(), plane_sz, out.data.data() + p * plane_sz);
  }
  return out;
}

}  // namespace lfsyn
