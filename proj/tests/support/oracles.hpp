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

// Independent oracles used by the tests. Everything here is written as
// plainly as possible (direct loops, no shared code with the library
// implementations) so the tests check against a second route.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lfsyn/image.hpp"
#include "lfsyn/tensor.hpp"

namespace oracle {

// ---------------------------------------------------------------- random

inline std::vector<double> random_vector(std::mt19937_64& rng, size_t n,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

template <typename T>
std::vector<T> random_vector_t(std::mt19937_64& rng, size_t n, double lo,
                               double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<T> out(n);
  for (auto& v : out) v = static_cast<T>(dist(rng));
  return out;
}

// ------------------------------------------------- finite-difference check

struct GradCheckResult {
  double max_rel_err = 0.0;
  double max_abs_err = 0.0;
  size_t checked = 0;
};

/// Central finite differences of a scalar-valued function against the
/// analytic gradient stored on `param` after backward(). The objective
/// must rebuild the graph on every call (the param values are perturbed in
/// place between calls).
inline GradCheckResult finite_difference_check(
    lfsyn::Tensor<double> param,
    const std::function<lfsyn::Tensor<double>()>& objective,
    const std::vector<int64_t>& indices, double h = 1e-4) {
  param.zero_grad();
  lfsyn::Tensor<double> obj = objective();
  obj.backward();
  const std::vector<double> analytic = param.grad();

  GradCheckResult res;
  auto& vals = param.mutable_values();
  for (int64_t idx : indices) {
    const double saved = vals[idx];
    vals[idx] = saved + h;
    const double f_plus = objective().item();
    vals[idx] = saved - h;
    const double f_minus = objective().item();
    vals[idx] = saved;
    const double numeric = (f_plus - f_minus) / (2.0 * h);
    const double a = analytic[idx];
    const double abs_err = std::abs(a - numeric);
    const double denom = std::max({std::abs(a), std::abs(numeric), 1e-8});
    res.max_abs_err = std::max(res.max_abs_err, abs_err);
    res.max_rel_err = std::max(res.max_rel_err, abs_err / denom);
    ++res.checked;
  }
  return res;
}

// --------------------------------------------------------- direct conv2d

/// Direct dilated same-padding convolution, one multiply at a time.
inline std::vector<double> naive_conv2d(const std::vector<double>& in,
                                        int64_t c, int64_t h, int64_t w,
                                        const std::vector<double>& weights,
                                        int64_t oc, int64_t kh, int64_t kw,
                                        const std::vector<double>& bias,
                                        int dilation) {
  std::vector<double> out(oc * h * w, 0.0);
  const int64_t ch = (kh - 1) / 2, cw = (kw - 1) / 2;
  for (int64_t o = 0; o < oc; ++o)
    for (int64_t y = 0; y < h; ++y)
      for (int64_t x = 0; x < w; ++x) {
        double acc = bias[o];
        for (int64_t ci = 0; ci < c; ++ci)
          for (int64_t i = 0; i < kh; ++i)
            for (int64_t j = 0; j < kw; ++j) {
              const int64_t sy = y + dilation * (i - ch);
              const int64_t sx = x + dilation * (j - cw);
              if (sy < 0 || sy >= h || sx < 0 || sx >= w) continue;
              acc += weights[((o * c + ci) * kh + i) * kw + j] *
                     in[(ci * h + sy) * w + sx];
            }
        out[(o * h + y) * w + x] = acc;
      }
  return out;
}

// ------------------------------------------------- brute-force statistics

/// Per-pixel mean over views of an [N,H,W] field, one pixel at a time.
inline std::vector<double> brute_mean(const std::vector<double>& lf, int64_t n,
                                      int64_t hw) {
  std::vector<double> out(hw, 0.0);
  for (int64_t p = 0; p < hw; ++p) {
    double acc = 0;
    for (int64_t i = 0; i < n; ++i) acc += lf[i * hw + p];
    out[p] = acc / static_cast<double>(n);
  }
  return out;
}

/// Two-pass unbiased std with the square root, as printed.
inline std::vector<double> brute_std(const std::vector<double>& lf, int64_t n,
                                     int64_t hw) {
  const std::vector<double> m = brute_mean(lf, n, hw);
  std::vector<double> out(hw, 0.0);
  for (int64_t p = 0; p < hw; ++p) {
    double acc = 0;
    for (int64_t i = 0; i < n; ++i) {
      const double d = lf[i * hw + p] - m[p];
      acc += d * d;
    }
    out[p] = std::sqrt(acc / static_cast<double>(n - 1));
  }
  return out;
}

inline double mean_abs_diff(const std::vector<double>& a,
                            const std::vector<double>& b) {
  double acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc / static_cast<double>(a.size());
}

inline double brute_global_loss(const std::vector<double>& pred,
                                const std::vector<double>& gt, int64_t n,
                                int64_t hw) {
  return mean_abs_diff(brute_mean(pred, n, hw), brute_mean(gt, n, hw)) +
         mean_abs_diff(brute_std(pred, n, hw), brute_std(gt, n, hw));
}

/// Row/column statistics accumulated over the angular grid (views ordered
/// n = v*U + u), normalized by (U+V).
inline double brute_local_loss(const std::vector<double>& pred,
                               const std::vector<double>& gt, int u_count,
                               int v_count, int64_t hw) {
  auto gather = [&](const std::vector<double>& src,
                    const std::vector<int64_t>& idx) {
    std::vector<double> out;
    for (int64_t i : idx)
      out.insert(out.end(), src.begin() + i * hw, src.begin() + (i + 1) * hw);
    return out;
  };
  double acc = 0;
  auto add_group = [&](const std::vector<int64_t>& idx) {
    const auto p = gather(pred, idx);
    const auto g = gather(gt, idx);
    const int64_t cnt = static_cast<int64_t>(idx.size());
    acc += mean_abs_diff(brute_mean(p, cnt, hw), brute_mean(g, cnt, hw));
    if (cnt >= 2)
      acc += mean_abs_diff(brute_std(p, cnt, hw), brute_std(g, cnt, hw));
  };
  for (int u = 0; u < u_count; ++u) {
    std::vector<int64_t> idx;
    for (int v = 0; v < v_count; ++v) idx.push_back(int64_t(v) * u_count + u);
    add_group(idx);
  }
  for (int v = 0; v < v_count; ++v) {
    std::vector<int64_t> idx;
    for (int u = 0; u < u_count; ++u) idx.push_back(int64_t(v) * u_count + u);
    add_group(idx);
  }
  return acc / static_cast<double>(u_count + v_count);
}

/// Mean squared forward difference in x plus in y over [M,H,W] planes.
inline double brute_tv(const std::vector<double>& flow, int64_t m, int64_t h,
                       int64_t w) {
  double acc_x = 0, acc_y = 0;
  for (int64_t p = 0; p < m; ++p) {
    const double* plane = flow.data() + p * h * w;
    for (int64_t y = 0; y < h; ++y)
      for (int64_t x = 0; x + 1 < w; ++x) {
        const double d = plane[y * w + x + 1] - plane[y * w + x];
        acc_x += d * d;
      }
    for (int64_t y = 0; y + 1 < h; ++y)
      for (int64_t x = 0; x < w; ++x) {
        const double d = plane[(y + 1) * w + x] - plane[y * w + x];
        acc_y += d * d;
      }
  }
  return acc_x / static_cast<double>(m * h * (w - 1)) +
         acc_y / static_cast<double>(m * (h - 1) * w);
}

// --------------------------------------------- independent image resampler

/// Clamp-to-edge bilinear lookup written independently of the library.
inline double reference_sample(const lfsyn::Image& img, double x, double y,
                               int ch) {
  const double cx = std::clamp(x, 0.0, double(img.w - 1));
  const double cy = std::clamp(y, 0.0, double(img.h - 1));
  const int x0 = static_cast<int>(std::floor(cx));
  const int y0 = static_cast<int>(std::floor(cy));
  const int x1 = std::min(x0 + 1, img.w - 1);
  const int y1 = std::min(y0 + 1, img.h - 1);
  const double fx = cx - x0, fy = cy - y0;
  return (1 - fy) * ((1 - fx) * img.at(y0, x0, ch) + fx * img.at(y0, x1, ch)) +
         fy * ((1 - fx) * img.at(y1, x0, ch) + fx * img.at(y1, x1, ch));
}

/// Brute-force translation: out(x,y) = img(x - ox, y - oy).
inline lfsyn::Image reference_translate(const lfsyn::Image& img, double ox,
                                        double oy) {
  lfsyn::Image out(img.h, img.w, img.c);
  for (int y = 0; y < img.h; ++y)
    for (int x = 0; x < img.w; ++x)
      for (int c = 0; c < img.c; ++c)
        out.at(y, x, c) =
            static_cast<float>(reference_sample(img, x - ox, y - oy, c));
  return out;
}

// ------------------------------------------------------ EPI slope estimate

/// Slope of an EPI in px/view: per-row subpixel shift against the central
/// row by parabola-refined cross-correlation, then a least-squares line
/// through (delta_row, shift). `x0`..`x1` restricts the correlation window.
inline double epi_slope(const lfsyn::Image& epi, int center_row, int x0,
                        int x1, int max_shift = 8) {
  const int rows = epi.h;
  auto row_value = [&](int r, int x) {
    double acc = 0;
    for (int c = 0; c < epi.c; ++c) acc += epi.at(r, x, c);
    return acc / epi.c;
  };
  auto correlate = [&](int r, int shift) {
    double acc = 0;
    int cnt = 0;
    for (int x = x0; x < x1; ++x) {
      const int xs = x + shift;
      if (xs < x0 || xs >= x1) continue;
      const double d = row_value(r, xs) - row_value(center_row, x);
      acc += d * d;
      ++cnt;
    }
    return cnt > 0 ? acc / cnt : 1e30;
  };

  std::vector<double> ds, ss;
  for (int r = 0; r < rows; ++r) {
    if (r == center_row) {
      ds.push_back(0);
      ss.push_back(0);
      continue;
    }
    int best = 0;
    double best_cost = 1e30;
    for (int s = -max_shift; s <= max_shift; ++s) {
      const double cost = correlate(r, s);
      if (cost < best_cost) {
        best_cost = cost;
        best = s;
      }
    }
    double refine = 0;
    const double cm = correlate(r, best - 1);
    const double cp = correlate(r, best + 1);
    const double denom = cm - 2 * best_cost + cp;
    if (std::abs(best) < max_shift && denom > 1e-12)
      refine = 0.5 * (cm - cp) / denom;
    ds.push_back(r - center_row);
    ss.push_back(best + refine);
  }

  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < ds.size(); ++i) {
    sxx += ds[i] * ds[i];
    sxy += ds[i] * ss[i];
  }
  return sxy / sxx;
}

// -------------------------------------------------- reference guided filter

/// Direct per-window guided filter (O(N r^2)), replicate-padded windows.
inline lfsyn::Image reference_guided_filter(const lfsyn::Image& guide,
                                            const lfsyn::Image& input, int r,
                                            double eps) {
  const int h = guide.h, w = guide.w;
  auto box = [&](const std::vector<double>& src, int y, int x) {
    double acc = 0;
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx) {
        const int yy = std::clamp(y + dy, 0, h - 1);
        const int xx = std::clamp(x + dx, 0, w - 1);
        acc += src[yy * w + xx];
      }
    return acc / ((2 * r + 1) * (2 * r + 1));
  };
  std::vector<double> gd(h * w), pd(h * w), a(h * w), b(h * w);
  for (int i = 0; i < h * w; ++i) {
    gd[i] = guide.px[i];
    pd[i] = input.px[i];
  }
  std::vector<double> gg(h * w), gp(h * w);
  for (int i = 0; i < h * w; ++i) {
    gg[i] = gd[i] * gd[i];
    gp[i] = gd[i] * pd[i];
  }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int i = y * w + x;
      const double mg = box(gd, y, x), mp = box(pd, y, x);
      const double var = box(gg, y, x) - mg * mg;
      const double cov = box(gp, y, x) - mg * mp;
      a[i] = cov / (var + eps);
      b[i] = mp - a[i] * mg;
    }
  lfsyn::Image out(h, w, 1);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      out.px[y * w + x] =
          static_cast<float>(box(a, y, x) * gd[y * w + x] + box(b, y, x));
  return out;
}

}  // namespace oracle
