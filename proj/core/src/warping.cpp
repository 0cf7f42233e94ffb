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

#include "lfsyn/warping.hpp"

#include <algorithm>
#include <cmath>

namespace lfsyn {

namespace {

// Shared tap geometry for value and gradient paths. `inside` is false where
// the clamp is active, killing the flow gradient there.
template <typename T>
struct Taps {
  int x0, x1, y0, y1;
  T tx, ty;
  bool inside_x, inside_y;
};

template <typename T>
Taps<T> make_taps(T x, T y, int64_t w, int64_t h) {
  Taps<T> t;
  const T sx = std::clamp(x, T(0), static_cast<T>(w - 1));
  const T sy = std::clamp(y, T(0), static_cast<T>(h - 1));
  t.inside_x = x > T(0) && x < static_cast<T>(w - 1);
  t.inside_y = y > T(0) && y < static_cast<T>(h - 1);
  t.x0 = static_cast<int>(sx);
  t.y0 = static_cast<int>(sy);
  t.x1 = std::min<int>(t.x0 + 1, static_cast<int>(w - 1));
  t.y1 = std::min<int>(t.y0 + 1, static_cast<int>(h - 1));
  t.tx = sx - static_cast<T>(t.x0);
  t.ty = sy - static_cast<T>(t.y0);
  return t;
}

}  // namespace

template <typename T>
Tensor<T> bilinear_sample(const Tensor<T>& img, const Tensor<T>& flow) {
  require(img.defined() && img.rank() == 3,
          "bilinear_sample: img must be [C,H,W]");
  require(flow.defined() && flow.rank() == 3 && flow.dim(0) == 2 &&
              flow.dim(1) == img.dim(1) && flow.dim(2) == img.dim(2),
          "bilinear_sample: flow must be [2,H,W] matching the image, got " +
              shape_str(flow.shape()));
  for (T v : flow.values())
    require(std::isfinite(v), "bilinear_sample: non-finite flow");

  const int64_t c = img.dim(0), h = img.dim(1), w = img.dim(2);
  const int64_t hw = h * w;
  const T* iv = img.values().data();
  const T* fx = flow.values().data();
  const T* fy = fx + hw;

  std::vector<T> out(c * hw);
  for (int64_t y = 0; y < h; ++y)
    for (int64_t x = 0; x < w; ++x) {
      const int64_t p = y * w + x;
      const auto t = make_taps<T>(static_cast<T>(x) + fx[p],
                                  static_cast<T>(y) + fy[p], w, h);
      for (int64_t ch = 0; ch < c; ++ch) {
        const T* plane = iv + ch * hw;
        const T top = (T(1) - t.tx) * plane[t.y0 * w + t.x0] +
                      t.tx * plane[t.y0 * w + t.x1];
        const T bot = (T(1) - t.tx) * plane[t.y1 * w + t.x0] +
                      t.tx * plane[t.y1 * w + t.x1];
        out[ch * hw + p] = (T(1) - t.ty) * top + t.ty * bot;
      }
    }

  auto img_node = img.node();
  auto flow_node = flow.node();
  return Tensor<T>::make_node(
      img.shape(), std::move(out), {img, flow},
      [img_node, flow_node, c, h, w, hw](detail::TensorNode<T>& nd) {
        const T* g = nd.grad.data();
        const T* iv = img_node->values.data();
        const T* fx = flow_node->values.data();
        const T* fy = fx + hw;
        const bool need_img = img_node->requires_grad;
        const bool need_flow = flow_node->requires_grad;
        T* ig = need_img ? img_node->ensure_grad().data() : nullptr;
        T* fg = need_flow ? flow_node->ensure_grad().data() : nullptr;
        for (int64_t y = 0; y < h; ++y)
          for (int64_t x = 0; x < w; ++x) {
            const int64_t p = y * w + x;
            const auto t = make_taps<T>(static_cast<T>(x) + fx[p],
                                        static_cast<T>(y) + fy[p], w, h);
            T ddx = T(0), ddy = T(0);
            for (int64_t ch = 0; ch < c; ++ch) {
              const T* plane = iv + ch * hw;
              const T gv = g[ch * hw + p];
              const T a = plane[t.y0 * w + t.x0];
              const T b = plane[t.y0 * w + t.x1];
              const T cc = plane[t.y1 * w + t.x0];
              const T d = plane[t.y1 * w + t.x1];
              if (need_img) {
                T* gp = ig + ch * hw;
                gp[t.y0 * w + t.x0] += gv * (T(1) - t.tx) * (T(1) - t.ty);
                gp[t.y0 * w + t.x1] += gv * t.tx * (T(1) - t.ty);
                gp[t.y1 * w + t.x0] += gv * (T(1) - t.tx) * t.ty;
                gp[t.y1 * w + t.x1] += gv * t.tx * t.ty;
              }
              if (need_flow) {
                ddx += gv * ((T(1) - t.ty) * (b - a) + t.ty * (d - cc));
                ddy += gv * ((T(1) - t.tx) * (cc - a) + t.tx * (d - b));
              }
            }
            if (need_flow) {
              if (t.inside_x) fg[p] += ddx;
              if (t.inside_y) fg[hw + p] += ddy;
            }
          }
      });
}

Image warp_image(const Image& img, const FlowField& flow, int u, int v) {
  require(flow.H == img.h && flow.W == img.w,
          "warp_image: flow extents do not match the image");
  require(0 <= u && u < flow.U && 0 <= v && v < flow.V,
          "warp_image: view index out of range");
  Image out(img.h, img.w, img.c);
  for (int y = 0; y < img.h; ++y)
    for (int x = 0; x < img.w; ++x) {
      const float sx = static_cast<float>(x) + flow.at(v, u, 0, y, x);
      const float sy = static_cast<float>(y) + flow.at(v, u, 1, y, x);
      for (int c = 0; c < img.c; ++c)
        out.at(y, x, c) = sample_bilinear(img, sx, sy, c);
    }
  return out;
}

SynthesisResult render_with_flow(const Image& central_rgb,
                                 const FlowField& flow, int center_u,
                                 int center_v, double eta) {
  require(central_rgb.c == 3, "render_with_flow: central image must be RGB");
  require(flow.H == central_rgb.h && flow.W == central_rgb.w,
          "render_with_flow: flow extents do not match the image");
  const Image y_img = to_luminance(central_rgb);
  SynthesisResult res;
  res.rgb = LightField(flow.U, flow.V, central_rgb.h, central_rgb.w, 3,
                       center_u, center_v, eta);
  res.y = LightField(flow.U, flow.V, central_rgb.h, central_rgb.w, 1,
                     center_u, center_v, eta);
  res.flow = flow;
  for (int v = 0; v < flow.V; ++v)
    for (int u = 0; u < flow.U; ++u) {
      const Image rgb_shift =
          shift_image(central_rgb, u - center_u, v - center_v, eta);
      const Image y_shift = shift_image(y_img, u - center_u, v - center_v, eta);
      res.rgb.set_view(u, v, warp_image(rgb_shift, flow, u, v));
      res.y.set_view(u, v, warp_image(y_shift, flow, u, v));
    }
  return res;
}

SynthesisResult synthesize(const Image& central_rgb,
                           const NetworkParams<float>& params,
                           const NetworkSpec& spec, int center_u, int center_v,
                           double eta) {
  require(central_rgb.c == 3, "synthesize: central image must be RGB");
  const Image y_img = to_luminance(central_rgb);
  Tensor<float> y_tensor = Tensor<float>::from_vector(
      {1, y_img.h, y_img.w}, std::vector<float>(y_img.px));
  Tensor<float> flow_t = forward(params, spec, y_tensor);
  FlowField flow = flow_from_tensor(flow_t, spec.angular_u, spec.angular_v);
  return render_with_flow(central_rgb, flow, center_u, center_v, eta);
}

template Tensor<float> bilinear_sample(const Tensor<float>&,
                                       const Tensor<float>&);
template Tensor<double> bilinear_sample(const Tensor<double>&,
                                        const Tensor<double>&);

}  // namespace lfsyn
