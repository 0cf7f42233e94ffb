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

#include "lfsyn/losses.hpp"

namespace lfsyn {

namespace {

template <typename T>
void check_field(const Tensor<T>& lf, const char* op) {
  require(lf.defined() && lf.rank() == 3,
          std::string(op) + ": light field tensor must be [N,H,W]");
}

template <typename T>
void check_pair(const Tensor<T>& pred, const Tensor<T>& gt, const char* op) {
  check_field(pred, op);
  require(pred.shape() == gt.shape(),
          std::string(op) + ": shape mismatch " + shape_str(pred.shape()) +
              " vs " + shape_str(gt.shape()));
}

/// mean over pixels of |a - b|, for equally shaped statistic images.
template <typename T>
Tensor<T> l1_term(const Tensor<T>& a, const Tensor<T>& b) {
  return mean(abs(sub(a, b)));
}

}  // namespace

template <typename T>
Tensor<T> lf_mean(const Tensor<T>& lf) {
  check_field(lf, "lf_mean");
  return mean_axis0(lf);
}

template <typename T>
Tensor<T> lf_std(const Tensor<T>& lf) {
  check_field(lf, "lf_std");
  const int64_t n = lf.dim(0);
  require(n >= 2, "lf_std: need at least 2 views, got " + std::to_string(n));
  Tensor<T> centered = sub_broadcast0(lf, mean_axis0(lf));
  Tensor<T> second = scale(sum_axis0(square(centered)),
                           T(1) / static_cast<T>(n - 1));
  return sqrt(second);
}

template <typename T>
Tensor<T> global_loss(const Tensor<T>& pred, const Tensor<T>& gt) {
  check_pair(pred, gt, "global_loss");
  Tensor<T> loss = l1_term(lf_mean(pred), lf_mean(gt));
  if (pred.dim(0) >= 2) loss = add(loss, l1_term(lf_std(pred), lf_std(gt)));
  return loss;
}

template <typename T>
Tensor<T> local_loss(const Tensor<T>& pred, const Tensor<T>& gt, int angular_u,
                     int angular_v) {
  check_pair(pred, gt, "local_loss");
  require(angular_u >= 1 && angular_v >= 1 &&
              pred.dim(0) == int64_t(angular_u) * angular_v,
          "local_loss: angular grid " + std::to_string(angular_u) + "x" +
              std::to_string(angular_v) + " does not match " +
              shape_str(pred.shape()));

  Tensor<T> acc;
  auto add_group = [&](const std::vector<int64_t>& idx) {
    Tensor<T> p = select_axis0(pred, idx);
    Tensor<T> g = select_axis0(gt, idx);
    Tensor<T> term = l1_term(lf_mean(p), lf_mean(g));
    if (idx.size() >= 2) term = add(term, l1_term(lf_std(p), lf_std(g)));
    acc = acc.defined() ? add(acc, term) : term;
  };

  // Angular rows: fixed u, varying v.
  for (int u = 0; u < angular_u; ++u) {
    std::vector<int64_t> idx;
    for (int v = 0; v < angular_v; ++v) idx.push_back(int64_t(v) * angular_u + u);
    add_group(idx);
  }
  // Angular columns: fixed v, varying u.
  for (int v = 0; v < angular_v; ++v) {
    std::vector<int64_t> idx;
    for (int u = 0; u < angular_u; ++u) idx.push_back(int64_t(v) * angular_u + u);
    add_group(idx);
  }
  return scale(acc, T(1) / static_cast<T>(angular_u + angular_v));
}

template <typename T>
Tensor<T> tv_reg(const Tensor<T>& flow) {
  require(flow.defined() && flow.rank() >= 2, "tv_reg: flow must be [...,H,W]");
  return add(mean(square(diff_x(flow))), mean(square(diff_y(flow))));
}

template <typename T>
Tensor<T> pixel_l1(const Tensor<T>& pred, const Tensor<T>& gt) {
  check_pair(pred, gt, "pixel_l1");
  return l1_term(pred, gt);
}

template <typename T>
Tensor<T> total_objective(const Tensor<T>& pred, const Tensor<T>& gt,
                          const Tensor<T>& flow, const LossWeights<T>& w,
                          int angular_u, int angular_v) {
  require(w.lambda_g >= T(0) && w.lambda_e >= T(0) && w.lambda_tv >= T(0),
          "total_objective: loss weights must be non-negative");
  Tensor<T> total = add(scale(global_loss(pred, gt), w.lambda_g),
                        scale(local_loss(pred, gt, angular_u, angular_v),
                              w.lambda_e));
  if (w.lambda_tv > T(0))
    total = add(total, scale(tv_reg(flow), w.lambda_tv));
  return total;
}

#define LFSYN_INSTANTIATE_LOSSES(T)                                         \
  template Tensor<T> lf_mean(const Tensor<T>&);                             \
  template Tensor<T> lf_std(const Tensor<T>&);                              \
  template Tensor<T> global_loss(const Tensor<T>&, const Tensor<T>&);       \
  template Tensor<T> local_loss(const Tensor<T>&, const Tensor<T>&, int,    \
                                int);                                       \
  template Tensor<T> tv_reg(const Tensor<T>&);                              \
  template Tensor<T> pixel_l1(const Tensor<T>&, const Tensor<T>&);          \
  template Tensor<T> total_objective(const Tensor<T>&, const Tensor<T>&,    \
                                     const Tensor<T>&,                      \
                                     const LossWeights<T>&, int, int);

LFSYN_INSTANTIATE_LOSSES(float)
LFSYN_INSTANTIATE_LOSSES(double)

#undef LFSYN_INSTANTIATE_LOSSES

}  // namespace lfsyn
