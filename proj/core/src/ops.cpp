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

#include "lfsyn/ops.hpp"

#include <cmath>

namespace lfsyn {

namespace {
template <typename T>
using NodePtr = std::shared_ptr<detail::TensorNode<T>>;

template <typename T>
void check_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* op) {
  require(a.shape() == b.shape(),
          std::string(op) + ": shape mismatch " + shape_str(a.shape()) +
              " vs " + shape_str(b.shape()));
}
}  // namespace

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  check_same_shape(a, b, "add");
  const auto& av = a.values();
  const auto& bv = b.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] + bv[i];
  NodePtr<T> an = a.node(), bn = b.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a, b},
      [an, bn](detail::TensorNode<T>& n) {
        if (an->requires_grad) {
          auto& g = an->ensure_grad();
          for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i];
        }
        if (bn->requires_grad) {
          auto& g = bn->ensure_grad();
          for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i];
        }
      });
}

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
  check_same_shape(a, b, "sub");
  const auto& av = a.values();
  const auto& bv = b.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] - bv[i];
  NodePtr<T> an = a.node(), bn = b.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a, b},
      [an, bn](detail::TensorNode<T>& n) {
        if (an->requires_grad) {
          auto& g = an->ensure_grad();
          for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i];
        }
        if (bn->requires_grad) {
          auto& g = bn->ensure_grad();
          for (size_t i = 0; i < g.size(); ++i) g[i] -= n.grad[i];
        }
      });
}

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
  check_same_shape(a, b, "mul");
  const auto& av = a.values();
  const auto& bv = b.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  NodePtr<T> an = a.node(), bn = b.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a, b},
      [an, bn](detail::TensorNode<T>& n) {
        if (an->requires_grad) {
          auto& g = an->ensure_grad();
          const auto& other = bn->values;
          for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i] * other[i];
        }
        if (bn->requires_grad) {
          auto& g = bn->ensure_grad();
          const auto& other = an->values;
          for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i] * other[i];
        }
      });
}

template <typename T>
Tensor<T> scale(const Tensor<T>& a, T c) {
  const auto& av = a.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] * c;
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a}, [an, c](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        for (size_t i = 0; i < g.size(); ++i) g[i] += n.grad[i] * c;
      });
}

template <typename T>
Tensor<T> square(const Tensor<T>& a) {
  const auto& av = a.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] * av[i];
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a}, [an](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        const auto& av = an->values;
        for (size_t i = 0; i < g.size(); ++i) g[i] += T(2) * av[i] * n.grad[i];
      });
}

template <typename T>
Tensor<T> sqrt(const Tensor<T>& a) {
  const auto& av = a.values();
  std::vector<T> out(av.size());
  for (size_t i = 0; i < out.size(); ++i) {
    require(av[i] >= T(0), "sqrt: negative input");
    out[i] = std::sqrt(av[i]);
  }
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a}, [an](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        for (size_t i = 0; i < g.size(); ++i) {
          const T y = n.values[i];
          if (y > T(0)) g[i] += n.grad[i] / (T(2) * y);
        }
      });
}

template <typename T>
Tensor<T> abs(const Tensor<T>& a) {
  const auto& av = a.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] < T(0) ? -av[i] : av[i];
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a}, [an](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        const auto& av = an->values;
        for (size_t i = 0; i < g.size(); ++i) {
          if (av[i] > T(0))
            g[i] += n.grad[i];
          else if (av[i] < T(0))
            g[i] -= n.grad[i];
        }
      });
}

template <typename T>
Tensor<T> relu(const Tensor<T>& a) {
  const auto& av = a.values();
  std::vector<T> out(av.size());
#pragma omp simd
  for (size_t i = 0; i < out.size(); ++i) out[i] = av[i] > T(0) ? av[i] : T(0);
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a}, [an](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        const auto& av = an->values;
        for (size_t i = 0; i < g.size(); ++i)
          if (av[i] > T(0)) g[i] += n.grad[i];
      });
}

template <typename T>
Tensor<T> sum(const Tensor<T>& a) {
  const auto& av = a.values();
  T acc = T(0);
  for (size_t i = 0; i < av.size(); ++i) acc += av[i];
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      Shape{}, {acc}, {a}, [an](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        const T gv = n.grad[0];
        for (size_t i = 0; i < g.size(); ++i) g[i] += gv;
      });
}

template <typename T>
Tensor<T> mean(const Tensor<T>& a) {
  const auto& av = a.values();
  T acc = T(0);
  for (size_t i = 0; i < av.size(); ++i) acc += av[i];
  const T inv = T(1) / static_cast<T>(av.size());
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      Shape{}, {acc * inv}, {a}, [an, inv](detail::TensorNode<T>& n) {
        auto& g = an->ensure_grad();
        const T gv = n.grad[0] * inv;
        for (size_t i = 0; i < g.size(); ++i) g[i] += gv;
      });
}

namespace {
template <typename T>
Tensor<T> reduce_axis0(const Tensor<T>& a, bool take_mean) {
  require(a.rank() >= 1, "reduce_axis0: scalar input");
  const int64_t n = a.dim(0);
  const int64_t inner = a.numel() / n;
  const T w = take_mean ? T(1) / static_cast<T>(n) : T(1);
  const auto& av = a.values();
  std::vector<T> out(inner, T(0));
  for (int64_t r = 0; r < n; ++r) {
    const T* src = av.data() + r * inner;
#pragma omp simd
    for (int64_t j = 0; j < inner; ++j) out[j] += src[j];
  }
  if (take_mean)
    for (int64_t j = 0; j < inner; ++j) out[j] *= w;
  Shape os(a.shape().begin() + 1, a.shape().end());
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      std::move(os), std::move(out), {a},
      [an, n, inner, w](detail::TensorNode<T>& nd) {
        auto& g = an->ensure_grad();
        for (int64_t r = 0; r < n; ++r) {
          T* dst = g.data() + r * inner;
#pragma omp simd
          for (int64_t j = 0; j < inner; ++j) dst[j] += nd.grad[j] * w;
        }
      });
}
}  // namespace

template <typename T>
Tensor<T> sum_axis0(const Tensor<T>& a) {
  return reduce_axis0(a, false);
}

template <typename T>
Tensor<T> mean_axis0(const Tensor<T>& a) {
  return reduce_axis0(a, true);
}

template <typename T>
Tensor<T> sub_broadcast0(const Tensor<T>& a, const Tensor<T>& b) {
  require(a.rank() == b.rank() + 1 &&
              std::equal(b.shape().begin(), b.shape().end(),
                         a.shape().begin() + 1),
          "sub_broadcast0: " + shape_str(b.shape()) +
              " does not broadcast along " + shape_str(a.shape()));
  const int64_t n = a.dim(0);
  const int64_t inner = a.numel() / n;
  const auto& av = a.values();
  const auto& bv = b.values();
  std::vector<T> out(av.size());
  for (int64_t r = 0; r < n; ++r) {
    const T* src = av.data() + r * inner;
    T* dst = out.data() + r * inner;
#pragma omp simd
    for (int64_t j = 0; j < inner; ++j) dst[j] = src[j] - bv[j];
  }
  NodePtr<T> an = a.node(), bn = b.node();
  return Tensor<T>::make_node(
      a.shape(), std::move(out), {a, b},
      [an, bn, n, inner](detail::TensorNode<T>& nd) {
        if (an->requires_grad) {
          auto& g = an->ensure_grad();
          for (size_t i = 0; i < g.size(); ++i) g[i] += nd.grad[i];
        }
        if (bn->requires_grad) {
          auto& g = bn->ensure_grad();
          for (int64_t r = 0; r < n; ++r) {
            const T* src = nd.grad.data() + r * inner;
            for (int64_t j = 0; j < inner; ++j) g[j] -= src[j];
          }
        }
      });
}

template <typename T>
Tensor<T> concat_channels(const std::vector<Tensor<T>>& parts) {
  require(!parts.empty(), "concat_channels: no inputs");
  if (parts.size() == 1) return parts[0];
  const Shape& first = parts[0].shape();
  require(!first.empty(), "concat_channels: scalar input");
  int64_t lead = 0;
  for (const auto& p : parts) {
    require(p.rank() == first.size() &&
                std::equal(first.begin() + 1, first.end(),
                           p.shape().begin() + 1),
            "concat_channels: mismatched extents " + shape_str(p.shape()) +
                " vs " + shape_str(first));
    lead += p.dim(0);
  }
  Shape os = first;
  os[0] = lead;
  std::vector<T> out;
  out.reserve(numel(os));
  for (const auto& p : parts)
    out.insert(out.end(), p.values().begin(), p.values().end());

  std::vector<NodePtr<T>> nodes;
  for (const auto& p : parts) nodes.push_back(p.node());
  return Tensor<T>::make_node(
      std::move(os), std::move(out), parts,
      [nodes](detail::TensorNode<T>& nd) {
        size_t off = 0;
        for (const auto& pn : nodes) {
          const size_t len = pn->values.size();
          if (pn->requires_grad) {
            auto& g = pn->ensure_grad();
            const T* src = nd.grad.data() + off;
#pragma omp simd
            for (size_t i = 0; i < len; ++i) g[i] += src[i];
          }
          off += len;
        }
      });
}

template <typename T>
Tensor<T> slice_axis0(const Tensor<T>& a, int64_t begin, int64_t end) {
  require(a.rank() >= 1, "slice_axis0: scalar input");
  require(0 <= begin && begin < end && end <= a.dim(0),
          "slice_axis0: range [" + std::to_string(begin) + "," +
              std::to_string(end) + ") out of bounds for " +
              shape_str(a.shape()));
  const int64_t inner = a.numel() / a.dim(0);
  Shape os = a.shape();
  os[0] = end - begin;
  std::vector<T> out(a.values().begin() + begin * inner,
                     a.values().begin() + end * inner);
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      std::move(os), std::move(out), {a},
      [an, begin, inner](detail::TensorNode<T>& nd) {
        auto& g = an->ensure_grad();
        T* dst = g.data() + begin * inner;
#pragma omp simd
        for (size_t i = 0; i < nd.grad.size(); ++i) dst[i] += nd.grad[i];
      });
}

template <typename T>
Tensor<T> select_axis0(const Tensor<T>& a, std::vector<int64_t> indices) {
  require(a.rank() >= 1, "select_axis0: scalar input");
  require(!indices.empty(), "select_axis0: empty index list");
  const int64_t n = a.dim(0);
  const int64_t inner = a.numel() / n;
  for (int64_t i : indices)
    require(0 <= i && i < n, "select_axis0: index " + std::to_string(i) +
                                 " out of range for " + shape_str(a.shape()));
  Shape os = a.shape();
  os[0] = static_cast<int64_t>(indices.size());
  std::vector<T> out(indices.size() * inner);
  for (size_t r = 0; r < indices.size(); ++r)
    std::copy_n(a.values().data() + indices[r] * inner, inner,
                out.data() + r * inner);
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      std::move(os), std::move(out), {a},
      [an, idx = std::move(indices), inner](detail::TensorNode<T>& nd) {
        auto& g = an->ensure_grad();
        for (size_t r = 0; r < idx.size(); ++r) {
          T* dst = g.data() + idx[r] * inner;
          const T* src = nd.grad.data() + r * inner;
          for (int64_t j = 0; j < inner; ++j) dst[j] += src[j];
        }
      });
}

namespace {
// Forward difference along the innermost axis of each [h, w] plane when
// `along_x`, else along the second innermost.
template <typename T>
Tensor<T> diff_impl(const Tensor<T>& a, bool along_x) {
  require(a.rank() >= 2, "diff: rank must be >= 2");
  const int64_t w = a.dim(a.rank() - 1);
  const int64_t h = a.dim(a.rank() - 2);
  require((along_x ? w : h) >= 2, "diff: axis too short");
  const int64_t planes = a.numel() / (h * w);
  Shape os = a.shape();
  const int64_t oh = along_x ? h : h - 1;
  const int64_t ow = along_x ? w - 1 : w;
  os[a.rank() - 1] = ow;
  os[a.rank() - 2] = oh;
  const auto& av = a.values();
  std::vector<T> out(planes * oh * ow);
  for (int64_t p = 0; p < planes; ++p) {
    const T* src = av.data() + p * h * w;
    T* dst = out.data() + p * oh * ow;
    for (int64_t y = 0; y < oh; ++y)
#pragma omp simd
      for (int64_t x = 0; x < ow; ++x)
        dst[y * ow + x] = along_x ? src[y * w + x + 1] - src[y * w + x]
                                  : src[(y + 1) * w + x] - src[y * w + x];
  }
  NodePtr<T> an = a.node();
  return Tensor<T>::make_node(
      std::move(os), std::move(out), {a},
      [an, planes, h, w, oh, ow, along_x](detail::TensorNode<T>& nd) {
        auto& g = an->ensure_grad();
        for (int64_t p = 0; p < planes; ++p) {
          T* dst = g.data() + p * h * w;
          const T* src = nd.grad.data() + p * oh * ow;
          for (int64_t y = 0; y < oh; ++y)
            for (int64_t x = 0; x < ow; ++x) {
              const T gv = src[y * ow + x];
              if (along_x) {
                dst[y * w + x + 1] += gv;
                dst[y * w + x] -= gv;
              } else {
                dst[(y + 1) * w + x] += gv;
                dst[y * w + x] -= gv;
              }
            }
        }
      });
}
}  // namespace

template <typename T>
Tensor<T> diff_x(const Tensor<T>& a) {
  return diff_impl(a, true);
}

template <typename T>
Tensor<T> diff_y(const Tensor<T>& a) {
  return diff_impl(a, false);
}

#define LFSYN_INSTANTIATE_OPS(T)                                            \
  template Tensor<T> add(const Tensor<T>&, const Tensor<T>&);               \
  template Tensor<T> sub(const Tensor<T>&, const Tensor<T>&);               \
  template Tensor<T> mul(const Tensor<T>&, const Tensor<T>&);               \
  template Tensor<T> scale(const Tensor<T>&, T);                            \
  template Tensor<T> square(const Tensor<T>&);                              \
  template Tensor<T> sqrt(const Tensor<T>&);                                \
  template Tensor<T> abs(const Tensor<T>&);                                 \
  template Tensor<T> relu(const Tensor<T>&);                                \
  template Tensor<T> sum(const Tensor<T>&);                                 \
  template Tensor<T> mean(const Tensor<T>&);                                \
  template Tensor<T> sum_axis0(const Tensor<T>&);                           \
  template Tensor<T> mean_axis0(const Tensor<T>&);                          \
  template Tensor<T> sub_broadcast0(const Tensor<T>&, const Tensor<T>&);    \
  template Tensor<T> concat_channels(const std::vector<Tensor<T>>&);        \
  template Tensor<T> slice_axis0(const Tensor<T>&, int64_t, int64_t);       \
  template Tensor<T> select_axis0(const Tensor<T>&, std::vector<int64_t>);  \
  template Tensor<T> diff_x(const Tensor<T>&);                              \
  template Tensor<T> diff_y(const Tensor<T>&);

LFSYN_INSTANTIATE_OPS(float)
LFSYN_INSTANTIATE_OPS(double)

#undef LFSYN_INSTANTIATE_OPS

}  // namespace lfsyn
