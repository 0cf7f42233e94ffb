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

#include <functional>
#include <memory>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lfsyn/common.hpp"

namespace lfsyn {

namespace detail {

template <typename T>
struct TensorNode {
  Shape shape;
  std::vector<T> values;
  std::vector<T> grad;  // allocated lazily, same length as values
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorNode<T>>> parents;
  // Reads this node's grad and accumulates into the parents' grads.
  std::function<void(TensorNode<T>&)> backward_fn;

  std::vector<T>& ensure_grad() {
    if (grad.size() != values.size()) grad.assign(values.size(), T(0));
    return grad;
  }
};

}  // namespace detail

/// Dense N-dimensional array participating in a reverse-mode
/// differentiation graph. Copies are shallow; the underlying node is
/// shared. Values of interior graph nodes are treated as immutable once
/// created; only leaves (parameters) are mutated, via mutable_values().
template <typename T>
class Tensor {
 public:
  using Node = detail::TensorNode<T>;

  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false) {
    return from_data(std::move(shape), {}, requires_grad, true);
  }

  static Tensor full(Shape shape, T value, bool requires_grad = false) {
    auto t = zeros(std::move(shape), requires_grad);
    std::fill(t.node_->values.begin(), t.node_->values.end(), value);
    return t;
  }

  static Tensor scalar(T value) {
    auto t = zeros(Shape{});
    t.node_->values[0] = value;
    return t;
  }

  static Tensor from_vector(Shape shape, std::vector<T> values,
                            bool requires_grad = false) {
    require(lfsyn::numel(shape) == static_cast<int64_t>(values.size()),
            "Tensor: data length " + std::to_string(values.size()) +
                " does not match shape " + shape_str(shape));
    return from_data(std::move(shape), std::move(values), requires_grad, false);
  }

  /// Internal: creates an op result wired into the graph. The node requires
  /// grad iff any parent does; otherwise parents and backward_fn are dropped
  /// and the result is a plain constant.
  static Tensor make_node(Shape shape, std::vector<T> values,
                          std::vector<Tensor> parents,
                          std::function<void(Node&)> backward_fn) {
    Tensor t = from_vector(std::move(shape), std::move(values));
    bool needs = false;
    for (const auto& p : parents) needs |= p.requires_grad();
    if (needs) {
      t.node_->requires_grad = true;
      t.node_->parents.reserve(parents.size());
      for (auto& p : parents) t.node_->parents.push_back(p.node_);
      t.node_->backward_fn = std::move(backward_fn);
    }
    return t;
  }

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  size_t rank() const { return node_->shape.size(); }
  int64_t dim(size_t i) const { return node_->shape[i]; }
  int64_t numel() const { return static_cast<int64_t>(node_->values.size()); }

  const std::vector<T>& values() const { return node_->values; }
  std::vector<T>& mutable_values() { return node_->values; }

  T item() const {
    require(numel() == 1, "item: tensor is not scalar, shape " +
                              shape_str(node_->shape));
    return node_->values[0];
  }

  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool v) { node_->requires_grad = v; }

  const std::vector<T>& grad() const { return node_->ensure_grad(); }
  void zero_grad() { node_->ensure_grad().assign(numel(), T(0)); }

  /// Reverse-mode accumulation from a scalar objective into the grads of
  /// every reachable tensor with requires_grad. Grads accumulate; callers
  /// zero parameter grads between steps.
  void backward() const {
    require(defined() && numel() == 1,
            "backward: objective must be a scalar tensor");
    std::vector<Node*> order;
    topo_order(order);
    node_->ensure_grad()[0] += T(1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Node* n = *it;
      if (n->backward_fn) n->backward_fn(*n);
    }
  }

  std::shared_ptr<Node> node() const { return node_; }

 private:
  static Tensor from_data(Shape shape, std::vector<T> values,
                          bool requires_grad, bool zero_fill) {
    for (int64_t d : shape)
      require(d > 0, "Tensor: non-positive extent in shape " + shape_str(shape));
    Tensor t;
    t.node_ = std::make_shared<Node>();
    t.node_->shape = std::move(shape);
    if (zero_fill)
      t.node_->values.assign(lfsyn::numel(t.node_->shape), T(0));
    else
      t.node_->values = std::move(values);
    t.node_->requires_grad = requires_grad;
    return t;
  }

  // Iterative post-order DFS over the requires_grad subgraph.
  void topo_order(std::vector<Node*>& order) const {
    std::unordered_set<Node*> visited;
    std::vector<std::pair<Node*, size_t>> stack;
    if (!node_->requires_grad) return;
    stack.emplace_back(node_.get(), 0);
    visited.insert(node_.get());
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      if (i < n->parents.size()) {
        Node* p = n->parents[i++].get();
        if (p->requires_grad && !visited.count(p)) {
          visited.insert(p);
          stack.emplace_back(p, 0);
        }
      } else {
        order.push_back(n);
        stack.pop_back();
      }
    }
  }

  std::shared_ptr<Node> node_;
};

}  // namespace lfsyn
