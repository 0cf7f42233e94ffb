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

#include <cstdint>

namespace lfsyn {

// Deterministic register-tiled matrix products. Every output element is
// owned by exactly one thread and accumulated in a fixed order, so results
// are bit-identical across runs and thread counts.

/// C[M,N] += A[M,K] * B[K,N], all row-major and densely packed.
template <typename T>
void gemm_nn(int64_t m, int64_t k, int64_t n, const T* a, const T* b, T* c);

/// C[M,N] += A[M,L] * B[N,L]^T, i.e. C[i,j] += dot(A row i, B row j).
template <typename T>
void gemm_nt(int64_t m, int64_t l, int64_t n, const T* a, const T* b, T* c);

}  // namespace lfsyn
