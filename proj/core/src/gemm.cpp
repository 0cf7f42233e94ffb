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

#include "lfsyn/gemm.hpp"

#include <algorithm>

namespace lfsyn {
namespace {

template <typename T>
constexpr int kNR = sizeof(T) == 4 ? 64 : 32;  // accumulator tile width
constexpr int kMR = 8;                         // accumulator tile height

// Full MRxNR tile: acc[r][i] += A[m0+r][k] * B[k][n0+i], k ascending.
template <typename T, int MR, int NR>
void tile_nn(const T* a, int64_t lda, const T* b, int64_t ldb, T* c,
             int64_t ldc, int64_t kk) {
  T acc[MR][NR];
  for (int r = 0; r < MR; ++r)
    for (int i = 0; i < NR; ++i) acc[r][i] = T(0);
  for (int64_t k = 0; k < kk; ++k) {
    const T* brow = b + k * ldb;
    for (int r = 0; r < MR; ++r) {
      const T av = a[r * lda + k];
#pragma omp simd
      for (int i = 0; i < NR; ++i) acc[r][i] += av * brow[i];
    }
  }
  for (int r = 0; r < MR; ++r)
    for (int i = 0; i < NR; ++i) c[r * ldc + i] += acc[r][i];
}

// Edge tile with runtime extents; same fixed k order per element.
template <typename T>
void tile_nn_edge(const T* a, int64_t lda, const T* b, int64_t ldb, T* c,
                  int64_t ldc, int64_t kk, int mr, int nr) {
  for (int r = 0; r < mr; ++r) {
    T* crow = c + r * ldc;
    const T* arow = a + r * lda;
    for (int64_t k = 0; k < kk; ++k) {
      const T av = arow[k];
      const T* brow = b + k * ldb;
#pragma omp simd
      for (int i = 0; i < nr; ++i) crow[i] += av * brow[i];
    }
  }
}

// Dot-product tile for the NT case with a fixed lane layout: lane j holds
// the partial sum over l = j (mod LANES); lanes are reduced in index order.
template <typename T, int MR, int NR, int LANES>
void tile_nt(const T* a, const T* b, T* c, int64_t ldc, int64_t ll, int mr,
             int nr) {
  T acc[MR][NR][LANES];
  for (int r = 0; r < mr; ++r)
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < LANES; ++j) acc[r][i][j] = T(0);
  int64_t l0 = 0;
  for (; l0 + LANES <= ll; l0 += LANES) {
    for (int r = 0; r < mr; ++r) {
      const T* arow = a + r * ll + l0;
      for (int i = 0; i < nr; ++i) {
        const T* brow = b + i * ll + l0;
#pragma omp simd
        for (int j = 0; j < LANES; ++j) acc[r][i][j] += arow[j] * brow[j];
      }
    }
  }
  for (; l0 < ll; ++l0) {
    const int j = static_cast<int>(l0 % LANES);
    for (int r = 0; r < mr; ++r)
      for (int i = 0; i < nr; ++i) acc[r][i][j] += a[r * ll + l0] * b[i * ll + l0];
  }
  for (int r = 0; r < mr; ++r)
    for (int i = 0; i < nr; ++i) {
      T s = T(0);
      for (int j = 0; j < LANES; ++j) s += acc[r][i][j];
      c[r * ldc + i] += s;
    }
}

}  // namespace

template <typename T>
void gemm_nn(int64_t m, int64_t k, int64_t n, const T* a, const T* b, T* c) {
  constexpr int NR = kNR<T>;
  const int64_t nblocks = (n + NR - 1) / NR;
#pragma omp parallel for schedule(static)
  for (int64_t nb = 0; nb < nblocks; ++nb) {
    const int64_t n0 = nb * NR;
    const int nr = static_cast<int>(std::min<int64_t>(NR, n - n0));
    int64_t m0 = 0;
    if (nr == NR) {
      for (; m0 + kMR <= m; m0 += kMR)
        tile_nn<T, kMR, NR>(a + m0 * k, k, b + n0, n, c + m0 * n + n0, n, k);
    }
    if (m0 < m || nr < NR)
      tile_nn_edge(a + m0 * k, k, b + n0, n, c + m0 * n + n0, n, k,
                   static_cast<int>(m - m0), nr);
  }
}

template <typename T>
void gemm_nt(int64_t m, int64_t l, int64_t n, const T* a, const T* b, T* c) {
  constexpr int MR = 4, NR = 4;
  constexpr int LANES = sizeof(T) == 4 ? 16 : 8;
  const int64_t nblocks = (n + NR - 1) / NR;
#pragma omp parallel for schedule(static)
  for (int64_t nb = 0; nb < nblocks; ++nb) {
    const int64_t n0 = nb * NR;
    const int nr = static_cast<int>(std::min<int64_t>(NR, n - n0));
    for (int64_t m0 = 0; m0 < m; m0 += MR) {
      const int mr = static_cast<int>(std::min<int64_t>(MR, m - m0));
      tile_nt<T, MR, NR, LANES>(a + m0 * l, b + n0 * l, c + m0 * n + n0, n, l,
                                mr, nr);
    }
  }
}

template void gemm_nn<float>(int64_t, int64_t, int64_t, const float*,
                             const float*, float*);
template void gemm_nn<double>(int64_t, int64_t, int64_t, const double*,
                              const double*, double*);
template void gemm_nt<float>(int64_t, int64_t, int64_t, const float*,
                             const float*, float*);
template void gemm_nt<double>(int64_t, int64_t, int64_t, const double*,
                              const double*, double*);

}  // namespace lfsyn
