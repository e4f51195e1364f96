// Copyright 2026 The topas developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA kernels over interleaved complex<double>. One __m256d holds two
// complex values as [re0 im0 re1 im1]. This file is the only TU compiled
// with -mavx2 -mfma; it must stay self-contained.

#include "topas/kernels_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace topas::kernels::avx2 {

namespace {

// (ar + i*ai) * v for two packed complex values.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d vs = _mm256_shuffle_pd(v, v, 0x5);  // swap re/im per complex
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vs));
}

}  // namespace

void axpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void rot2(std::size_t n, const cplx c[4], cplx* x, cplx* y) {
  const __m256d c0r = _mm256_set1_pd(c[0].real()), c0i = _mm256_set1_pd(c[0].imag());
  const __m256d c1r = _mm256_set1_pd(c[1].real()), c1i = _mm256_set1_pd(c[1].imag());
  const __m256d c2r = _mm256_set1_pd(c[2].real()), c2i = _mm256_set1_pd(c[2].imag());
  const __m256d c3r = _mm256_set1_pd(c[3].real()), c3i = _mm256_set1_pd(c[3].imag());
  double* xs = reinterpret_cast<double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    const __m256d nx =
        _mm256_add_pd(cmul_bcast(c0r, c0i, xv), cmul_bcast(c1r, c1i, yv));
    const __m256d ny =
        _mm256_add_pd(cmul_bcast(c2r, c2i, xv), cmul_bcast(c3r, c3i, yv));
    _mm256_storeu_pd(xs + 2 * i, nx);
    _mm256_storeu_pd(ys + 2 * i, ny);
  }
  for (; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = c[0] * xi + c[1] * yi;
    y[i] = c[2] * xi + c[3] * yi;
  }
}

namespace {

// Shared body for both dot products; Conj flips the sign pattern.
template <bool Conj>
inline cplx dot_impl(std::size_t n, const cplx* x, const cplx* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    const __m256d xr = _mm256_movedup_pd(xv);         // [xr0 xr0 xr1 xr1]
    const __m256d xi = _mm256_permute_pd(xv, 0xF);    // [xi0 xi0 xi1 xi1]
    const __m256d yswap = _mm256_shuffle_pd(yv, yv, 0x5);
    const __m256d t = _mm256_mul_pd(xi, yswap);
    const __m256d p = Conj ? _mm256_fmsubadd_pd(xr, yv, t)
                           : _mm256_fmaddsub_pd(xr, yv, t);
    acc = _mm256_add_pd(acc, p);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re = lanes[0] + lanes[2];
  double im = lanes[1] + lanes[3];
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    if (Conj) {
      re += xr * yr + xi * yi;
      im += xr * yi - xi * yr;
    } else {
      re += xr * yr - xi * yi;
      im += xr * yi + xi * yr;
    }
  }
  return {re, im};
}

}  // namespace

cplx dot_u(std::size_t n, const cplx* x, const cplx* y) {
  return dot_impl<false>(n, x, y);
}

cplx dot_c(std::size_t n, const cplx* x, const cplx* y) {
  return dot_impl<true>(n, x, y);
}

namespace {

inline void accum_row(std::size_t n, cplx a, const cplx* brow, cplx* crow) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* bs = reinterpret_cast<const double*>(brow);
  double* cs = reinterpret_cast<double*>(crow);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d bv = _mm256_loadu_pd(bs + 2 * j);
    const __m256d cv = _mm256_loadu_pd(cs + 2 * j);
    _mm256_storeu_pd(cs + 2 * j, _mm256_add_pd(cv, cmul_bcast(ar, ai, bv)));
  }
  for (; j < n; ++j) {
    crow[j] += a * brow[j];
  }
}

}  // namespace

void matmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  std::fill(out, out + n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      accum_row(n, a[i * n + k], b + k * n, out + i * n);
    }
  }
}

void matmul_adj_l(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  std::fill(out, out + n * n, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      accum_row(n, std::conj(a[k * n + i]), b + k * n, out + i * n);
    }
  }
}

const Ops kOps = {axpy, rot2, dot_u, dot_c, matmul, matmul_adj_l};

}  // namespace topas::kernels::avx2

#endif  // x86-64
