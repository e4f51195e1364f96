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

// NEON kernels for aarch64. One float64x2_t holds a single complex value
// as [re im]; complex products are formed with a lane swap and a signed
// correction term since NEON has no addsub.

#include "topas/kernels_impl.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <algorithm>

namespace topas::kernels::neon {

namespace {

const float64x2_t kSignMulAdd = {-1.0, 1.0};  // plain complex product
const float64x2_t kSignConj = {1.0, -1.0};    // conj(x) * y accumulation

// (ar + i*ai) * v, with ar/ai broadcast across both lanes.
inline float64x2_t cmul_bcast(float64x2_t ar, float64x2_t ai, float64x2_t v) {
  const float64x2_t vs = vextq_f64(v, v, 1);  // [im re]
  const float64x2_t t = vmulq_f64(vmulq_f64(ai, vs), kSignMulAdd);
  return vfmaq_f64(t, ar, v);
}

}  // namespace

void axpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const float64x2_t ar = vdupq_n_f64(a.real());
  const float64x2_t ai = vdupq_n_f64(a.imag());
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xs + 2 * i);
    const float64x2_t yv = vld1q_f64(ys + 2 * i);
    vst1q_f64(ys + 2 * i, vaddq_f64(yv, cmul_bcast(ar, ai, xv)));
  }
}

void rot2(std::size_t n, const cplx c[4], cplx* x, cplx* y) {
  const float64x2_t c0r = vdupq_n_f64(c[0].real()), c0i = vdupq_n_f64(c[0].imag());
  const float64x2_t c1r = vdupq_n_f64(c[1].real()), c1i = vdupq_n_f64(c[1].imag());
  const float64x2_t c2r = vdupq_n_f64(c[2].real()), c2i = vdupq_n_f64(c[2].imag());
  const float64x2_t c3r = vdupq_n_f64(c[3].real()), c3i = vdupq_n_f64(c[3].imag());
  double* xs = reinterpret_cast<double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xs + 2 * i);
    const float64x2_t yv = vld1q_f64(ys + 2 * i);
    const float64x2_t nx =
        vaddq_f64(cmul_bcast(c0r, c0i, xv), cmul_bcast(c1r, c1i, yv));
    const float64x2_t ny =
        vaddq_f64(cmul_bcast(c2r, c2i, xv), cmul_bcast(c3r, c3i, yv));
    vst1q_f64(xs + 2 * i, nx);
    vst1q_f64(ys + 2 * i, ny);
  }
}

namespace {

template <bool Conj>
inline cplx dot_impl(std::size_t n, const cplx* x, const cplx* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  float64x2_t acc = vdupq_n_f64(0.0);
  const float64x2_t sign = Conj ? kSignConj : kSignMulAdd;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xs + 2 * i);
    const float64x2_t yv = vld1q_f64(ys + 2 * i);
    const float64x2_t xr = vdupq_laneq_f64(xv, 0);
    const float64x2_t xi = vdupq_laneq_f64(xv, 1);
    const float64x2_t yswap = vextq_f64(yv, yv, 1);
    const float64x2_t t = vmulq_f64(vmulq_f64(xi, yswap), sign);
    acc = vaddq_f64(acc, vfmaq_f64(t, xr, yv));
  }
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

inline void accum_row(std::size_t n, cplx a, const cplx* brow, cplx* crow) {
  const float64x2_t ar = vdupq_n_f64(a.real());
  const float64x2_t ai = vdupq_n_f64(a.imag());
  const double* bs = reinterpret_cast<const double*>(brow);
  double* cs = reinterpret_cast<double*>(crow);
  for (std::size_t j = 0; j < n; ++j) {
    const float64x2_t bv = vld1q_f64(bs + 2 * j);
    const float64x2_t cv = vld1q_f64(cs + 2 * j);
    vst1q_f64(cs + 2 * j, vaddq_f64(cv, cmul_bcast(ar, ai, bv)));
  }
}

}  // namespace

cplx dot_u(std::size_t n, const cplx* x, const cplx* y) {
  return dot_impl<false>(n, x, y);
}

cplx dot_c(std::size_t n, const cplx* x, const cplx* y) {
  return dot_impl<true>(n, x, y);
}

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

}  // namespace topas::kernels::neon

#endif  // aarch64
