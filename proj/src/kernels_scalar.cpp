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

// Scalar reference kernels. These define the semantics the SIMD variants
// are equivalence-tested against.

#include "topas/kernels_impl.hpp"

#include <algorithm>

namespace topas::kernels::scalar {

void axpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void rot2(std::size_t n, const cplx c[4], cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = c[0] * xi + c[1] * yi;
    y[i] = c[2] * xi + c[3] * yi;
  }
}

cplx dot_u(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

cplx dot_c(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void matmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  std::fill(out, out + n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      cplx* crow = out + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
}

void matmul_adj_l(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  std::fill(out, out + n * n, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    const cplx* arow = a + k * n;
    const cplx* brow = b + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx aki = std::conj(arow[i]);
      cplx* crow = out + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aki * brow[j];
      }
    }
  }
}

const Ops kOps = {axpy, rot2, dot_u, dot_c, matmul, matmul_adj_l};

}  // namespace topas::kernels::scalar
