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

#pragma once

#include <complex>
#include <cstddef>

// Dense complex<double> kernels behind all matrix work in this project.
// Every operation has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup; set_isa()
// lets tests pin a variant. SIMD results may differ from scalar by normal
// FMA/reassociation rounding, never more.

namespace topas::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

Isa active_isa();
bool isa_available(Isa isa);
void set_isa(Isa isa);  // throws topas::Error when unavailable on this host
const char* isa_name(Isa isa);

/// y[i] += a * x[i] for i in [0, n)
void axpy(std::size_t n, cplx a, const cplx* x, cplx* y);

/// In-place 2x2 complex mix of two rows:
///   {x[i], y[i]} <- {c[0] x[i] + c[1] y[i], c[2] x[i] + c[3] y[i]}
void rot2(std::size_t n, const cplx c[4], cplx* x, cplx* y);

/// Unconjugated dot product: sum_i x[i] * y[i]
cplx dot_u(std::size_t n, const cplx* x, const cplx* y);

/// Conjugated dot product: sum_i conj(x[i]) * y[i]
cplx dot_c(std::size_t n, const cplx* x, const cplx* y);

/// out = a * b, n x n row-major; out must not alias a or b.
void matmul(std::size_t n, const cplx* a, const cplx* b, cplx* out);

/// out = adjoint(a) * b, n x n row-major; out must not alias a or b.
void matmul_adj_l(std::size_t n, const cplx* a, const cplx* b, cplx* out);

}  // namespace topas::kernels
