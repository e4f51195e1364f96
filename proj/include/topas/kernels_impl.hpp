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

#include "topas/kernels.hpp"

// Internal: per-ISA function table shared between the kernel translation
// units and the dispatcher. Not part of the public API.

namespace topas::kernels {

struct Ops {
  void (*axpy)(std::size_t, cplx, const cplx*, cplx*);
  void (*rot2)(std::size_t, const cplx*, cplx*, cplx*);
  cplx (*dot_u)(std::size_t, const cplx*, const cplx*);
  cplx (*dot_c)(std::size_t, const cplx*, const cplx*);
  void (*matmul)(std::size_t, const cplx*, const cplx*, cplx*);
  void (*matmul_adj_l)(std::size_t, const cplx*, const cplx*, cplx*);
};

namespace scalar {
extern const Ops kOps;
}

#if defined(__x86_64__) || defined(_M_X64)
#define TOPAS_HAVE_AVX2_BUILD 1
namespace avx2 {
extern const Ops kOps;
}
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define TOPAS_HAVE_NEON_BUILD 1
namespace neon {
extern const Ops kOps;
}
#endif

}  // namespace topas::kernels
