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

#include "topas/error.hpp"
#include "topas/kernels_impl.hpp"

#include <atomic>

namespace topas::kernels {

namespace {

bool avx2_supported() {
#if defined(TOPAS_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool neon_supported() {
#if defined(TOPAS_HAVE_NEON_BUILD)
  return true;  // NEON is baseline on aarch64
#else
  return false;
#endif
}

Isa pick_default() {
  if (avx2_supported()) return Isa::Avx2;
  if (neon_supported()) return Isa::Neon;
  return Isa::Scalar;
}

const Ops* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar::kOps;
    case Isa::Avx2:
#if defined(TOPAS_HAVE_AVX2_BUILD)
      return &avx2::kOps;
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(TOPAS_HAVE_NEON_BUILD)
      return &neon::kOps;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct State {
  std::atomic<const Ops*> ops;
  std::atomic<Isa> isa;
  State() : ops(table_for(pick_default())), isa(pick_default()) {}
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Isa active_isa() { return state().isa.load(std::memory_order_relaxed); }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return avx2_supported();
    case Isa::Neon:
      return neon_supported();
  }
  return false;
}

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(std::string("instruction set not available on this host: ") +
                isa_name(isa));
  }
  state().ops.store(table_for(isa), std::memory_order_relaxed);
  state().isa.store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "?";
}

void axpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  state().ops.load(std::memory_order_relaxed)->axpy(n, a, x, y);
}

void rot2(std::size_t n, const cplx c[4], cplx* x, cplx* y) {
  state().ops.load(std::memory_order_relaxed)->rot2(n, c, x, y);
}

cplx dot_u(std::size_t n, const cplx* x, const cplx* y) {
  return state().ops.load(std::memory_order_relaxed)->dot_u(n, x, y);
}

cplx dot_c(std::size_t n, const cplx* x, const cplx* y) {
  return state().ops.load(std::memory_order_relaxed)->dot_c(n, x, y);
}

void matmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  state().ops.load(std::memory_order_relaxed)->matmul(n, a, b, out);
}

void matmul_adj_l(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
  state().ops.load(std::memory_order_relaxed)->matmul_adj_l(n, a, b, out);
}

}  // namespace topas::kernels
