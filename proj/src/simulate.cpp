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

#include "topas/simulate.hpp"

#include "topas/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace topas {

std::array<cplx, 4> u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx el = std::polar(1.0, lambda);
  const cplx ep = std::polar(1.0, phi);
  return {cplx{c, 0.0}, -el * s, ep * s, ep * el * c};
}

std::array<std::array<cplx, 4>, 3> u3_matrix_derivatives(double theta,
                                                         double phi,
                                                         double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx el = std::polar(1.0, lambda);
  const cplx ep = std::polar(1.0, phi);
  const cplx i{0.0, 1.0};
  std::array<std::array<cplx, 4>, 3> d;
  d[0] = {cplx{-s / 2, 0.0}, -el * (c / 2), ep * (c / 2), -ep * el * (s / 2)};
  d[1] = {cplx{0.0, 0.0}, cplx{0.0, 0.0}, i * ep * s, i * ep * el * c};
  d[2] = {cplx{0.0, 0.0}, -i * el * s, cplx{0.0, 0.0}, i * ep * el * c};
  return d;
}

namespace {

void check_width(int n, int cap) {
  if (n > cap) {
    throw WidthError("circuit width " + std::to_string(n) +
                     " exceeds simulation cap " + std::to_string(cap));
  }
  if (n < 1) throw WidthError("need at least one qubit");
}

inline std::size_t bit_of(int n, int q) {
  // Qubit 0 is the most significant bit.
  return std::size_t{1} << (n - 1 - q);
}

void apply_u3_rows(CMatrix& m, int n, int q, const std::array<cplx, 4>& u) {
  const std::size_t dim = m.dim();
  const std::size_t b = bit_of(n, q);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & b) continue;
    kernels::rot2(dim, u.data(), m.row(r), m.row(r | b));
  }
}

void apply_cnot_rows(CMatrix& m, int n, int control, int target) {
  const std::size_t dim = m.dim();
  const std::size_t bc = bit_of(n, control);
  const std::size_t bt = bit_of(n, target);
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & bc) && !(r & bt)) {
      std::swap_ranges(m.row(r), m.row(r) + dim, m.row(r | bt));
    }
  }
}

void apply_swap_rows(CMatrix& m, int n, int a, int b) {
  const std::size_t dim = m.dim();
  const std::size_t ba = bit_of(n, a);
  const std::size_t bb = bit_of(n, b);
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & ba) && !(r & bb)) {
      std::swap_ranges(m.row(r), m.row(r) + dim, m.row((r ^ ba) | bb));
    }
  }
}

}  // namespace

void apply_gate(CMatrix& m, const Gate& g, int n) {
  switch (g.kind) {
    case Gate::Kind::U3:
      apply_u3_rows(m, n, g.q0, u3_matrix(g.theta, g.phi, g.lambda));
      break;
    case Gate::Kind::Cnot:
      apply_cnot_rows(m, n, g.q0, g.q1);
      break;
    case Gate::Kind::Swap:
      apply_swap_rows(m, n, g.q0, g.q1);
      break;
  }
}

UnitaryMatrix gate_unitary(const Gate& g, int n, int cap) {
  check_width(n, cap);
  CMatrix m = CMatrix::identity(std::size_t{1} << n);
  apply_gate(m, g, n);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix circuit_unitary(const Circuit& c, int cap) {
  check_width(c.width, cap);
  CMatrix m = CMatrix::identity(std::size_t{1} << c.width);
  for (const Gate& g : c.gates) {
    apply_gate(m, g, c.width);
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix qubit_permutation_matrix(int n, std::span<const int> placement) {
  if (static_cast<int>(placement.size()) != n) {
    throw DimensionError("placement size must equal width");
  }
  const std::size_t dim = std::size_t{1} << n;
  CMatrix p(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) {
      if (x & bit_of(n, q)) y |= bit_of(n, placement[q]);
    }
    p(y, x) = 1.0;
  }
  return UnitaryMatrix(std::move(p));
}

}  // namespace topas
