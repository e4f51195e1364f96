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
#include "topas/rng.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace topas {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  CMatrix(std::size_t dim, std::vector<cplx> entries);

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }
  cplx* row(std::size_t r) { return a_.data() + r * dim_; }
  const cplx* row(std::size_t r) const { return a_.data() + r * dim_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  CMatrix mul(const CMatrix& rhs) const;      // this * rhs
  CMatrix adj_mul(const CMatrix& rhs) const;  // adjoint(this) * rhs
  CMatrix adjoint() const;

  /// max_ij |adjoint(U) U - I|
  double unitarity_defect() const;

  double max_abs_diff(const CMatrix& other) const;

  bool operator==(const CMatrix& other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

/// CMatrix whose unitarity is checked at construction (max-norm defect
/// below `tol`, default 1e-10).
class UnitaryMatrix : public CMatrix {
public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(CMatrix m, double tol = 1e-10);

  static UnitaryMatrix identity(std::size_t dim) {
    return UnitaryMatrix(CMatrix::identity(dim));
  }
};

/// Tr(adjoint(a) * b) without forming the product.
cplx trace_adjoint(const CMatrix& a, const CMatrix& b);

/// Phase-invariant distance sqrt(max(0, 1 - |Tr(a^dag b)|^2 / N^2)),
/// in [0, 1]; 0 iff a and b agree up to a global phase.
double hs_distance(const CMatrix& a, const CMatrix& b);

/// Haar-random unitary: complex Gaussian matrix orthonormalized by
/// modified Gram-Schmidt (positive-diagonal QR convention).
UnitaryMatrix random_unitary(std::size_t dim, Rng& rng);

// Debug dump format: 8-byte magic "TOPASMX1", little-endian u64 dimension,
// then dim*dim complex entries as interleaved little-endian float64 re,im.
void save_matrix(const CMatrix& m, const std::string& path);
CMatrix load_matrix(const std::string& path);

}  // namespace topas
