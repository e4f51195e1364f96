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

#include "topas/matrix.hpp"

#include "topas/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace topas {

static_assert(std::endian::native == std::endian::little,
              "matrix dump format assumes a little-endian host");

CMatrix::CMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim * dim) {
    throw DimensionError("matrix entry count does not match dimension");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::mul(const CMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionError("matmul dimension mismatch");
  CMatrix out(dim_);
  kernels::matmul(dim_, data(), rhs.data(), out.data());
  return out;
}

CMatrix CMatrix::adj_mul(const CMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionError("matmul dimension mismatch");
  CMatrix out(dim_);
  kernels::matmul_adj_l(dim_, data(), rhs.data(), out.data());
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

double CMatrix::unitarity_defect() const {
  const CMatrix p = adj_mul(*this);
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      worst = std::max(worst, std::abs(p(r, c) - want));
    }
  }
  return worst;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  }
  return worst;
}

UnitaryMatrix::UnitaryMatrix(CMatrix m, double tol) : CMatrix(std::move(m)) {
  const double defect = unitarity_defect();
  if (!(defect < tol)) {
    throw Error("matrix is not unitary (defect " + std::to_string(defect) +
                ")");
  }
}

cplx trace_adjoint(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace dimension mismatch");
  // Tr(a^dag b) equals the Frobenius inner product of the flattened arrays.
  return kernels::dot_c(a.dim() * a.dim(), a.data(), b.data());
}

double hs_distance(const CMatrix& a, const CMatrix& b) {
  const double n = static_cast<double>(a.dim());
  const cplx tr = trace_adjoint(a, b);
  const double f = 1.0 - std::norm(tr) / (n * n);
  if (f > 1e-10 || std::abs(tr) == 0.0) {
    return std::sqrt(std::max(0.0, f));
  }
  // Near coincidence 1 - |tr|^2/N^2 loses everything to cancellation, so
  // measure the phase-aligned residual instead: with S = |a - p b|_F^2 and
  // p = conj(tr)/|tr|, exactly d^2 = S/N - S^2/(4 N^2).
  const cplx phase = std::conj(tr) / std::abs(tr);
  double s = 0.0;
  const std::size_t total = a.dim() * a.dim();
  for (std::size_t i = 0; i < total; ++i) {
    s += std::norm(a.data()[i] - phase * b.data()[i]);
  }
  return std::sqrt(std::max(0.0, s / n - s * s / (4.0 * n * n)));
}

UnitaryMatrix random_unitary(std::size_t dim, Rng& rng) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    m.data()[i] = cplx{rng.normal(), rng.normal()};
  }
  // Modified Gram-Schmidt over columns, with one reorthogonalization pass.
  for (std::size_t c = 0; c < dim; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        cplx proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(m(r, p)) * m(r, c);
        for (std::size_t r = 0; r < dim; ++r) m(r, c) -= proj * m(r, p);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(m(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) /= nrm;
  }
  return UnitaryMatrix(std::move(m));
}

namespace {
constexpr char kMagic[8] = {'T', 'O', 'P', 'A', 'S', 'M', 'X', '1'};
}

void save_matrix(const CMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  const std::uint64_t dim = m.dim();
  out.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(m.dim() * m.dim() * sizeof(cplx)));
  if (!out) throw Error("write failed: " + path);
}

CMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error("bad matrix file magic: " + path);
  }
  std::uint64_t dim = 0;
  in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
  if (!in || dim == 0 || dim > (1u << 15)) {
    throw Error("bad matrix dimension in: " + path);
  }
  CMatrix m(dim);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(dim * dim * sizeof(cplx)));
  if (!in) throw Error("truncated matrix file: " + path);
  return m;
}

}  // namespace topas
