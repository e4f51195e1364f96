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

#include "topas/circuit.hpp"
#include "topas/matrix.hpp"

#include <array>
#include <span>

// Exact dense simulation used as the verification oracle.
//
// Basis convention, used everywhere in this project: qubit 0 is the MOST
// significant bit of a basis-state index. For width n, qubit q owns bit
// position (n-1-q) of the index. A circuit's unitary is the product of its
// gate unitaries with the first-executed gate rightmost:
//   U = G_m * ... * G_2 * G_1.
//
// U3(theta, phi, lambda) is the standard generic rotation
//   [[cos(t/2),            -e^{i l} sin(t/2)],
//    [e^{i p} sin(t/2),  e^{i(p+l)} cos(t/2)]].

namespace topas {

inline constexpr int kDefaultSimulationCap = 10;  // qubits; 1024 x 1024 dense

/// 2x2 matrix of a U3 gate, row-major.
std::array<cplx, 4> u3_matrix(double theta, double phi, double lambda);

/// Partial derivatives of u3_matrix with respect to theta, phi, lambda.
std::array<std::array<cplx, 4>, 3> u3_matrix_derivatives(double theta,
                                                         double phi,
                                                         double lambda);

/// Full 2^n-dimensional unitary acting as `g` on its qubits, identity
/// elsewhere.
UnitaryMatrix gate_unitary(const Gate& g, int n,
                           int cap = kDefaultSimulationCap);

/// m <- gate_unitary(g) * m, computed in place in O(dim^2).
void apply_gate(CMatrix& m, const Gate& g, int n);

/// Product of per-gate unitaries in execution order. Throws WidthError
/// above the cap.
UnitaryMatrix circuit_unitary(const Circuit& c,
                              int cap = kDefaultSimulationCap);

/// Permutation matrix P with P |x>_logical = |x placed>_physical for the
/// assignment qubit q -> wire placement[q] (an n-element bijection).
UnitaryMatrix qubit_permutation_matrix(int n, std::span<const int> placement);

}  // namespace topas
