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

#include <string>

namespace topas {

// OpenQASM 2.0 subset: the version header, optional include statements,
// exactly one quantum register, and gates u3/u/cx/swap/h/x/rz/ry/rx.
// h, x and the axis rotations are canonicalized to U3 on input:
//   h       -> U3(pi/2, 0, pi)
//   x       -> U3(pi, 0, pi)
//   rz(l)   -> U3(0, 0, l)        (phase convention; equal up to phase)
//   ry(t)   -> U3(t, 0, 0)
//   rx(t)   -> U3(t, -pi/2, pi/2)
// Anything else is rejected with a ParseError, never skipped.
Circuit parse_qasm(const std::string& text);

/// Inverse of parse_qasm up to gate-for-gate IR equality; angles are
/// printed with 17 significant digits so doubles round-trip exactly.
std::string emit_qasm(const Circuit& c);

Circuit read_qasm_file(const std::string& path);
void write_qasm_file(const Circuit& c, const std::string& path);

}  // namespace topas
