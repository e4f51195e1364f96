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

#include "topas/graph.hpp"

#include <string>
#include <vector>

namespace topas {

// Gate set: U3 single-qubit rotations and CNOT, with SWAP admitted
// transiently (it always decomposes into 3 CNOTs).
struct Gate {
  enum class Kind { U3, Cnot, Swap };

  Kind kind = Kind::U3;
  int q0 = 0;       // U3 target / CNOT control / SWAP first
  int q1 = -1;      // CNOT target / SWAP second; unused for U3
  double theta = 0.0, phi = 0.0, lambda = 0.0;  // U3 angles (radians)
  int tag = -1;     // partition id instrumentation; -1 = untagged

  static Gate u3(int q, double theta, double phi, double lambda, int tag = -1) {
    return Gate{Kind::U3, q, -1, theta, phi, lambda, tag};
  }
  static Gate cnot(int control, int target, int tag = -1) {
    return Gate{Kind::Cnot, control, target, 0.0, 0.0, 0.0, tag};
  }
  static Gate swap(int a, int b, int tag = -1) {
    return Gate{Kind::Swap, a, b, 0.0, 0.0, 0.0, tag};
  }

  bool two_qubit() const { return kind != Kind::U3; }

  /// Identity up to the instrumentation tag.
  bool same_operation(const Gate& other) const {
    return kind == other.kind && q0 == other.q0 && q1 == other.q1 &&
           theta == other.theta && phi == other.phi && lambda == other.lambda;
  }
};

struct CircuitStats {
  int cnot_count = 0;  // SWAP counts as 3
  int depth = 0;
  int width = 0;
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int width) : width(width) {}
  Circuit(int width, std::vector<Gate> gates);

  void push(Gate g);  // validates indices against width

  bool same_gates(const Circuit& other) const;
};

CircuitStats stats(const Circuit& c);

/// Replace every SWAP(a,b) in place by CNOT(a,b) CNOT(b,a) CNOT(a,b).
Circuit decompose_swaps(const Circuit& c);

/// Qubit-interaction graph: edge weight = number of 2-qubit gates on the
/// pair (a SWAP contributes 1 to its pair).
WeightedGraph connectivity_graph(const Circuit& c);

/// Cancel adjacent identical CNOT pairs (no intervening gate on either
/// qubit), repeated to a fixed point. Optional pre-pass; nothing else.
Circuit cancel_adjacent_cnots(const Circuit& c);

}  // namespace topas
