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

#include "topas/circuit.hpp"

#include "topas/error.hpp"

#include <algorithm>

namespace topas {

Circuit::Circuit(int width, std::vector<Gate> gs) : width(width) {
  gates.reserve(gs.size());
  for (auto& g : gs) push(g);
}

void Circuit::push(Gate g) {
  if (g.q0 < 0 || g.q0 >= width) throw Error("gate qubit out of range");
  if (g.two_qubit()) {
    if (g.q1 < 0 || g.q1 >= width) throw Error("gate qubit out of range");
    if (g.q1 == g.q0) throw Error("two-qubit gate needs distinct qubits");
  }
  gates.push_back(g);
}

bool Circuit::same_gates(const Circuit& other) const {
  if (width != other.width || gates.size() != other.gates.size()) return false;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!gates[i].same_operation(other.gates[i])) return false;
  }
  return true;
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  s.width = c.width;
  std::vector<int> avail(c.width, 0);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        s.cnot_count += 1;
        break;
      case Gate::Kind::Swap:
        s.cnot_count += 3;
        break;
      case Gate::Kind::U3:
        break;
    }
    int t = avail[g.q0];
    if (g.two_qubit()) t = std::max(t, avail[g.q1]);
    ++t;
    avail[g.q0] = t;
    if (g.two_qubit()) avail[g.q1] = t;
    s.depth = std::max(s.depth, t);
  }
  return s;
}

Circuit decompose_swaps(const Circuit& c) {
  Circuit out(c.width);
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::Swap) {
      out.push(Gate::cnot(g.q0, g.q1, g.tag));
      out.push(Gate::cnot(g.q1, g.q0, g.tag));
      out.push(Gate::cnot(g.q0, g.q1, g.tag));
    } else {
      out.push(g);
    }
  }
  return out;
}

WeightedGraph connectivity_graph(const Circuit& c) {
  WeightedGraph g;
  g.order = c.width;
  for (const Gate& gate : c.gates) {
    if (gate.two_qubit()) g.add(gate.q0, gate.q1);
  }
  return g;
}

Circuit cancel_adjacent_cnots(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    // last[q]: index into `gates` of the most recent surviving gate on q.
    std::vector<int> last(c.width, -1);
    std::vector<char> dead(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      if (g.kind == Gate::Kind::Cnot) {
        const int la = last[g.q0], lb = last[g.q1];
        if (la >= 0 && la == lb && gates[la].same_operation(g)) {
          dead[la] = dead[i] = 1;
          changed = true;
          last[g.q0] = last[g.q1] = -1;
          continue;
        }
      }
      last[g.q0] = static_cast<int>(i);
      if (g.two_qubit()) last[g.q1] = static_cast<int>(i);
    }
    if (changed) {
      std::vector<Gate> next;
      next.reserve(gates.size());
      for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!dead[i]) next.push_back(gates[i]);
      }
      gates = std::move(next);
    }
  }
  Circuit out(c.width);
  for (auto& g : gates) out.push(g);
  return out;
}

}  // namespace topas
