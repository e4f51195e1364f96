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

#include "topas/partition.hpp"

#include "topas/error.hpp"

#include <algorithm>
#include <sstream>

namespace topas {

int Partition::local_of(int global_qubit) const {
  const auto it = std::lower_bound(qubits.begin(), qubits.end(), global_qubit);
  if (it == qubits.end() || *it != global_qubit) {
    throw Error("qubit not in partition");
  }
  return static_cast<int>(it - qubits.begin());
}

std::vector<std::vector<int>> enumerate_groups(const WeightedGraph& g, int k) {
  if (k < 2) throw Error("partition width must be at least 2");
  return connected_vertex_sets(g.support(), k);
}

namespace {

struct ScanResult {
  int score = 0;
  int first_gate = -1;  // index of the first collected gate
  std::vector<int> collected;
};

// Collect the frontier prefix of `group`: walk unassigned gates in time
// order; a gate inside the group is taken while none of its wires is cut,
// and any gate that touches the group without being taken cuts its wires.
ScanResult scan_group(const Circuit& c, const std::vector<char>& assigned,
                      const std::vector<char>& in_group) {
  ScanResult res;
  std::vector<char> cut(c.width, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (assigned[i]) continue;
    const Gate& g = c.gates[i];
    const bool a_in = in_group[g.q0];
    const bool b_in = g.two_qubit() && in_group[g.q1];
    if (!a_in && !b_in) continue;
    const bool inside = g.two_qubit() ? (a_in && b_in) : a_in;
    const bool blocked =
        cut[g.q0] || (g.two_qubit() && in_group[g.q1] && cut[g.q1]);
    if (inside && !blocked) {
      res.collected.push_back(static_cast<int>(i));
      if (res.first_gate < 0) res.first_gate = static_cast<int>(i);
      ++res.score;
    } else {
      // Crossing or already-cut wire: everything later on these wires
      // belongs to a later partition.
      if (a_in) cut[g.q0] = 1;
      if (b_in) cut[g.q1] = 1;
    }
  }
  return res;
}

WeightedGraph remaining_connectivity(const Circuit& c,
                                     const std::vector<char>& assigned) {
  WeightedGraph g;
  g.order = c.width;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (assigned[i]) continue;
    const Gate& gate = c.gates[i];
    if (gate.two_qubit()) g.add(gate.q0, gate.q1);
  }
  return g;
}

}  // namespace

PartitionedCircuit scan_partition(const Circuit& c, int k) {
  if (k < 2) throw Error("partition width must be at least 2");
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::Swap) {
      throw Error("scan_partition expects a SWAP-free circuit");
    }
  }

  PartitionedCircuit pc;
  pc.width = c.width;
  pc.original = c;

  std::vector<char> assigned(c.gates.size(), 0);
  std::size_t remaining_two_qubit = 0;
  for (const Gate& g : c.gates) {
    if (g.two_qubit()) ++remaining_two_qubit;
  }

  while (remaining_two_qubit > 0) {
    const WeightedGraph conn = remaining_connectivity(c, assigned);
    const auto groups = enumerate_groups(conn, k);

    ScanResult best;
    std::vector<int> best_group;
    std::vector<char> in_group(c.width, 0);
    for (const auto& group : groups) {
      for (int q : group) in_group[q] = 1;
      ScanResult r = scan_group(c, assigned, in_group);
      for (int q : group) in_group[q] = 0;
      const bool better =
          r.score > best.score ||
          (r.score == best.score && !best_group.empty() &&
           (r.first_gate < best.first_gate ||
            (r.first_gate == best.first_gate && group < best_group)));
      if (better || best_group.empty()) {
        best = std::move(r);
        best_group = group;
      }
    }
    if (best.score == 0) {
      // Cannot happen: the earliest remaining 2-qubit gate always scores.
      throw Error("scan partitioner failed to make progress");
    }

    Partition p;
    p.id = static_cast<int>(pc.parts.size());
    p.qubits = best_group;
    p.sub = Circuit(static_cast<int>(best_group.size()));
    for (int gi : best.collected) {
      assigned[gi] = 1;
      const Gate& g = c.gates[gi];
      if (g.two_qubit()) --remaining_two_qubit;
      Gate local = g;
      local.q0 = p.local_of(g.q0);
      if (g.two_qubit()) local.q1 = p.local_of(g.q1);
      local.tag = p.id;
      p.sub.push(local);
    }
    pc.parts.push_back(std::move(p));
  }

  // Leftover single-qubit gates: one width-1 pass-through per qubit.
  std::vector<std::vector<int>> leftovers(c.width);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (!assigned[i]) leftovers[c.gates[i].q0].push_back(static_cast<int>(i));
  }
  for (int q = 0; q < c.width; ++q) {
    if (leftovers[q].empty()) continue;
    Partition p;
    p.id = static_cast<int>(pc.parts.size());
    p.qubits = {q};
    p.pass_through = true;
    p.sub = Circuit(1);
    for (int gi : leftovers[q]) {
      Gate local = c.gates[gi];
      local.q0 = 0;
      local.tag = p.id;
      p.sub.push(local);
    }
    pc.parts.push_back(std::move(p));
  }
  return pc;
}

PartitionNeighbors neighbor_partitions(const PartitionedCircuit& pc, int id) {
  if (id < 0 || id >= static_cast<int>(pc.parts.size())) {
    throw Error("invalid partition id");
  }
  PartitionNeighbors nb;
  for (int q : pc.parts[id].qubits) {
    for (int j = id - 1; j >= 0; --j) {
      const auto& qs = pc.parts[j].qubits;
      if (std::binary_search(qs.begin(), qs.end(), q)) {
        nb.preceding.insert(j);
        break;
      }
    }
    for (int j = id + 1; j < static_cast<int>(pc.parts.size()); ++j) {
      const auto& qs = pc.parts[j].qubits;
      if (std::binary_search(qs.begin(), qs.end(), q)) {
        nb.succeeding.insert(j);
        break;
      }
    }
  }
  return nb;
}

Circuit reassemble(const PartitionedCircuit& pc,
                   const std::vector<Circuit>* replacements) {
  if (replacements && replacements->size() != pc.parts.size()) {
    throw Error("one replacement slot per partition required");
  }
  Circuit out(pc.width);
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    const Partition& p = pc.parts[i];
    const Circuit& body = replacements ? (*replacements)[i] : p.sub;
    if (body.width != static_cast<int>(p.qubits.size())) {
      throw Error("replacement width does not match partition");
    }
    for (const Gate& g : body.gates) {
      Gate global = g;
      global.q0 = p.global_of(g.q0);
      if (g.two_qubit()) global.q1 = p.global_of(g.q1);
      global.tag = p.id;
      out.push(global);
    }
  }
  return out;
}

std::string partitions_to_json(const PartitionedCircuit& pc) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    const Partition& p = pc.parts[i];
    const CircuitStats s = stats(p.sub);
    const PartitionNeighbors nb =
        neighbor_partitions(pc, static_cast<int>(i));
    if (i) out << ",";
    out << "\n  {\"id\": " << p.id << ", \"qubits\": [";
    for (std::size_t q = 0; q < p.qubits.size(); ++q) {
      if (q) out << ",";
      out << p.qubits[q];
    }
    out << "], \"gates\": " << p.sub.gates.size()
        << ", \"cnots\": " << s.cnot_count << ", \"pass_through\": "
        << (p.pass_through ? "true" : "false") << ", \"preceding\": [";
    bool first = true;
    for (int j : nb.preceding) {
      if (!first) out << ",";
      out << j;
      first = false;
    }
    out << "], \"succeeding\": [";
    first = true;
    for (int j : nb.succeeding) {
      if (!first) out << ",";
      out << j;
      first = false;
    }
    out << "]}";
  }
  out << "\n]\n";
  return out.str();
}

}  // namespace topas
