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

#include "topas/sabre.hpp"

#include "topas/error.hpp"
#include "topas/rng.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace topas {

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<std::vector<int>> dist(
      g.order, std::vector<int>(g.order, std::numeric_limits<int>::max() / 4));
  for (int s = 0; s < g.order; ++s) {
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (dist[s][w] > dist[s][v] + 1) {
          dist[s][w] = dist[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

namespace {

// Routing state over one pass.
struct Router {
  const Circuit& c;
  const PhysicalTopology& phys;
  const RoutingParams& params;
  const std::vector<std::vector<int>>& dist;
  std::uint64_t seed;

  std::vector<int> l2p;  // logical -> physical
  std::vector<int> p2l;  // physical -> logical (-1 = unused)

  // Per-qubit program order: gate indices touching each logical qubit.
  std::vector<std::vector<int>> per_qubit;
  std::vector<std::size_t> pos;   // per-qubit cursor into per_qubit
  std::vector<char> executed;

  std::vector<Gate> out;          // physical gates, SWAPs not yet decomposed
  std::vector<int> inserted_swaps;  // indices into `out`
  std::vector<double> decay;

  Router(const Circuit& c, const PhysicalTopology& phys,
         const RoutingParams& params,
         const std::vector<std::vector<int>>& dist, const Placement& placement,
         std::uint64_t seed)
      : c(c), phys(phys), params(params), dist(dist), seed(seed),
        l2p(placement.phys_of), p2l(phys.graph.order, -1),
        per_qubit(c.width), pos(c.width, 0), executed(c.gates.size(), 0),
        decay(phys.graph.order, 1.0) {
    for (int q = 0; q < c.width; ++q) {
      if (l2p[q] < 0 || l2p[q] >= phys.graph.order) {
        throw Error("placement wire out of range");
      }
      if (p2l[l2p[q]] != -1) throw Error("placement is not injective");
      p2l[l2p[q]] = q;
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      const Gate& g = c.gates[i];
      per_qubit[g.q0].push_back(static_cast<int>(i));
      if (g.two_qubit()) per_qubit[g.q1].push_back(static_cast<int>(i));
    }
  }

  bool ready(int gi) const {
    const Gate& g = c.gates[gi];
    if (pos[g.q0] >= per_qubit[g.q0].size() ||
        per_qubit[g.q0][pos[g.q0]] != gi) {
      return false;
    }
    if (g.two_qubit() && (pos[g.q1] >= per_qubit[g.q1].size() ||
                          per_qubit[g.q1][pos[g.q1]] != gi)) {
      return false;
    }
    return true;
  }

  void execute(int gi) {
    const Gate& g = c.gates[gi];
    Gate placed = g;
    placed.q0 = l2p[g.q0];
    if (g.two_qubit()) placed.q1 = l2p[g.q1];
    out.push_back(placed);
    executed[gi] = 1;
    ++pos[g.q0];
    if (g.two_qubit()) ++pos[g.q1];
    // Progress resets the ping-pong discouragement.
    std::fill(decay.begin(), decay.end(), 1.0);
  }

  /// Execute every gate that is ready and physically allowed; returns the
  /// blocked front layer (ready 2-qubit gates on non-adjacent wires).
  std::vector<int> drain() {
    std::vector<int> front;
    bool progress = true;
    while (progress) {
      progress = false;
      front.clear();
      for (int q = 0; q < c.width; ++q) {
        while (pos[q] < per_qubit[q].size()) {
          const int gi = per_qubit[q][pos[q]];
          if (!ready(gi)) break;
          const Gate& g = c.gates[gi];
          if (!g.two_qubit()) {
            execute(gi);
            progress = true;
            continue;
          }
          if (phys.graph.has_edge(l2p[g.q0], l2p[g.q1])) {
            execute(gi);
            progress = true;
            continue;
          }
          if (std::find(front.begin(), front.end(), gi) == front.end()) {
            front.push_back(gi);
          }
          break;
        }
      }
    }
    std::sort(front.begin(), front.end());
    return front;
  }

  std::vector<int> extended_set(const std::vector<int>& front) const {
    std::vector<int> ext;
    std::vector<char> in_front(c.gates.size(), 0);
    for (int gi : front) in_front[gi] = 1;
    for (std::size_t i = 0; i < c.gates.size() &&
                            static_cast<int>(ext.size()) < params.lookahead;
         ++i) {
      if (executed[i] || in_front[i]) continue;
      if (c.gates[i].two_qubit()) ext.push_back(static_cast<int>(i));
    }
    return ext;
  }

  double mapped_distance(int gi, const std::vector<int>& l2p_view) const {
    const Gate& g = c.gates[gi];
    return static_cast<double>(dist[l2p_view[g.q0]][l2p_view[g.q1]]);
  }

  void apply_swap(int u, int v) {
    Gate sw = Gate::swap(u, v);
    sw.tag = -1;
    inserted_swaps.push_back(static_cast<int>(out.size()));
    out.push_back(sw);
    const int lu = p2l[u], lv = p2l[v];
    if (lu >= 0) l2p[lu] = v;
    if (lv >= 0) l2p[lv] = u;
    p2l[u] = lv;
    p2l[v] = lu;
    decay[u] += params.decay_step;
    decay[v] += params.decay_step;
  }

  void choose_and_apply_swap(const std::vector<int>& front) {
    const std::vector<int> ext = extended_set(front);
    std::vector<Edge> candidates;
    for (int gi : front) {
      const Gate& g = c.gates[gi];
      for (int pq : {l2p[g.q0], l2p[g.q1]}) {
        for (const Edge& e : phys.graph.edges) {
          if (e.first == pq || e.second == pq) {
            if (std::find(candidates.begin(), candidates.end(), e) ==
                candidates.end()) {
              candidates.push_back(e);
            }
          }
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());

    double best_score = std::numeric_limits<double>::infinity();
    std::uint64_t best_tie = 0;
    Edge best_edge{-1, -1};
    std::vector<int> trial = l2p;
    for (const Edge& e : candidates) {
      // Apply to the trial view.
      const int lu = p2l[e.first], lv = p2l[e.second];
      if (lu >= 0) trial[lu] = e.second;
      if (lv >= 0) trial[lv] = e.first;

      double front_cost = 0.0;
      for (int gi : front) front_cost += mapped_distance(gi, trial);
      front_cost /= static_cast<double>(front.size());
      double ext_cost = 0.0;
      for (int gi : ext) ext_cost += mapped_distance(gi, trial);
      if (!ext.empty()) ext_cost /= static_cast<double>(ext.size());
      const double score = decay[e.first] * decay[e.second] *
                           (front_cost + params.extended_weight * ext_cost);

      const std::uint64_t tie = splitmix64(
          seed ^ (static_cast<std::uint64_t>(e.first) << 32 ^
                  static_cast<std::uint64_t>(e.second)));
      if (score < best_score ||
          (score == best_score && tie < best_tie)) {
        best_score = score;
        best_tie = tie;
        best_edge = e;
      }

      if (lu >= 0) trial[lu] = e.first;
      if (lv >= 0) trial[lv] = e.second;
    }
    apply_swap(best_edge.first, best_edge.second);
  }

  /// Fallback when the heuristic stops making progress: walk the first
  /// blocked gate's control along a shortest path to its target.
  void force_route(int gi) {
    const Gate& g = c.gates[gi];
    while (!phys.graph.has_edge(l2p[g.q0], l2p[g.q1])) {
      const int from = l2p[g.q0], to = l2p[g.q1];
      int next = -1;
      for (const Edge& e : phys.graph.edges) {
        for (const auto& [a, b] : {std::pair{e.first, e.second},
                                 std::pair{e.second, e.first}}) {
          if (a == from && dist[b][to] == dist[from][to] - 1) {
            if (next < 0 || b < next) next = b;
          }
        }
      }
      apply_swap(from, next);
    }
  }

  void run() {
    int swaps_since_progress = 0;
    const int stall_limit = 4 * phys.graph.order * phys.graph.order + 64;
    while (true) {
      const std::size_t done_before = out.size();
      const std::vector<int> front = drain();
      if (front.empty()) break;  // everything executed
      if (out.size() > done_before) swaps_since_progress = 0;
      if (swaps_since_progress > stall_limit) {
        force_route(front.front());
        swaps_since_progress = 0;
        continue;
      }
      choose_and_apply_swap(front);
      ++swaps_since_progress;
    }
  }
};

std::map<int, int> attribute_internal_swaps(const std::vector<Gate>& out,
                                            const std::vector<int>& swaps) {
  // Partition spans over the routed sequence (by gate tag).
  std::map<int, std::pair<int, int>> span;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int tag = out[i].tag;
    if (tag < 0) continue;
    auto [it, fresh] = span.try_emplace(tag, static_cast<int>(i),
                                        static_cast<int>(i));
    if (!fresh) it->second.second = static_cast<int>(i);
  }
  std::map<int, int> counts;
  for (const auto& [tag, se] : span) counts[tag] = 0;
  for (int si : swaps) {
    int best_tag = -1;
    int best_len = std::numeric_limits<int>::max();
    for (const auto& [tag, se] : span) {
      if (se.first < si && si < se.second) {
        const int len = se.second - se.first;
        if (len < best_len || (len == best_len && tag < best_tag)) {
          best_tag = tag;
          best_len = len;
        }
      }
    }
    if (best_tag >= 0) ++counts[best_tag];
  }
  return counts;
}

}  // namespace

Placement sabre_layout(const Circuit& c, const PhysicalTopology& phys,
                       int iters, std::uint64_t seed,
                       const RoutingParams& params) {
  if (c.width > phys.graph.order) {
    throw WidthError("circuit is wider than the device");
  }
  const auto dist = distance_matrix(phys.graph);

  Rng rng(mix_seed(seed, 0x1a707ULL));
  std::vector<int> wires(phys.graph.order);
  std::iota(wires.begin(), wires.end(), 0);
  rng.shuffle(wires);
  Placement placement;
  placement.phys_of.assign(wires.begin(), wires.begin() + c.width);

  Circuit reversed = c;
  std::reverse(reversed.gates.begin(), reversed.gates.end());

  Placement best = placement;
  int best_swaps = std::numeric_limits<int>::max();
  for (int it = 0; it < iters; ++it) {
    Router fwd(c, phys, params, dist, placement, seed);
    fwd.run();
    const int swaps = static_cast<int>(fwd.inserted_swaps.size());
    if (swaps < best_swaps) {
      best_swaps = swaps;
      best = placement;
      if (swaps == 0) break;
    }
    // Backward pass: route the reversed circuit from where the forward
    // pass ended; its final mapping seeds the next iteration.
    Placement back_start;
    back_start.phys_of = fwd.l2p;
    Router bwd(reversed, phys, params, dist, back_start, seed);
    bwd.run();
    placement.phys_of = bwd.l2p;
  }
  return best;
}

MappedCircuit sabre_route(const Circuit& c, const PhysicalTopology& phys,
                          const Placement& placement, std::uint64_t seed,
                          const RoutingParams& params) {
  if (c.width > phys.graph.order) {
    throw WidthError("circuit is wider than the device");
  }
  if (placement.width() != c.width) {
    throw Error("placement width does not match circuit");
  }
  const auto dist = distance_matrix(phys.graph);
  Router router(c, phys, params, dist, placement, seed);
  router.run();

  MappedCircuit mc;
  mc.initial_placement = placement;
  mc.final_placement.phys_of = router.l2p;
  mc.swap_count = static_cast<int>(router.inserted_swaps.size());
  mc.internal_swaps =
      attribute_internal_swaps(router.out, router.inserted_swaps);

  Circuit routed(phys.graph.order);
  for (const Gate& g : router.out) routed.push(g);
  mc.circuit = decompose_swaps(routed);
  return mc;
}

bool validate_mapping(const Circuit& c, const PhysicalTopology& phys) {
  for (const Gate& g : c.gates) {
    if (g.two_qubit() && !phys.graph.has_edge(g.q0, g.q1)) return false;
  }
  return true;
}

bool validate_mapping(const MappedCircuit& mc, const PhysicalTopology& phys) {
  return validate_mapping(mc.circuit, phys);
}

std::map<int, double> internal_swap_stats(const MappedCircuit& mc) {
  // CNOT count per partition from the routed circuit's own tagged gates.
  std::map<int, int> cnots;
  for (const Gate& g : mc.circuit.gates) {
    if (g.tag >= 0 && g.kind == Gate::Kind::Cnot) ++cnots[g.tag];
  }
  std::map<int, double> rates;
  for (const auto& [tag, swaps] : mc.internal_swaps) {
    const auto it = cnots.find(tag);
    if (it == cnots.end() || it->second == 0) continue;
    rates[tag] = static_cast<double>(swaps) / static_cast<double>(it->second);
  }
  return rates;
}

}  // namespace topas
