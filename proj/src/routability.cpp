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

#include "topas/routability.hpp"

#include "topas/error.hpp"
#include "topas/sabre.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace topas {

Circuit random_block_on(const Graph& g, int cnots, Rng& rng) {
  if (g.edges.empty()) throw Error("block graph needs at least one edge");
  if (cnots < static_cast<int>(g.edges.size())) {
    throw Error("block CNOT budget below edge count");
  }
  std::vector<Edge> picks = g.edges;
  for (int i = static_cast<int>(g.edges.size()); i < cnots; ++i) {
    picks.push_back(g.edges[rng.below(g.edges.size())]);
  }
  rng.shuffle(picks);
  Circuit c(g.order);
  for (const Edge& e : picks) c.push(Gate::cnot(e.first, e.second));
  return c;
}

namespace {

constexpr int kBlockCnots = 10;
constexpr int kContextGates = 20;  // random CNOTs before and after the block

void append_random_cnots(Circuit& c, int count, Rng& rng) {
  for (int i = 0; i < count; ++i) {
    const int a = rng.range(0, c.width);
    int b = rng.range(0, c.width - 1);
    if (b >= a) ++b;
    c.push(Gate::cnot(a, b));
  }
}

}  // namespace

double measure_graph_routability(const PhysicalTopology& phys, const Graph& g,
                                 int corpus_size, std::uint64_t seed) {
  if (g.edges.empty()) return 0.0;
  const int device = phys.graph.order;
  const int width = std::min(device, std::max(g.order + 4, 8));

  double total_rate = 0.0;
  for (int sample = 0; sample < corpus_size; ++sample) {
    Rng rng(mix_seed(seed, 0x817a + static_cast<std::uint64_t>(sample)));

    // Place the block on random distinct wires of a wider circuit.
    std::vector<int> wires(width);
    for (int i = 0; i < width; ++i) wires[i] = i;
    rng.shuffle(wires);
    std::vector<int> block_qubits(wires.begin(), wires.begin() + g.order);

    Circuit wide(width);
    append_random_cnots(wide, kContextGates, rng);
    const Circuit block = random_block_on(g, kBlockCnots, rng);
    for (const Gate& bg : block.gates) {
      Gate placed = bg;
      placed.q0 = block_qubits[bg.q0];
      placed.q1 = block_qubits[bg.q1];
      placed.tag = 0;
      wide.push(placed);
    }
    append_random_cnots(wide, kContextGates, rng);

    const std::uint64_t route_seed = mix_seed(seed, 0x40c + sample);
    const Placement placement = sabre_layout(wide, phys, 4, route_seed);
    const MappedCircuit mc = sabre_route(wide, phys, placement, route_seed);
    const auto it = mc.internal_swaps.find(0);
    const int swaps = (it == mc.internal_swaps.end()) ? 0 : it->second;
    total_rate += static_cast<double>(swaps) / kBlockCnots;
  }
  return total_rate / corpus_size;
}

std::vector<Graph> small_graph_classes() {
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  for (int order = 2; order <= 4; ++order) {
    std::vector<Edge> pairs;
    for (int a = 0; a < order; ++a) {
      for (int b = a + 1; b < order; ++b) pairs.push_back({a, b});
    }
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask & (1u << i)) edges.push_back(pairs[i]);
      }
      Graph g(order, std::move(edges));
      if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

RoutabilityTable build_routability_table(const PhysicalTopology& phys,
                                         int corpus_size, std::uint64_t seed) {
  RoutabilityTable table;
  table.topology = phys.name;
  table.corpus_size = corpus_size;
  table.seed = seed;
  for (const Graph& g : small_graph_classes()) {
    table.scores[graph_key(g)] =
        measure_graph_routability(phys, g, corpus_size, seed);
  }
  return table;
}

double routability_score(const Graph& g, const PhysicalTopology& phys,
                         RoutabilityTable& table) {
  if (g.edges.empty()) return 0.0;
  const std::string key = graph_key(g);
  const auto it = table.scores.find(key);
  if (it != table.scores.end()) return it->second;
  const double score = measure_graph_routability(
      phys, g, std::max(1, table.corpus_size), table.seed);
  table.scores[key] = score;
  return score;
}

std::string routability_to_json(const RoutabilityTable& table) {
  nlohmann::ordered_json j;
  j["topology"] = table.topology;
  j["corpus_size"] = table.corpus_size;
  j["seed"] = table.seed;
  j["scores"] = table.scores;
  return j.dump(2) + "\n";
}

RoutabilityTable routability_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RoutabilityTable table;
  table.topology = j.at("topology").get<std::string>();
  table.corpus_size = j.at("corpus_size").get<int>();
  table.seed = j.at("seed").get<std::uint64_t>();
  table.scores = j.at("scores").get<std::map<std::string, double>>();
  return table;
}

void save_routability_table(const RoutabilityTable& table,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << routability_to_json(table);
}

RoutabilityTable load_routability_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open routability table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return routability_from_json(buf.str());
}

}  // namespace topas
