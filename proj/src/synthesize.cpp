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

#include "topas/synthesize.hpp"

#include "topas/error.hpp"
#include "topas/rng.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>

namespace topas {

namespace {

struct Node {
  std::vector<Edge> blocks;
  ParamVector params;
  double distance = 1.0;
  double cost = 0.0;  // distance + weight * blocks
  std::uint64_t id = 0;
  std::shared_ptr<Node> parent;
};

struct NodeOrder {
  bool operator()(const std::shared_ptr<Node>& a,
                  const std::shared_ptr<Node>& b) const {
    if (a->cost != b->cost) return a->cost > b->cost;
    return a->id > b->id;  // earlier insertion wins ties
  }
};

}  // namespace

SynthesisResult synthesize(const CMatrix& target, const Graph& subtopology,
                           const SynthesisConfig& cfg) {
  if (!subtopology.connected()) {
    throw Error("synthesis subtopology must be connected");
  }
  const int width = subtopology.order;
  if (target.dim() != (std::size_t{1} << width)) {
    throw DimensionError("target dimension does not match subtopology order");
  }
  std::vector<Edge> edges = subtopology.edges;
  std::sort(edges.begin(), edges.end());

  std::uint64_t next_id = 0;
  int nodes_explored = 0;

  const auto make_node = [&](std::vector<Edge> blocks,
                             const std::shared_ptr<Node>& parent,
                             std::size_t frozen_params) {
    auto node = std::make_shared<Node>();
    node->blocks = std::move(blocks);
    node->id = next_id++;
    node->parent = parent;
    AnsatzCircuit ansatz{width, edges, node->blocks};

    InstantiateOptions opts;
    opts.salt = node->id;
    opts.frozen_params = frozen_params;
    if (parent) {
      // Warm start: parent parameters, new block near the identity.
      ParamVector warm = parent->params;
      Rng block_rng(mix_seed(cfg.seed, 0xb10c ^ (node->id * 2654435761ULL)));
      for (int i = 0; i < 6; ++i) warm.push_back(0.01 * block_rng.normal());
      opts.warm_start = std::move(warm);
    }
    const InstantiateResult fit = instantiate(ansatz, target, cfg, opts);
    node->params = fit.params;
    node->distance = fit.distance;
    node->cost = fit.distance +
                 cfg.heuristic_weight * static_cast<double>(node->blocks.size());
    ++nodes_explored;
    return node;
  };

  const auto finish = [&](const std::shared_ptr<Node>& node,
                          std::size_t frozen_params) {
    // Final polish: re-optimize all parameters of the chosen structure.
    std::shared_ptr<Node> final_node = node;
    if (frozen_params > 0) {
      AnsatzCircuit ansatz{width, edges, node->blocks};
      InstantiateOptions opts;
      opts.salt = node->id;
      opts.warm_start = node->params;
      const InstantiateResult fit = instantiate(ansatz, target, cfg, opts);
      if (fit.distance < node->distance) {
        final_node = std::make_shared<Node>(*node);
        final_node->params = fit.params;
        final_node->distance = fit.distance;
      }
    }
    SynthesisResult res;
    AnsatzCircuit ansatz{width, edges, final_node->blocks};
    res.circuit = ansatz.to_circuit(final_node->params);
    res.distance = final_node->distance;
    res.blocks = static_cast<int>(final_node->blocks.size());
    res.cnots = res.blocks;
    res.converged = final_node->distance <= cfg.epsilon;
    res.nodes_explored = nodes_explored;
    for (const Node* walk = node.get(); walk; walk = walk->parent.get()) {
      res.path_distances.push_back(walk->distance);
    }
    std::reverse(res.path_distances.begin(), res.path_distances.end());
    return res;
  };

  std::priority_queue<std::shared_ptr<Node>, std::vector<std::shared_ptr<Node>>,
                      NodeOrder>
      frontier;

  std::size_t frozen_params = 0;
  auto root = make_node({}, nullptr, 0);
  if (root->distance <= cfg.epsilon) return finish(root, 0);

  double checkpoint_distance = root->distance;
  int checkpoint_blocks = 0;
  std::shared_ptr<Node> best = root;
  frontier.push(root);

  while (!frontier.empty()) {
    if (cfg.max_nodes > 0 &&
        static_cast<std::size_t>(nodes_explored) >= cfg.max_nodes) {
      break;
    }
    const auto parent = frontier.top();
    frontier.pop();
    if (static_cast<int>(parent->blocks.size()) >= cfg.max_blocks) continue;

    for (const Edge& e : edges) {
      std::vector<Edge> blocks = parent->blocks;
      blocks.push_back(e);
      auto child = make_node(std::move(blocks), parent, frozen_params);
      if (child->distance < best->distance) best = child;
      if (child->distance <= cfg.epsilon) return finish(child, frozen_params);

      const int blocks_past = static_cast<int>(child->blocks.size()) -
                              checkpoint_blocks;
      if (child->distance <= checkpoint_distance / 10.0 &&
          blocks_past >= cfg.leap_gap) {
        // Checkpoint: pin everything found so far and restart from here.
        frozen_params = child->params.size();
        checkpoint_distance = child->distance;
        checkpoint_blocks = static_cast<int>(child->blocks.size());
        while (!frontier.empty()) frontier.pop();
        frontier.push(child);
        break;
      }
      frontier.push(child);
    }
  }
  return finish(best, frozen_params);
}

}  // namespace topas
