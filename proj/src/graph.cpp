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

#include "topas/graph.hpp"

#include "topas/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace topas {

Graph::Graph(int order, std::vector<Edge> raw) : order(order) {
  edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a == b) throw Error("self-loop in graph");
    if (a < 0 || b < 0 || a >= order || b >= order) {
      throw Error("edge endpoint out of range");
    }
    edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int a, int b) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(order);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(order, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool Graph::connected() const {
  if (order == 0) return true;
  const auto adj = adjacency();
  std::vector<char> seen(order, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == order;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) out.push_back(make_edge(perm[a], perm[b]));
  return Graph(order, std::move(out));
}

void WeightedGraph::add(int a, int b, std::int64_t w) {
  if (a == b) throw Error("self-loop in weighted graph");
  weights[make_edge(a, b)] += w;
}

std::int64_t WeightedGraph::weight(int a, int b) const {
  const auto it = weights.find(make_edge(a, b));
  return it == weights.end() ? 0 : it->second;
}

std::int64_t WeightedGraph::total_weight() const {
  std::int64_t total = 0;
  for (const auto& [e, w] : weights) total += w;
  return total;
}

Graph WeightedGraph::support() const {
  std::vector<Edge> es;
  es.reserve(weights.size());
  for (const auto& [e, w] : weights) {
    if (w > 0) es.push_back(e);
  }
  return Graph(order, std::move(es));
}

namespace {

std::uint64_t adjacency_mask(const Graph& g, const std::vector<int>& perm) {
  // Bit index of pair (i<j) in upper-triangular order.
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < g.order; ++i) {
    for (int j = i + 1; j < g.order; ++j, ++bit) {
      if (g.has_edge(perm[i], perm[j])) mask |= (1ULL << bit);
    }
  }
  return mask;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  if (g.order > 8) throw Error("canonical_key limited to order <= 8");
  std::vector<int> perm(g.order);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    best = std::min(best, adjacency_mask(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best | (static_cast<std::uint64_t>(g.order) << 56);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order != b.order || a.edges.size() != b.edges.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

namespace {

bool extend_embedding(const Graph& g, const Graph& host,
                      const std::vector<std::vector<int>>& gadj,
                      std::vector<int>& map, std::vector<char>& used, int v) {
  if (v == g.order) return true;
  for (int hv = 0; hv < host.order; ++hv) {
    if (used[hv]) continue;
    bool ok = true;
    for (int w : gadj[v]) {
      if (map[w] >= 0 && !host.has_edge(hv, map[w])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[v] = hv;
    used[hv] = 1;
    if (extend_embedding(g, host, gadj, map, used, v + 1)) return true;
    map[v] = -1;
    used[hv] = 0;
  }
  return false;
}

}  // namespace

bool embeds(const Graph& g, const Graph& host) {
  if (g.order > 8) throw Error("embeds limited to pattern order <= 8");
  if (g.order > host.order || g.edges.size() > host.edges.size()) return false;
  const auto gadj = g.adjacency();
  std::vector<int> map(g.order, -1);
  std::vector<char> used(host.order, 0);
  return extend_embedding(g, host, gadj, map, used, 0);
}

namespace {

// Standard duplicate-free connected-subgraph enumeration: grow each set from
// its minimum vertex using only larger neighbors as extension candidates.
void grow(const Graph& g, const std::vector<std::vector<int>>& adj, int k,
          std::vector<int>& current, std::vector<char>& in_set,
          std::vector<char>& forbidden, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) >= 2) {
    std::vector<int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  }
  if (static_cast<int>(current.size()) == k) return;
  // Frontier: neighbors of the current set, not in it, not forbidden.
  std::vector<int> frontier;
  for (int v : current) {
    for (int w : adj[v]) {
      if (!in_set[w] && !forbidden[w] &&
          std::find(frontier.begin(), frontier.end(), w) == frontier.end()) {
        frontier.push_back(w);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  std::vector<int> locally_forbidden;
  for (int w : frontier) {
    current.push_back(w);
    in_set[w] = 1;
    grow(g, adj, k, current, in_set, forbidden, out);
    in_set[w] = 0;
    current.pop_back();
    // Later branches must not re-add w, or sets would repeat.
    forbidden[w] = 1;
    locally_forbidden.push_back(w);
  }
  for (int w : locally_forbidden) forbidden[w] = 0;
}

}  // namespace

std::vector<std::vector<int>> connected_vertex_sets(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  if (k < 2) return out;
  const auto adj = g.adjacency();
  std::vector<char> in_set(g.order, 0), forbidden(g.order, 0);
  for (int v = 0; v < g.order; ++v) {
    std::vector<int> current{v};
    in_set[v] = 1;
    forbidden[v] = 1;  // sets whose minimum is < v were already produced
    grow(g, adj, k, current, in_set, forbidden, out);
    in_set[v] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph graph_from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b)) {
      throw Error("edge list line " + std::to_string(lineno) +
                  ": expected two vertex indices");
    }
    if (a < 0 || b < 0 || a == b) {
      throw Error("edge list line " + std::to_string(lineno) +
                  ": bad edge endpoints");
    }
    edges.push_back(make_edge(a, b));
    max_vertex = std::max({max_vertex, a, b});
  }
  return Graph(max_vertex + 1, std::move(edges));
}

}  // namespace topas
