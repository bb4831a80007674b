// Copyright 2026 The palettekit Authors
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
#include "palettekit/even_subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "palettekit/error.hpp"

namespace palettekit {
namespace {

struct Forest {
  std::vector<EdgeId> parent_edge;  // -1 at roots
  std::vector<int> depth;
  std::vector<char> is_tree_edge;
  int components = 0;
};

Forest spanning_forest(const MultiGraph& g) {
  const int n = g.vertex_count();
  Forest f;
  f.parent_edge.assign(n, -1);
  f.depth.assign(n, -1);
  f.is_tree_edge.assign(g.edge_count(), 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (f.depth[root] >= 0) continue;
    ++f.components;
    f.depth[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (f.depth[w] >= 0) continue;
        f.depth[w] = f.depth[v] + 1;
        f.parent_edge[w] = e;
        f.is_tree_edge[e] = 1;
        queue.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace

std::vector<EdgeSubset> fundamental_cycle_basis(const MultiGraph& g) {
  const Forest f = spanning_forest(g);
  std::vector<EdgeSubset> basis;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.is_tree_edge[e]) continue;
    EdgeSubset cycle{e};
    Vertex a = g.edge(e).u;
    Vertex b = g.edge(e).v;
    while (a != b) {
      if (f.depth[a] < f.depth[b]) std::swap(a, b);
      const EdgeId up = f.parent_edge[a];
      cycle.push_back(up);
      a = g.edge(up).other(a);
    }
    basis.push_back(normalize_subset(std::move(cycle)));
  }
  return basis;
}

int cycle_space_dimension(const MultiGraph& g) {
  return g.edge_count() - g.vertex_count() + spanning_forest(g).components;
}

std::optional<EdgeSubset> find_spanning_even_subgraph_no_isolated(
    const MultiGraph& g, const Limits& limits) {
  const int n = g.vertex_count();
  if (n == 0) return EdgeSubset{};
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  const std::vector<EdgeSubset> basis = fundamental_cycle_basis(g);
  const int dim = static_cast<int>(basis.size());
  if (dim > limits.max_cycle_space_dim) {
    throw Error(ErrorKind::kResourceLimit,
                "cycle space dimension " + std::to_string(dim) +
                    " exceeds cap " +
                    std::to_string(limits.max_cycle_space_dim));
  }

  // Gray-code walk over all 2^dim elements: each step toggles one basis
  // cycle, so the current edge set and its degrees update incrementally.
  std::vector<char> in_set(g.edge_count(), 0);
  std::vector<int> deg(n, 0);
  int uncovered = n;
  auto toggle = [&](Vertex v, int delta) {
    if (deg[v] == 0) --uncovered;
    deg[v] += delta;
    if (deg[v] == 0) ++uncovered;
  };
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = std::countr_zero(step);
    for (EdgeId e : basis[flip]) {
      const int delta = in_set[e] ? -1 : 1;
      in_set[e] ^= 1;
      toggle(g.edge(e).u, delta);
      toggle(g.edge(e).v, delta);
    }
    if (uncovered == 0) {
      EdgeSubset witness;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_set[e]) witness.push_back(e);
      }
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace palettekit
