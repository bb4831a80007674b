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
#include "palettekit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "palettekit/error.hpp"

namespace palettekit {

MultiGraph::MultiGraph(int n) : n_(n), incidence_(n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative vertex count");
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : MultiGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorKind::kMalformedInput,
                "edge endpoint out of range: " + std::to_string(u) + "-" +
                    std::to_string(v));
  }
  if (u == v) {
    throw Error(ErrorKind::kLoopRejected,
                "loop at vertex " + std::to_string(u));
  }
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

int MultiGraph::max_multiplicity() const {
  std::map<std::pair<Vertex, Vertex>, int> count;
  int best = 0;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.u, e.v);
    best = std::max(best, ++count[{key.first, key.second}]);
  }
  return best;
}

DegreeProfile degree_profile(const MultiGraph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p.degrees[v] = g.degree(v);
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

std::optional<int> is_regular(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

EdgeSubset normalize_subset(EdgeSubset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_valid_for(const MultiGraph& g, const EdgeSubset& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.edge_count()) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

std::vector<Vertex> vertex_set_of(const MultiGraph& g, const EdgeSubset& s) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (EdgeId e : s) {
    mark[g.edge(e).u] = 1;
    mark[g.edge(e).v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

EdgeSubgraph induced_edge_subgraph(const MultiGraph& g, const EdgeSubset& s) {
  if (s.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty edge subset");
  }
  if (!subset_valid_for(g, s)) {
    throw Error(ErrorKind::kInvalidArgument,
                "edge subset is not a sorted set of edge ids of the graph");
  }
  EdgeSubgraph sub;
  sub.vertices = vertex_set_of(g, s);
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) {
    local[sub.vertices[i]] = static_cast<int>(i);
  }
  sub.graph = MultiGraph(static_cast<int>(sub.vertices.size()));
  for (EdgeId e : s) {
    sub.graph.add_edge(local[g.edge(e).u], local[g.edge(e).v]);
  }
  sub.edge_ids = s;
  return sub;
}

bool VertexPartition::disjoint() const {
  std::vector<Vertex> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool VertexPartition::covers(int n) const {
  std::vector<char> seen(n, 0);
  for (const auto& p : parts) {
    for (Vertex v : p) {
      if (v < 0 || v >= n) return false;
      seen[v] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace palettekit
