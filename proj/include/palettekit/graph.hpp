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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace palettekit {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// Loopless undirected multigraph. Vertices are 0..n-1, edge ids are the
// positions in edges(). Isolated vertices are kept.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);
  MultiGraph(int n, std::vector<Edge> edges);

  EdgeId add_edge(Vertex u, Vertex v);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Edge ids incident with v, in increasing order.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  // Largest number of edges joining one pair of vertices (0 if edgeless).
  int max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }

  bool operator==(const MultiGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

struct DegreeProfile {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> degrees;
};

DegreeProfile degree_profile(const MultiGraph& g);

// Common degree if g is regular. The edgeless graph (and the empty graph) is
// 0-regular.
std::optional<int> is_regular(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

// Sorted, duplicate-free set of edge ids of some parent graph.
using EdgeSubset = std::vector<EdgeId>;

EdgeSubset normalize_subset(EdgeSubset s);
bool subset_valid_for(const MultiGraph& g, const EdgeSubset& s);

// Graph spanned by a set of edges. `graph` is compact (vertices 0..k-1,
// edges 0..s-1); `vertices` and `edge_ids` map back to the parent, so the
// parent's vertex labels and edge ids survive extraction.
struct EdgeSubgraph {
  MultiGraph graph;
  std::vector<Vertex> vertices;  // parent labels, increasing
  std::vector<EdgeId> edge_ids;  // parent ids, increasing
};

// Only endpoints of members become vertices. Throws kInvalidArgument on an
// empty or invalid subset.
EdgeSubgraph induced_edge_subgraph(const MultiGraph& g, const EdgeSubset& s);

// Set of parent vertices touched by the edges of s.
std::vector<Vertex> vertex_set_of(const MultiGraph& g, const EdgeSubset& s);

// Up to three disjoint vertex classes A1, A2, A3.
struct VertexPartition {
  std::array<std::vector<Vertex>, 3> parts;

  bool disjoint() const;
  bool covers(int n) const;
  bool operator==(const VertexPartition&) const = default;
};

}  // namespace palettekit
