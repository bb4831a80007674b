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
#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "palettekit/graph_io.hpp"

namespace palettekit::testing {

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

MultiGraph cycle_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph path_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph star_graph(int leaves) {
  MultiGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

MultiGraph petersen_graph() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

MultiGraph cubic_without_perfect_matching() {
  MultiGraph g(16);
  for (int i = 0; i < 3; ++i) {
    const int s = 1 + 5 * i;
    const int a = s + 1, b = s + 2, c = s + 3, d = s + 4;
    g.add_edge(0, s);
    g.add_edge(s, a);
    g.add_edge(s, b);
    g.add_edge(a, c);
    g.add_edge(a, d);
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(c, d);
  }
  return g;
}

CertifiedGraph k7_three_cubic_parts() {
  CertifiedGraph out{MultiGraph(7), {}};
  MultiGraph& g = out.graph;
  auto& parts = out.certificate.parts;
  auto k4 = [&](std::array<int, 4> vs, EdgeSubset& part) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) part.push_back(g.add_edge(vs[i], vs[j]));
    }
  };
  k4({0, 1, 2, 3}, parts[0]);
  k4({0, 4, 5, 6}, parts[1]);
  for (int u = 1; u <= 3; ++u) {
    for (int v = 4; v <= 6; ++v) parts[2].push_back(g.add_edge(u, v));
  }
  for (auto& part : parts) part = normalize_subset(part);
  out.certificate.degree = 6;
  out.certificate.r = 0;
  return out;
}

CertifiedGraph quartic_greedy_h0_witness() {
  // Vertex 0 is a hub joined to four 7-vertex gadgets; each gadget also has
  // one edge into the block 29..33. A gadget is a path b..b+5 plus a vertex
  // z on the 4-cycles z,b,b+2,b+4 and z,b+1,b+3,b+5.
  CertifiedGraph out{MultiGraph(34), {}};
  MultiGraph& g = out.graph;
  auto& parts = out.certificate.parts;
  auto add = [&](int part, Vertex u, Vertex v) {
    parts[part].push_back(g.add_edge(u, v));
  };
  for (int i = 0; i < 4; ++i) {
    const int b = 1 + 7 * i;
    const int z = b + 6;
    const int through = i < 2 ? 0 : 1;
    const int other = i < 2 ? 1 : 0;
    add(through, 0, b);
    for (int j = 0; j < 5; ++j) add(through, b + j, b + j + 1);
    add(through, b + 5, 29 + i);
    add(other, z, b);
    add(other, b, b + 2);
    add(other, b + 2, b + 4);
    add(other, b + 4, z);
    add(2, z, b + 1);
    add(2, b + 1, b + 3);
    add(2, b + 3, b + 5);
    add(2, b + 5, z);
  }
  add(0, 29, 33);
  add(0, 33, 30);
  add(1, 31, 33);
  add(1, 33, 32);
  add(2, 32, 29);
  add(2, 29, 31);
  add(2, 31, 30);
  add(2, 30, 32);
  for (auto& part : parts) part = normalize_subset(part);
  out.certificate.degree = 4;
  out.certificate.r = 0;
  return out;
}

std::vector<MultiGraph> load_data(const char* name) {
  const std::string path = std::string(PALETTEKIT_TEST_DATA) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_collection(buffer.str());
}

}  // namespace palettekit::testing
