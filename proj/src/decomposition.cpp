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
#include "palettekit/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "palettekit/error.hpp"
#include "palettekit/hypergraph.hpp"
#include "palettekit/matching.hpp"
#include "palettekit/palette_index.hpp"

namespace palettekit {

const char* to_string(H3Shape shape) {
  switch (shape) {
    case H3Shape::kNone: return "none";
    case H3Shape::kA3: return "A3";
    case H3Shape::kA1A2: return "A1A2";
  }
  return "none";
}

bool VerificationReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.passed; });
}

std::string VerificationReport::first_failure() const {
  for (const ClauseResult& c : clauses) {
    if (!c.passed) return c.clause;
  }
  return {};
}

namespace {

void add(VerificationReport& r, std::string clause, bool ok,
         std::string detail = {}) {
  r.clauses.push_back({std::move(clause), ok, std::move(detail)});
}

std::string part_name(int i) { return "H" + std::to_string(i); }

std::vector<Vertex> all_vertices(const MultiGraph& g) {
  std::vector<Vertex> v(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) v[i] = i;
  return v;
}

std::vector<Vertex> sorted_union(std::vector<Vertex> a,
                                 const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Present parts must be nonempty valid subsets; together they must cover
// every edge exactly once. Returns false if any part is unusable.
bool check_edge_partition(const MultiGraph& g, std::span<const Part> parts,
                          int first_index, VerificationReport& r) {
  bool usable = true;
  std::string bad;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] && (parts[i]->empty() || !subset_valid_for(g, *parts[i]))) {
      usable = false;
      bad += (bad.empty() ? "" : ",") + part_name(first_index + i);
    }
  }
  add(r, "nonempty_parts", usable,
      usable ? "" : "empty or invalid edge set in " + bad);
  if (!usable) {
    add(r, "edge_partition", false, "not evaluated");
    return false;
  }
  std::vector<int> hits(g.edge_count(), 0);
  for (const Part& p : parts) {
    if (!p) continue;
    for (EdgeId e : *p) ++hits[e];
  }
  std::string detail;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (hits[e] != 1) {
      detail = "edge " + std::to_string(e) + " covered " +
               std::to_string(hits[e]) + " times";
      break;
    }
  }
  add(r, "edge_partition", detail.empty(), detail);
  return true;
}

struct PartShape {
  std::optional<int> degree;  // regular degree, if regular
  bool class1 = false;
  std::vector<Vertex> vertices;
};

PartShape shape_of(const MultiGraph& g, const EdgeSubset& s,
                   const Limits& limits) {
  PartShape shape;
  const EdgeSubgraph sub = induced_edge_subgraph(g, s);
  shape.vertices = sub.vertices;
  shape.degree = is_regular(sub.graph);
  shape.class1 = shape.degree && is_class1_regular(sub.graph, limits);
  return shape;
}

std::string describe(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(vs[i]);
  }
  return out + "}";
}

// Colors each present part with exactly its degree, consecutive intervals in
// part order.
EdgeColoring color_parts(const MultiGraph& g, std::span<const Part> parts,
                         const Limits& limits) {
  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  int offset = 0;
  for (const Part& p : parts) {
    if (!p) continue;
    const EdgeSubgraph sub = induced_edge_subgraph(g, *p);
    const int degree = *is_regular(sub.graph);
    const auto local = find_edge_coloring(sub.graph, degree, limits);
    if (!local) {
      throw Error(ErrorKind::kInvalidCertificate, "part is not Class 1");
    }
    for (std::size_t i = 0; i < sub.edge_ids.size(); ++i) {
      c.colors[sub.edge_ids[i]] = local->colors[i] + offset;
    }
    offset += degree;
  }
  return c;
}

using Mask = std::uint64_t;

Mask to_mask(const Palette& p, const std::vector<Color>& colors) {
  Mask m = 0;
  for (Color x : p) {
    const auto pos = std::lower_bound(colors.begin(), colors.end(), x) - colors.begin();
    m |= Mask{1} << pos;
  }
  return m;
}

std::vector<Color> from_mask(Mask m, const std::vector<Color>& colors) {
  std::vector<Color> out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (m & (Mask{1} << i)) out.push_back(colors[i]);
  }
  return out;
}

Part part_for(const EdgeColoring& c, Mask region,
              const std::vector<Color>& colors) {
  if (region == 0) return std::nullopt;
  return edges_with_colors(c, from_mask(region, colors));
}

}  // namespace

Decomposition2 extract_decomposition_2(const MultiGraph& g,
                                       const EdgeColoring& c,
                                       const Limits& limits) {
  const PaletteSystem ps = palettes_of(g, c);
  if (ps.size() != 2) {
    throw Error(ErrorKind::kNotTwoPalettes,
                "coloring has " + std::to_string(ps.size()) + " palettes");
  }
  if (!pairwise_intersecting(associated_hypergraph(g, c))) {
    throw Error(ErrorKind::kNonMinimalColoring,
                "associated hypergraph is not pairwise intersecting; reduce "
                "colors first");
  }
  const Palette& a = ps.palettes[0];
  const Palette& b = ps.palettes[1];
  const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  if (!a_in_b && !b_in_a) {
    throw Error(ErrorKind::kNonMinimalColoring, "palettes are not nested");
  }
  const Palette& small = a_in_b ? a : b;
  std::vector<Color> rest;
  for (Color x : c.colorset()) {
    if (!std::binary_search(small.begin(), small.end(), x)) rest.push_back(x);
  }
  Decomposition2 d;
  if (!small.empty()) d.h0 = edges_with_colors(c, small);
  d.h1 = edges_with_colors(c, rest);
  const VerificationReport report = verify_decomposition_2(g, d, limits);
  if (!report.passed()) {
    throw Error(ErrorKind::kNonMinimalColoring,
                "extracted parts fail clause " + report.first_failure());
  }
  return d;
}

VerificationReport verify_decomposition_2(const MultiGraph& g,
                                          const Decomposition2& d,
                                          const Limits& limits) {
  VerificationReport r;
  const std::array<Part, 2> parts{d.h0, d.h1};
  const bool usable = check_edge_partition(g, parts, 0, r);
  const DegreeProfile p = degree_profile(g);
  const int low = p.min_degree;
  const int high = p.max_degree;
  add(r, "degrees_differ", high > low,
      "max degree " + std::to_string(high) + ", min degree " + std::to_string(low));
  add(r, "h0_presence", d.h0.has_value() == (low > 0),
      "H0 must be present exactly when the minimum degree is positive");
  add(r, "h1_presence", d.h1.has_value(), "H1 carries the degree surplus");
  if (!usable) return r;

  if (d.h0) {
    const PartShape s = shape_of(g, *d.h0, limits);
    add(r, "h0_spanning", static_cast<int>(s.vertices.size()) == g.vertex_count(),
        "V(H0) = " + describe(s.vertices));
    add(r, "h0_regular", s.degree == low,
        "H0 must be " + std::to_string(low) + "-regular");
    add(r, "h0_class1", s.class1);
  }
  if (d.h1) {
    const PartShape s = shape_of(g, *d.h1, limits);
    add(r, "h1_regular", s.degree == high - low,
        "H1 must be " + std::to_string(high - low) + "-regular");
    add(r, "h1_class1", s.class1);
  }
  return r;
}

EdgeColoring synthesize_coloring_2(const MultiGraph& g, const Decomposition2& d,
                                   const Limits& limits) {
  const VerificationReport report = verify_decomposition_2(g, d, limits);
  if (!report.passed()) {
    throw Error(ErrorKind::kInvalidCertificate,
                "decomposition fails clause " + report.first_failure());
  }
  const std::array<Part, 2> parts{d.h0, d.h1};
  return color_parts(g, parts, limits);
}

Decomposition3 embed_decomposition_2(const MultiGraph& g,
                                     const Decomposition2& d) {
  Decomposition3 out;
  out.parts[0] = d.h0;
  out.parts[1] = d.h1;
  if (d.h1) out.partition.parts[1] = vertex_set_of(g, *d.h1);
  const auto& a2 = out.partition.parts[1];
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!std::binary_search(a2.begin(), a2.end(), v)) {
      out.partition.parts[0].push_back(v);
    }
  }
  return out;
}

Decomposition3 extract_decomposition_3(const MultiGraph& g,
                                       const EdgeColoring& c,
                                       const Limits& limits) {
  const PaletteSystem ps = palettes_of(g, c);
  Decomposition3 d;
  if (ps.size() > 3) {
    throw Error(ErrorKind::kTooManyPalettes,
                "coloring has " + std::to_string(ps.size()) + " palettes");
  }
  if (ps.size() == 1) {
    if (g.edge_count() > 0) d.parts[0] = edges_with_colors(c, c.colorset());
    d.partition.parts[0] = all_vertices(g);
  } else if (ps.size() == 2) {
    d = embed_decomposition_2(g, extract_decomposition_2(g, c, limits));
  } else {
    const std::vector<Color> colors = c.colorset();
    if (colors.size() > 64) {
      throw Error(ErrorKind::kResourceLimit, "more than 64 colors");
    }
    std::array<Mask, 3> p{};
    for (int i = 0; i < 3; ++i) p[i] = to_mask(ps.palettes[i], colors);
    std::array<Mask, 3> own{};   // colors only in palette i
    std::array<Mask, 3> pair{};  // colors in the two palettes other than i
    for (int i = 0; i < 3; ++i) {
      const Mask a = p[(i + 1) % 3];
      const Mask b = p[(i + 2) % 3];
      own[i] = p[i] & ~(a | b);
      pair[i] = (a & b) & ~p[i];
    }
    int owners = 0;
    int owner = -1;
    for (int i = 0; i < 3; ++i) {
      if (own[i]) {
        ++owners;
        owner = i;
        if (pair[i]) {
          throw Error(ErrorKind::kNonMinimalColoring,
                      "palette " + std::to_string(i + 1) +
                          " has private colors while the other two share "
                          "colors it lacks");
        }
      }
    }
    if (owners > 1) {
      throw Error(ErrorKind::kNonMinimalColoring,
                  "more than one palette has private colors");
    }
    // order[j] is the palette index placed at position j (A1, A2, A3).
    std::array<int, 3> order{0, 1, 2};
    if (owner >= 0) {
      int pos = 0;
      for (int i = 0; i < 3; ++i) {
        if (i != owner) order[pos++] = i;
      }
      order[2] = owner;
    }
    const Mask common = p[0] & p[1] & p[2];
    d.parts[0] = part_for(c, common, colors);
    // H1 lives on A2 u A3: colors shared by those two palettes but not A1's.
    d.parts[1] = part_for(c, pair[order[0]], colors);
    d.parts[2] = part_for(c, pair[order[1]], colors);
    if (owner >= 0) {
      d.parts[3] = part_for(c, own[owner], colors);
      d.shape = H3Shape::kA3;
    } else {
      d.parts[3] = part_for(c, pair[order[2]], colors);
      d.shape = d.parts[3] ? H3Shape::kA1A2 : H3Shape::kNone;
    }
    for (int j = 0; j < 3; ++j) d.partition.parts[j] = ps.class_members(order[j]);
  }
  const VerificationReport report = verify_decomposition_3(g, d, limits);
  if (!report.passed()) {
    throw Error(ErrorKind::kNonMinimalColoring,
                "extracted decomposition fails clause " + report.first_failure());
  }
  return d;
}

VerificationReport verify_decomposition_3(const MultiGraph& g,
                                          const Decomposition3& d,
                                          const Limits& limits) {
  VerificationReport r;
  const bool usable = check_edge_partition(g, d.parts, 0, r);
  const auto& a = d.partition.parts;
  bool partition_ok = d.partition.disjoint() && d.partition.covers(g.vertex_count());
  for (const auto& part : a) {
    partition_ok = partition_ok && std::is_sorted(part.begin(), part.end());
  }
  add(r, "vertex_partition", partition_ok,
      partition_ok ? "" : "A1, A2, A3 must be sorted, disjoint and cover V(G)");
  add(r, "h3_shape", d.parts[3].has_value() == (d.shape != H3Shape::kNone),
      "shape must be set exactly when H3 is present");
  if (!usable) return r;

  std::array<std::optional<PartShape>, 4> shapes;
  bool regular = true;
  bool class1 = true;
  std::string irregular;
  std::string not_class1;
  for (int i = 0; i < 4; ++i) {
    if (!d.parts[i]) continue;
    shapes[i] = shape_of(g, *d.parts[i], limits);
    if (!shapes[i]->degree) {
      regular = false;
      irregular += (irregular.empty() ? "" : ",") + part_name(i);
    } else if (!shapes[i]->class1) {
      class1 = false;
      not_class1 += (not_class1.empty() ? "" : ",") + part_name(i);
    }
  }
  add(r, "regular_parts", regular, irregular.empty() ? "" : "not regular: " + irregular);
  add(r, "class1_parts", class1, not_class1.empty() ? "" : "Class 2: " + not_class1);
  if (shapes[0]) {
    add(r, "h0_spanning",
        static_cast<int>(shapes[0]->vertices.size()) == g.vertex_count(),
        "V(H0) = " + describe(shapes[0]->vertices));
  }
  auto expect = [&](int i, const std::vector<Vertex>& want,
                    const std::string& formula) {
    if (!shapes[i]) return;
    add(r, "h" + std::to_string(i) + "_vertex_set", shapes[i]->vertices == want,
        "V(" + part_name(i) + ") = " + describe(shapes[i]->vertices) +
            ", expected " + formula + " = " + describe(want));
  };
  expect(1, sorted_union(a[1], a[2]), "A2 u A3");
  expect(2, sorted_union(a[0], a[2]), "A1 u A3");
  if (d.shape == H3Shape::kA3) expect(3, sorted_union(a[2], {}), "A3");
  if (d.shape == H3Shape::kA1A2) expect(3, sorted_union(a[0], a[1]), "A1 u A2");
  return r;
}

EdgeColoring synthesize_coloring_3(const MultiGraph& g, const Decomposition3& d,
                                   const Limits& limits) {
  const VerificationReport report = verify_decomposition_3(g, d, limits);
  if (!report.passed()) {
    throw Error(ErrorKind::kInvalidCertificate,
                "decomposition fails clause " + report.first_failure());
  }
  EdgeColoring c = color_parts(g, d.parts, limits);
  const PaletteSystem ps = palettes_of(g, c);
  for (const auto& cls : d.partition.parts) {
    for (Vertex v : cls) {
      if (ps.vertex_class[v] != ps.vertex_class[cls.front()]) {
        throw Error(ErrorKind::kInvalidCertificate,
                    "vertex class is not palette-constant");
      }
    }
  }
  return c;
}

Decomposition3 as_decomposition_3(const MultiGraph& g,
                                  const RegularDecomposition3& d) {
  Decomposition3 out;
  out.parts[0] = d.spanning_part;
  for (int i = 0; i < 3; ++i) {
    if (!d.parts[i].empty()) out.parts[i + 1] = d.parts[i];
  }
  out.shape = out.parts[3] ? H3Shape::kA1A2 : H3Shape::kNone;
  const std::vector<Vertex> v1 =
      d.parts[0].empty() ? std::vector<Vertex>{} : vertex_set_of(g, d.parts[0]);
  const std::vector<Vertex> v2 =
      d.parts[1].empty() ? std::vector<Vertex>{} : vertex_set_of(g, d.parts[1]);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool in1 = std::binary_search(v1.begin(), v1.end(), v);
    const bool in2 = std::binary_search(v2.begin(), v2.end(), v);
    const int cls = in1 && in2 ? 2 : (in1 ? 1 : 0);
    out.partition.parts[cls].push_back(v);
  }
  return out;
}

VerificationReport verify_regular_decomposition_3(const MultiGraph& g,
                                                  const RegularDecomposition3& d,
                                                  const Limits& limits) {
  VerificationReport r;
  const auto k = is_regular(g);
  add(r, "regular_graph", k && *k == d.degree,
      "graph must be " + std::to_string(d.degree) + "-regular");
  const int surplus = d.degree - d.r;
  add(r, "r_range", d.r >= 0 && d.r < d.degree, "need 0 <= r < k");
  add(r, "parity", surplus > 0 && surplus % 2 == 0, "k - r must be even and positive");
  add(r, "spanning_presence", d.spanning_part.has_value() == (d.r > 0),
      "spanning part present exactly when r > 0");

  std::array<Part, 4> parts{d.spanning_part, d.parts[0], d.parts[1], d.parts[2]};
  for (int i = 1; i < 4; ++i) {
    if (parts[i] && parts[i]->empty()) parts[i].reset();
  }
  add(r, "three_parts", parts[1] && parts[2] && parts[3], "all three parts required");
  if (!check_edge_partition(g, parts, 0, r)) return r;

  if (d.spanning_part) {
    const PartShape s = shape_of(g, *d.spanning_part, limits);
    add(r, "spanning_part",
        static_cast<int>(s.vertices.size()) == g.vertex_count() && s.degree == d.r &&
            s.class1,
        "spanning part must be a Class 1 " + std::to_string(d.r) + "-regular factor");
  }
  bool equal_degrees = true;
  bool class1 = true;
  for (int i = 1; i < 4; ++i) {
    if (!parts[i]) continue;
    const PartShape s = shape_of(g, *parts[i], limits);
    equal_degrees = equal_degrees && s.degree && 2 * *s.degree == surplus;
    class1 = class1 && s.class1;
  }
  add(r, "half_surplus_regular", equal_degrees,
      "each part must be " + std::to_string(surplus / 2) + "-regular");
  add(r, "class1_parts", class1);
  const VerificationReport inner =
      verify_decomposition_3(g, as_decomposition_3(g, d), limits);
  add(r, "decomposition3", inner.passed(), inner.first_failure());
  return r;
}

RegularCorollaryResult regular_corollary_check(const MultiGraph& g,
                                               const Limits& limits) {
  const auto k = is_regular(g);
  if (!k) throw Error(ErrorKind::kNotRegular, "graph is not regular");
  RegularCorollaryResult out;
  const PaletteIndexResult res = palette_index(g, limits);
  out.s_check = res.s_check;
  out.coloring = res.coloring;
  out.s3 = res.s_check == 3;
  if (!out.s3) return out;
  out.decomposition = extract_decomposition_3(g, res.coloring, limits);
  const Decomposition3& d = *out.decomposition;
  if (d.shape != H3Shape::kA1A2 || !d.parts[1] || !d.parts[2] || !d.parts[3]) {
    return out;
  }
  RegularDecomposition3 cert;
  cert.degree = *k;
  cert.spanning_part = d.parts[0];
  cert.r = d.parts[0] ? *is_regular(induced_edge_subgraph(g, *d.parts[0]).graph) : 0;
  for (int i = 0; i < 3; ++i) cert.parts[i] = *d.parts[i + 1];
  out.certificate = std::move(cert);
  return out;
}

int classify_cubic(const MultiGraph& g, const Limits& limits) {
  const auto k = is_regular(g);
  if (!k || *k != 3) throw Error(ErrorKind::kNotCubic, "graph is not 3-regular");
  if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, "graph is not connected");
  if (chromatic_index(g, limits).label == ClassLabel::kClass1) return 1;
  return has_perfect_matching(g) ? 3 : 4;
}

}  // namespace palettekit
