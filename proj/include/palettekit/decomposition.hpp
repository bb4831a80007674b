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
#include <optional>
#include <string>
#include <vector>

#include "palettekit/coloring.hpp"
#include "palettekit/graph.hpp"
#include "palettekit/limits.hpp"

namespace palettekit {

// Parts absent from a decomposition are std::nullopt; a present part is a
// nonempty edge set.
using Part = std::optional<EdgeSubset>;

// H0 spanning and min-degree regular, H1 (max - min degree)-regular; both
// Class 1. Together they partition E(G).
struct Decomposition2 {
  Part h0;
  Part h1;

  bool operator==(const Decomposition2&) const = default;
};

enum class H3Shape {
  kNone,      // H3 absent
  kA3,        // V(H3) = A3
  kA1A2,      // V(H3) = A1 u A2
};

const char* to_string(H3Shape shape);

// Up to four Class 1 regular parts with H0 spanning, V(H1) = A2 u A3,
// V(H2) = A1 u A3 and V(H3) given by the shape.
struct Decomposition3 {
  std::array<Part, 4> parts;  // H0..H3
  VertexPartition partition;
  H3Shape shape = H3Shape::kNone;

  bool operator==(const Decomposition3&) const = default;
};

// Regular graph split into an optional spanning r-regular part and three
// (k - r)/2-regular parts, all Class 1.
struct RegularDecomposition3 {
  int degree = 0;  // k
  int r = 0;
  Part spanning_part;
  std::array<EdgeSubset, 3> parts;
};

struct ClauseResult {
  std::string clause;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClauseResult> clauses;

  bool passed() const;
  // Name of the first failing clause, or empty.
  std::string first_failure() const;
};

// Requires exactly two palettes, nested (equivalently a pairwise-intersecting
// associated hypergraph). H0 collects the colors of the smaller palette,
// H1 the rest. Throws kNotTwoPalettes or kNonMinimalColoring.
Decomposition2 extract_decomposition_2(const MultiGraph& g,
                                       const EdgeColoring& c,
                                       const Limits& limits = {});

VerificationReport verify_decomposition_2(const MultiGraph& g,
                                          const Decomposition2& d,
                                          const Limits& limits = {});

// Colors 1..min_degree on H0 and min_degree+1..max_degree on H1. Throws
// kInvalidCertificate naming the first failed clause.
EdgeColoring synthesize_coloring_2(const MultiGraph& g, const Decomposition2& d,
                                   const Limits& limits = {});

// Works on colorings with at most three palettes whose Venn regions respect
// the minimal-coloring conditions: at most one palette owns private colors,
// and that palette's opposite pairwise region is empty. Throws
// kTooManyPalettes or kNonMinimalColoring.
Decomposition3 extract_decomposition_3(const MultiGraph& g,
                                       const EdgeColoring& c,
                                       const Limits& limits = {});

VerificationReport verify_decomposition_3(const MultiGraph& g,
                                          const Decomposition3& d,
                                          const Limits& limits = {});

// Each present part gets its own interval of colors, H0 first, colored with
// exactly its degree. Throws kInvalidCertificate naming the failed clause.
EdgeColoring synthesize_coloring_3(const MultiGraph& g, const Decomposition3& d,
                                   const Limits& limits = {});

// Decomposition3 view of a Decomposition2: A2 is V(H1), A1 the remaining
// vertices, A3 empty.
Decomposition3 embed_decomposition_2(const MultiGraph& g,
                                     const Decomposition2& d);

VerificationReport verify_regular_decomposition_3(
    const MultiGraph& g, const RegularDecomposition3& d,
    const Limits& limits = {});

// Decomposition3 view with A3 = V(H1) n V(H2), A1 = V(H2) \ A3,
// A2 = V(H1) \ A3 and shape A1A2.
Decomposition3 as_decomposition_3(const MultiGraph& g,
                                  const RegularDecomposition3& d);

struct RegularCorollaryResult {
  bool s3 = false;
  int s_check = 0;
  std::optional<RegularDecomposition3> certificate;
  std::optional<Decomposition3> decomposition;
  EdgeColoring coloring;
};

// For a regular graph: palette index 3 and, if so, the certificate from the
// extracted decomposition. Throws kNotRegular.
RegularCorollaryResult regular_corollary_check(const MultiGraph& g,
                                               const Limits& limits = {});

// Connected cubic graphs: 1 if Class 1, 3 if Class 2 with a perfect
// matching, 4 otherwise. Throws kNotCubic or kNotConnected.
int classify_cubic(const MultiGraph& g, const Limits& limits = {});

}  // namespace palettekit
