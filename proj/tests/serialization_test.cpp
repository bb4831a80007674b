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
#include "palettekit/serialization.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "palettekit/error.hpp"

namespace palettekit {
namespace {

using nlohmann::json;
using namespace palettekit::testing;

TEST(ColoringJson, RoundTrip) {
  const EdgeColoring c{{1, 2, 1}};
  EXPECT_EQ(to_json(c).dump(), R"({"colors":[1,2,1]})");
  EXPECT_EQ(coloring_from_json(to_json(c)).colors, c.colors);
}

TEST(ColoringJson, Malformed) {
  EXPECT_THROW(coloring_from_json(json::array()), Error);
  EXPECT_THROW(coloring_from_json(json{{"colors", {1, "x"}}}), Error);
  try {
    coloring_from_json(json{{"colours", json::array()}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMalformedInput);
  }
}

TEST(PaletteIndexJson, Fields) {
  PaletteIndexResult r;
  r.s_check = 2;
  r.k_min = 2;
  r.coloring.colors = {1, 2, 1};
  const json j = to_json(r);
  EXPECT_EQ(j["s_check"], 2);
  EXPECT_EQ(j["k_min"], 2);
  EXPECT_EQ(j["colors"], json({1, 2, 1}));
}

TEST(HypergraphJson, RoundTripSortsMembers) {
  const json j = json::parse(R"({"vertices":[[1,2],[2]],"hyperedges":[[1,0,1],[0]]})");
  const Hypergraph h = hypergraph_from_json(j);
  EXPECT_EQ(h.hyperedges, (std::vector<std::vector<int>>{{0, 1}, {0}}));
  EXPECT_EQ(to_json(h)["vertices"], j["vertices"]);
  EXPECT_THROW(hypergraph_from_json(json{{"vertices", 3}}), Error);
}

TEST(Decomposition3Json, RoundTrip) {
  Decomposition3 d;
  d.parts[0] = EdgeSubset{0, 2};
  d.parts[3] = EdgeSubset{1};
  d.partition.parts[0] = {0, 1};
  d.partition.parts[2] = {2};
  d.shape = H3Shape::kA3;
  const json j = to_json(d);
  EXPECT_TRUE(j["H1"].is_null());
  EXPECT_EQ(j["shape"], "A3");
  EXPECT_EQ(decomposition_from_json(j), d);
}

TEST(Decomposition3Json, AbsentKeysAreAbsentParts) {
  const Decomposition3 d = decomposition_from_json(json::parse(R"({"H1":[2,0]})"));
  EXPECT_FALSE(d.parts[0].has_value());
  EXPECT_EQ(d.parts[1], (EdgeSubset{0, 2}));
  EXPECT_EQ(d.shape, H3Shape::kNone);
}

TEST(Decomposition3Json, Malformed) {
  for (const char* text : {R"([1])", R"({"H0":"x"})", R"({"H0":[1.5]})",
                           R"({"A":[[0],[1],[2],[3]]})", R"({"A":[["a"]]})",
                           R"({"shape":"A2"})"}) {
    try {
      decomposition_from_json(json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidCertificate) << text;
    }
  }
}

TEST(Decomposition2Json, RoundTrip) {
  const Decomposition2 d{std::nullopt, EdgeSubset{0, 1}};
  const json j = to_json(d);
  EXPECT_EQ(j.dump(), R"({"H0":null,"H1":[0,1]})");
  EXPECT_EQ(decomposition2_from_json(j), d);
}

TEST(RegularJson, RoundTrip) {
  const CertifiedGraph k7 = k7_three_cubic_parts();
  const json j = to_json(k7.certificate);
  EXPECT_EQ(j["k"], 6);
  EXPECT_EQ(j["r"], 0);
  EXPECT_TRUE(j["spanning"].is_null());
  const RegularDecomposition3 back = regular_decomposition_from_json(j);
  EXPECT_EQ(back.degree, 6);
  EXPECT_EQ(back.parts, k7.certificate.parts);
  EXPECT_FALSE(back.spanning_part.has_value());
}

TEST(RegularJson, Malformed) {
  for (const char* text : {R"({"parts":[[0],[1],[2]]})", R"({"k":3,"parts":[[0],[1]]})",
                           R"({"k":3,"parts":[[0],[1],null]})", R"({"k":3,"r":"1","parts":[[0],[1],[2]]})"}) {
    EXPECT_THROW(regular_decomposition_from_json(json::parse(text)), Error) << text;
  }
}

TEST(ReportJson, Clauses) {
  VerificationReport r;
  r.clauses.push_back({"a", true, ""});
  r.clauses.push_back({"b", false, "why"});
  const json j = to_json(r);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["clauses"][1]["clause"], "b");
  EXPECT_EQ(j["clauses"][1]["detail"], "why");
}

}  // namespace
}  // namespace palettekit
