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
#include "palettekit/palettekit.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

constexpr const char* kPetersen = "IheA@GUAo";

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  pk_string_free(s);
  return out;
}

struct GraphHandle {
  pk_graph* g = nullptr;
  ~GraphHandle() { pk_graph_free(g); }
};

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(pk_version(), "");
  EXPECT_STREQ(pk_status_name(PK_OK), "ok");
  EXPECT_STREQ(pk_status_name(PK_ERR_INTERNAL), "internal");
  EXPECT_STREQ(pk_status_name(static_cast<pk_status>(99)), "unknown");
}

TEST(CApi, DefaultLimits) {
  pk_limits l{};
  pk_limits_default(&l);
  EXPECT_GT(l.max_edges_palette, 0);
  EXPECT_GE(l.max_edges_chromatic, l.max_edges_palette);
}

TEST(CApi, BuildGraphAndEncode) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_new(3, &h.g), PK_OK);
  int id = -1;
  ASSERT_EQ(pk_graph_add_edge(h.g, 0, 1, &id), PK_OK);
  EXPECT_EQ(id, 0);
  ASSERT_EQ(pk_graph_add_edge(h.g, 1, 2, &id), PK_OK);
  EXPECT_EQ(pk_graph_vertex_count(h.g), 3);
  EXPECT_EQ(pk_graph_edge_count(h.g), 2);
  EXPECT_EQ(pk_graph_add_edge(h.g, 1, 1, &id), PK_ERR_LOOP_REJECTED);
  EXPECT_STRNE(pk_last_error(), "");
  EXPECT_EQ(pk_graph_add_edge(h.g, 0, 9, &id), PK_ERR_MALFORMED_INPUT);
  char* text = nullptr;
  ASSERT_EQ(pk_graph_encode(h.g, PK_FORMAT_GRAPH6, &text), PK_OK);
  EXPECT_EQ(take(text), "Bg");
  EXPECT_STREQ(pk_last_error(), "");
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(pk_graph_new(3, nullptr), PK_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pk_graph_new(-1, nullptr), PK_ERR_INVALID_ARGUMENT);
  pk_graph_free(nullptr);
  pk_string_free(nullptr);
}

TEST(CApi, ParseErrors) {
  pk_graph* g = nullptr;
  EXPECT_EQ(pk_graph_parse("B@", PK_FORMAT_GRAPH6, &g), PK_ERR_MALFORMED_INPUT);
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(pk_graph_parse(R"({"n":2,"edges":[[0,0]]})", PK_FORMAT_AUTO, &g),
            PK_ERR_LOOP_REJECTED);
  EXPECT_EQ(pk_graph_parse("Bg\nBg\n", PK_FORMAT_AUTO, &g), PK_ERR_MALFORMED_INPUT);
}

TEST(CApi, PaletteIndexPetersen) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse(kPetersen, PK_FORMAT_AUTO, &h.g), PK_OK);
  int s = 0;
  int k = 0;
  ASSERT_EQ(pk_palette_index_value(h.g, nullptr, &s, &k), PK_OK);
  EXPECT_EQ(s, 3);
  EXPECT_EQ(k, 4);
  char* out = nullptr;
  ASSERT_EQ(pk_palette_index(h.g, nullptr, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_EQ(j["s_check"], 3);
  EXPECT_EQ(j["colors"].size(), 15u);
  EXPECT_EQ(j["palettes"].size(), 3u);
  int cubic = 0;
  ASSERT_EQ(pk_classify_cubic(h.g, nullptr, &cubic), PK_OK);
  EXPECT_EQ(cubic, 3);
}

TEST(CApi, ResourceLimit) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse(kPetersen, PK_FORMAT_AUTO, &h.g), PK_OK);
  pk_limits l{};
  pk_limits_default(&l);
  l.max_edges_palette = 10;
  int s = 0;
  int k = 0;
  EXPECT_EQ(pk_palette_index_value(h.g, &l, &s, &k), PK_ERR_RESOURCE_LIMIT);
  EXPECT_EQ(pk_palette_index_oracle(h.g, nullptr, &s), PK_ERR_RESOURCE_LIMIT);
}

TEST(CApi, ChromaticAndOracle) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse("D?{", PK_FORMAT_AUTO, &h.g), PK_OK);  // K1,4
  char* out = nullptr;
  ASSERT_EQ(pk_chromatic_index(h.g, nullptr, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_EQ(j["chromatic_index"], 4);
  EXPECT_EQ(j["class"], "Class1");
  int s = 0;
  ASSERT_EQ(pk_palette_index_oracle(h.g, nullptr, &s), PK_OK);
  EXPECT_EQ(s, 5);
  int cubic = 0;
  EXPECT_EQ(pk_classify_cubic(h.g, nullptr, &cubic), PK_ERR_NOT_CUBIC);
}

TEST(CApi, DecomposeAndVerify) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse(R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})", PK_FORMAT_AUTO,
                           &h.g),
            PK_OK);
  char* out = nullptr;
  ASSERT_EQ(pk_decompose(h.g, 2, nullptr, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_EQ(j["decomposition"]["H0"], json({0, 2}));
  EXPECT_TRUE(j["verification"]["valid"].get<bool>());
  EXPECT_EQ(j["synthesized"]["palettes"], 2);

  int valid = -1;
  ASSERT_EQ(pk_verify_certificate(h.g, j["decomposition"].dump().c_str(), nullptr,
                                  &valid, &out),
            PK_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(json::parse(take(out))["kind"], "decomposition2");

  ASSERT_EQ(pk_verify_certificate(h.g, R"({"H0":[0,1,2],"H1":null})", nullptr, &valid,
                                  &out),
            PK_OK);
  EXPECT_EQ(valid, 0);
  take(out);
  EXPECT_EQ(pk_verify_certificate(h.g, "{", nullptr, &valid, &out),
            PK_ERR_INVALID_CERTIFICATE);
  EXPECT_EQ(pk_decompose(h.g, 4, nullptr, &out), PK_ERR_INVALID_ARGUMENT);
}

TEST(CApi, DecomposeErrors) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse(kPetersen, PK_FORMAT_AUTO, &h.g), PK_OK);
  char* out = nullptr;
  EXPECT_EQ(pk_decompose(h.g, 2, nullptr, &out), PK_ERR_NOT_TWO_PALETTES);
  EXPECT_NE(std::string(pk_last_error()), "");
  ASSERT_EQ(pk_decompose(h.g, 3, nullptr, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_TRUE(j["verification"]["valid"].get<bool>());
  EXPECT_EQ(j["regular"]["r"], 1);
}

TEST(CApi, VerifyRegularCertificateOnK7) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_new(7, &h.g), PK_OK);
  // Edge ids: K4 on {0,1,2,3} (0-5), K4 on {0,4,5,6} (6-11), K3,3 (12-20).
  const int k4a[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const int k4b[][2] = {{0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}};
  int id = 0;
  for (const auto& e : k4a) pk_graph_add_edge(h.g, e[0], e[1], &id);
  for (const auto& e : k4b) pk_graph_add_edge(h.g, e[0], e[1], &id);
  for (int u : {1, 2, 3}) {
    for (int v : {4, 5, 6}) pk_graph_add_edge(h.g, u, v, &id);
  }
  const std::string cert =
      R"({"k":6,"r":0,"spanning":null,"parts":[[0,1,2,3,4,5],[6,7,8,9,10,11],)"
      R"([12,13,14,15,16,17,18,19,20]]})";
  int valid = -1;
  char* out = nullptr;
  ASSERT_EQ(pk_verify_certificate(h.g, cert.c_str(), nullptr, &valid, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_EQ(valid, 1) << j.dump();
  EXPECT_EQ(j["kind"], "regular");
  EXPECT_EQ(j["synthesized"]["palettes"], 3);
  std::set<int> colors(j["synthesized"]["colors"].begin(), j["synthesized"]["colors"].end());
  EXPECT_EQ(colors.size(), 9u);
}

TEST(CApi, HypergraphAndHColoring) {
  GraphHandle h;
  ASSERT_EQ(pk_graph_parse("C~", PK_FORMAT_GRAPH6, &h.g), PK_OK);  // K4
  char* out = nullptr;
  ASSERT_EQ(pk_hypergraph(h.g, nullptr, &out), PK_OK);
  const json j = json::parse(take(out));
  EXPECT_EQ(j["s_check"], 1);
  EXPECT_TRUE(j["pairwise_intersecting"].get<bool>());
  const json cert = {{"hypergraph", j["hypergraph"]}, {"h_coloring", j["h_coloring"]}};
  int valid = -1;
  ASSERT_EQ(pk_verify_certificate(h.g, cert.dump().c_str(), nullptr, &valid, &out), PK_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(json::parse(take(out))["kind"], "h_coloring");
}

TEST(CApi, Corpus) {
  pk_graph_list* list = nullptr;
  ASSERT_EQ(pk_graph_list_parse("C~\nIheA@GUAo\n", &list), PK_OK);
  ASSERT_EQ(pk_graph_list_size(list), 2u);
  pk_graph* second = nullptr;
  ASSERT_EQ(pk_graph_list_get(list, 1, &second), PK_OK);
  EXPECT_EQ(pk_graph_edge_count(second), 15);
  pk_graph_free(second);
  EXPECT_EQ(pk_graph_list_get(list, 2, &second), PK_ERR_INVALID_ARGUMENT);

  pk_corpus_report* report = nullptr;
  EXPECT_EQ(pk_corpus_run(list, "thm-cubic,nope", 1, nullptr, &report),
            PK_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(pk_corpus_run(list, "thm-cubic,lemma-not2", 2, nullptr, &report), PK_OK);
  EXPECT_EQ(pk_corpus_report_any_failure(report), 0);
  EXPECT_EQ(pk_corpus_report_graphs_skipped(report), 0);
  char* out = nullptr;
  ASSERT_EQ(pk_corpus_report_render(report, PK_REPORT_CSV, &out), PK_OK);
  const std::string csv = take(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  ASSERT_EQ(pk_corpus_report_render(report, PK_REPORT_JSON, &out), PK_OK);
  EXPECT_TRUE(json::accept(take(out)));
  ASSERT_EQ(pk_corpus_report_failures(report, &out), PK_OK);
  EXPECT_EQ(take(out), "");
  pk_corpus_report_free(report);
  pk_graph_list_free(list);
}

}  // namespace
