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
#include "palettekit/serialization.hpp"

#include <algorithm>
#include <string>

#include "palettekit/error.hpp"

namespace palettekit {

using nlohmann::json;

namespace {

[[noreturn]] void bad_certificate(const std::string& what) {
  throw Error(ErrorKind::kInvalidCertificate, what);
}

json part_json(const Part& p) { return p ? json(*p) : json(nullptr); }

Part part_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_array()) bad_certificate(std::string(key) + " must be an array or null");
  EdgeSubset s;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer()) bad_certificate(std::string(key) + " holds a non-integer");
    s.push_back(x.get<EdgeId>());
  }
  return normalize_subset(std::move(s));
}

}  // namespace

json to_json(const EdgeColoring& c) { return json{{"colors", c.colors}}; }

EdgeColoring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("colors") || !j["colors"].is_array()) {
    throw Error(ErrorKind::kMalformedInput, R"(expected {"colors": [...]})");
  }
  EdgeColoring c;
  for (const auto& x : j["colors"]) {
    if (!x.is_number_integer()) {
      throw Error(ErrorKind::kMalformedInput, "colors must be integers");
    }
    c.colors.push_back(x.get<Color>());
  }
  return c;
}

json to_json(const PaletteIndexResult& r) {
  return json{{"s_check", r.s_check}, {"k_min", r.k_min}, {"colors", r.coloring.colors}};
}

json to_json(const Hypergraph& h) {
  return json{{"vertices", h.vertices}, {"hyperedges", h.hyperedges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  Hypergraph h;
  try {
    h.vertices = j.at("vertices").get<std::vector<Palette>>();
    h.hyperedges = j.at("hyperedges").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kMalformedInput, std::string("bad hypergraph: ") + e.what());
  }
  for (auto& members : h.hyperedges) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  return h;
}

json to_json(const Decomposition3& d) {
  json shape = nullptr;
  if (d.shape != H3Shape::kNone) shape = to_string(d.shape);
  return json{{"H0", part_json(d.parts[0])},
              {"H1", part_json(d.parts[1])},
              {"H2", part_json(d.parts[2])},
              {"H3", part_json(d.parts[3])},
              {"A", d.partition.parts},
              {"shape", shape}};
}

Decomposition3 decomposition_from_json(const json& j) {
  if (!j.is_object()) bad_certificate("certificate must be a JSON object");
  Decomposition3 d;
  const char* keys[] = {"H0", "H1", "H2", "H3"};
  for (int i = 0; i < 4; ++i) d.parts[i] = part_from_json(j, keys[i]);
  if (j.contains("A")) {
    const json& a = j["A"];
    if (!a.is_array() || a.size() > 3) bad_certificate("A must list at most three vertex sets");
    for (std::size_t i = 0; i < a.size(); ++i) {
      try {
        d.partition.parts[i] = a[i].get<std::vector<Vertex>>();
      } catch (const json::exception&) {
        bad_certificate("A entries must be integer arrays");
      }
      std::sort(d.partition.parts[i].begin(), d.partition.parts[i].end());
    }
  }
  if (j.contains("shape") && !j["shape"].is_null()) {
    const std::string s = j["shape"].is_string() ? j["shape"].get<std::string>() : "";
    if (s == "A3") {
      d.shape = H3Shape::kA3;
    } else if (s == "A1A2") {
      d.shape = H3Shape::kA1A2;
    } else {
      bad_certificate(R"(shape must be "A3", "A1A2" or null)");
    }
  }
  return d;
}

json to_json(const Decomposition2& d) {
  return json{{"H0", part_json(d.h0)}, {"H1", part_json(d.h1)}};
}

json to_json(const RegularDecomposition3& d) {
  return json{{"k", d.degree},
              {"r", d.r},
              {"spanning", part_json(d.spanning_part)},
              {"parts", d.parts}};
}

Decomposition2 decomposition2_from_json(const json& j) {
  if (!j.is_object()) bad_certificate("certificate must be a JSON object");
  return Decomposition2{part_from_json(j, "H0"), part_from_json(j, "H1")};
}

RegularDecomposition3 regular_decomposition_from_json(const json& j) {
  if (!j.is_object()) bad_certificate("certificate must be a JSON object");
  RegularDecomposition3 d;
  if (!j.contains("k") || !j["k"].is_number_integer()) bad_certificate("k must be an integer");
  d.degree = j["k"].get<int>();
  if (j.contains("r")) {
    if (!j["r"].is_number_integer()) bad_certificate("r must be an integer");
    d.r = j["r"].get<int>();
  }
  d.spanning_part = part_from_json(j, "spanning");
  if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].size() != 3) {
    bad_certificate("parts must list three edge sets");
  }
  for (int i = 0; i < 3; ++i) {
    const json wrapper = {{"part", j["parts"][i]}};
    const Part p = part_from_json(wrapper, "part");
    if (!p) bad_certificate("parts entries must be arrays");
    d.parts[i] = *p;
  }
  return d;
}

json to_json(const VerificationReport& r) {
  json clauses = json::array();
  for (const ClauseResult& c : r.clauses) {
    clauses.push_back({{"clause", c.clause}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"valid", r.passed()}, {"clauses", clauses}};
}

}  // namespace palettekit
