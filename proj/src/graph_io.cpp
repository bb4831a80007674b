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
#include "palettekit/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "json.hpp"
#include "palettekit/error.hpp"

namespace palettekit {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kMalformedInput, what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

int sextet(char ch) {
  const int x = static_cast<unsigned char>(ch) - kBias;
  if (x < 0 || x > 63) {
    malformed(std::string("byte outside the printable range: '") + ch + "'");
  }
  return x;
}

// Reads N(n) and advances pos past it.
std::int64_t read_size(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) malformed("missing vertex count");
  if (s[pos] != '~') return sextet(s[pos++]);
  ++pos;
  int groups = 3;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    groups = 6;
  }
  if (pos + groups > s.size()) malformed("truncated vertex count");
  std::int64_t n = 0;
  for (int i = 0; i < groups; ++i) n = (n << 6) | sextet(s[pos++]);
  return n;
}

void write_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back('~');
  if (groups == 6) out.push_back('~');
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  }
}

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}

  void put(bool bit) {
    acc_ = (acc_ << 1) | (bit ? 1 : 0);
    if (++used_ == 6) flush_full();
  }

  void put_bits(std::uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) put(((value >> b) & 1) != 0);
  }

  int free_in_group() const { return used_ == 0 ? 6 : 6 - used_; }
  bool partial() const { return used_ != 0; }

  // Completes the current group with the given low bits.
  void finish(int fill) {
    const int k = 6 - used_;
    out_.push_back(static_cast<char>(((acc_ << k) | fill) + kBias));
    acc_ = 0;
    used_ = 0;
  }

 private:
  void flush_full() {
    out_.push_back(static_cast<char>(acc_ + kBias));
    acc_ = 0;
    used_ = 0;
  }

  std::string& out_;
  int acc_ = 0;
  int used_ = 0;
};

int bits_for(std::int64_t n) {
  int nb = 0;
  for (std::int64_t i = n - 1; i > 0; i >>= 1) ++nb;
  return nb;
}

void sort_edges(std::vector<Edge>& edges) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
}

int checked_vertex_count(std::int64_t n) {
  if (n > 1'000'000) malformed("vertex count too large: " + std::to_string(n));
  return static_cast<int>(n);
}

}  // namespace

MultiGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) malformed("empty graph6 string");
  std::size_t pos = 0;
  const int n = checked_vertex_count(read_size(line, pos));
  const std::int64_t pairs = std::int64_t{n} * (n - 1) / 2;
  const std::int64_t groups = (pairs + 5) / 6;
  if (static_cast<std::int64_t>(line.size() - pos) != groups) {
    malformed("graph6 length mismatch: expected " + std::to_string(groups) +
              " data bytes for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::int64_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int x = sextet(line[pos + bit / 6]);
      if ((x >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; bit < groups * 6; ++bit) {
    if ((sextet(line[pos + bit / 6]) >> (5 - bit % 6)) & 1) {
      malformed("nonzero graph6 padding");
    }
  }
  sort_edges(edges);
  return MultiGraph(n, std::move(edges));
}

MultiGraph parse_sparse6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kSparse6Header)) line.remove_prefix(kSparse6Header.size());
  if (line.empty() || line[0] != ':') malformed("sparse6 must start with ':'");
  std::size_t pos = 1;
  const int n = checked_vertex_count(read_size(line, pos));
  const int nb = bits_for(n);

  std::int64_t bits_left = static_cast<std::int64_t>(line.size() - pos) * 6;
  std::int64_t cursor = 0;
  auto next_bit = [&]() {
    const int x = sextet(line[pos + cursor / 6]);
    const int b = (x >> (5 - cursor % 6)) & 1;
    ++cursor;
    --bits_left;
    return b;
  };

  std::vector<Edge> edges;
  std::int64_t v = 0;
  while (bits_left >= 1 + nb) {
    if (next_bit()) ++v;
    std::int64_t x = 0;
    for (int i = 0; i < nb; ++i) x = (x << 1) | next_bit();
    if (x > v) {
      v = x;
    } else if (v < n) {
      if (x == v) {
        throw Error(ErrorKind::kLoopRejected,
                    "sparse6 loop at vertex " + std::to_string(v));
      }
      edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(v)});
    }
  }
  sort_edges(edges);
  return MultiGraph(n, std::move(edges));
}

MultiGraph parse_edge_list_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    malformed(R"(expected {"n": int, "edges": [[u, v], ...]})");
  }
  const std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 0) malformed("negative vertex count");
  MultiGraph g(checked_vertex_count(n));
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      malformed("each edge must be a pair of integers");
    }
    g.add_edge(pair[0].get<int>(), pair[1].get<int>());
  }
  return g;
}

MultiGraph parse_graph(std::string_view input, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: return parse_graph6(input);
    case GraphFormat::kSparse6: return parse_sparse6(input);
    case GraphFormat::kEdgeListJson: return parse_edge_list_json(input);
  }
  malformed("unknown format");
}

MultiGraph parse_nauty_line(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kSparse6Header) || line.starts_with(":")) {
    return parse_sparse6(line);
  }
  return parse_graph6(line);
}

std::string encode_graph6(const MultiGraph& g) {
  if (!g.is_simple()) {
    throw Error(ErrorKind::kInvalidArgument,
                "graph6 cannot encode parallel edges");
  }
  const int n = g.vertex_count();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  std::string out;
  write_size(out, n);
  BitWriter w(out);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) w.put(adj[static_cast<std::size_t>(i) * n + j]);
  }
  if (w.partial()) w.finish(0);
  return out;
}

std::string encode_sparse6(const MultiGraph& g) {
  const int n = g.vertex_count();
  const int nb = bits_for(n);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  });

  std::string out(":");
  write_size(out, n);
  BitWriter w(out);
  int last = 0;
  for (const Edge& e : edges) {
    const int j = e.v;
    const int i = e.u;
    if (j == last) {
      w.put(false);
    } else {
      w.put(true);
      if (j > last + 1) {
        w.put_bits(j, nb);
        w.put(false);
      }
      last = j;
    }
    w.put_bits(i, nb);
  }
  if (w.partial()) {
    const int k = w.free_in_group();
    if (k >= nb + 1 && last == n - 2 && n == (1 << nb)) {
      w.finish((1 << (k - 1)) - 1);
    } else {
      w.finish((1 << k) - 1);
    }
  }
  return out;
}

std::string encode_edge_list_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}}.dump();
}

std::vector<MultiGraph> parse_graph_collection(std::string_view text) {
  std::string_view body = trim(text);
  std::vector<MultiGraph> out;
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      malformed(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object()) {
      out.push_back(parse_edge_list_json(body));
    } else {
      for (const auto& item : j) out.push_back(parse_edge_list_json(item.dump()));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back(parse_nauty_line(line));
    start = end + 1;
  }
  return out;
}

}  // namespace palettekit
