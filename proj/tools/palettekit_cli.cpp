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
// Command-line front end. Links only the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "palettekit/palettekit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check(pk_status status) {
  if (status != PK_OK) {
    throw InputError{std::string(pk_status_name(status)) + ": " + pk_last_error()};
  }
}

// Owns a string returned by the library.
class Owned {
 public:
  ~Owned() { pk_string_free(s_); }
  char** out() { return &s_; }
  const char* get() const { return s_ == nullptr ? "" : s_; }

 private:
  char* s_ = nullptr;
};

class Graph {
 public:
  explicit Graph(const std::string& path) {
    check(pk_graph_parse(read_file(path).c_str(), PK_FORMAT_AUTO, &g_));
  }
  ~Graph() { pk_graph_free(g_); }
  const pk_graph* get() const { return g_; }

 private:
  pk_graph* g_ = nullptr;
};

pk_limits make_limits(int max_edges) {
  pk_limits limits;
  pk_limits_default(&limits);
  if (const char* env = std::getenv("PALETTE_KIT_MAX_EDGES")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value <= 0) {
      throw InputError{"PALETTE_KIT_MAX_EDGES must be a positive integer"};
    }
    if (max_edges <= 0) max_edges = static_cast<int>(value);
  }
  if (max_edges > 0) {
    limits.max_edges_palette = max_edges;
    if (limits.max_edges_chromatic < max_edges) limits.max_edges_chromatic = max_edges;
  }
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Palette index toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pk_version());

  int max_edges = 0;
  app.add_option("--max-edges", max_edges, "Edge cap for the exact solvers")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph6, sparse6 or edge-list JSON ('-' for stdin)")
        ->required();
  };

  auto* palette = app.add_subcommand("palette-index", "Exact palette index and minimal coloring");
  add_file(palette);
  auto* chromatic = app.add_subcommand("chromatic-index", "Exact chromatic index and class");
  add_file(chromatic);

  int target = 3;
  auto* decompose = app.add_subcommand("decompose", "Extract and verify a decomposition");
  add_file(decompose);
  decompose->add_option("--target", target, "2 or 3")->check(CLI::IsMember({2, 3}));

  std::string certificate;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  add_file(verify);
  verify->add_option("--certificate", certificate, "Certificate JSON file")->required();

  bool text = false;
  auto* hyper = app.add_subcommand("hypergraph", "Associated hypergraph of a minimal coloring");
  add_file(hyper);
  hyper->add_flag("--text", text, "Print the plain-text rendering only");

  auto* cubic = app.add_subcommand("cubic-classify", "Palette index of a connected cubic graph");
  add_file(cubic);

  std::string checks;
  int jobs = 1;
  std::string format = "json";
  auto* corpus = app.add_subcommand("corpus", "Run checks over a graph collection");
  add_file(corpus);
  corpus->add_option("--checks", checks,
                     "lemma-not2,thm-cubic,thm-lower,thm-s2,thm-s3,cor-regular3,greedy-h0")
      ->required();
  corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--max-edges", max_edges, "Edge cap for the exact solvers")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    const pk_limits limits = make_limits(max_edges);
    if (*palette) {
      Graph g(file);
      Owned out;
      check(pk_palette_index(g.get(), &limits, out.out()));
      std::cout << out.get() << "\n";
    } else if (*chromatic) {
      Graph g(file);
      Owned out;
      check(pk_chromatic_index(g.get(), &limits, out.out()));
      std::cout << out.get() << "\n";
    } else if (*decompose) {
      Graph g(file);
      Owned out;
      check(pk_decompose(g.get(), target, &limits, out.out()));
      std::cout << out.get() << "\n";
    } else if (*verify) {
      Graph g(file);
      Owned out;
      int valid = 0;
      check(pk_verify_certificate(g.get(), read_file(certificate).c_str(), &limits,
                                  &valid, out.out()));
      std::cout << out.get() << "\n";
      return valid ? kExitOk : kExitCheckFailed;
    } else if (*hyper) {
      Graph g(file);
      Owned out;
      check(pk_hypergraph(g.get(), &limits, out.out()));
      if (text) {
        std::cout << nlohmann::json::parse(out.get())["text"].get<std::string>();
      } else {
        std::cout << out.get() << "\n";
      }
    } else if (*cubic) {
      Graph g(file);
      int s = 0;
      check(pk_classify_cubic(g.get(), &limits, &s));
      std::cout << "{\"s_check\":" << s << "}\n";
    } else if (*corpus) {
      pk_graph_list* list = nullptr;
      check(pk_graph_list_parse(read_file(file).c_str(), &list));
      pk_corpus_report* report = nullptr;
      const pk_status st = pk_corpus_run(list, checks.c_str(), jobs, &limits, &report);
      pk_graph_list_free(list);
      check(st);
      Owned rendered;
      Owned failures;
      const pk_status r1 = pk_corpus_report_render(
          report, format == "csv" ? PK_REPORT_CSV : PK_REPORT_JSON, rendered.out());
      const pk_status r2 = pk_corpus_report_failures(report, failures.out());
      const bool failed = pk_corpus_report_any_failure(report) != 0;
      pk_corpus_report_free(report);
      check(r1);
      check(r2);
      std::cout << rendered.get();
      if (failed) {
        std::cerr << "counterexample found\n" << failures.get();
        return kExitCheckFailed;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  }
  return kExitOk;
}
