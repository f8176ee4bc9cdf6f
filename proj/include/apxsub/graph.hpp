// Copyright 2026 The Authors.
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

// Undirected weighted graphs and their cut functions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "apxsub/subset.hpp"

namespace apxsub {

struct Edge {
  int u;
  int v;
  double w;
  bool operator==(const Edge&) const = default;
};

class WeightedGraph {
 public:
  WeightedGraph(int node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 1) throw std::invalid_argument("graph needs >= 1 node");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_) {
        throw std::out_of_range("edge endpoint out of range");
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop in graph");
      const auto lo = static_cast<std::uint64_t>(std::min(e.u, e.v));
      const auto hi = static_cast<std::uint64_t>(std::max(e.u, e.v));
      if (!seen.insert((lo << 32) | hi).second) {
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                    "-" + std::to_string(e.v));
      }
    }
  }

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  double cut_value(const Subset& s) const {
    if (s.universe() != node_count_) {
      throw std::out_of_range("subset universe does not match graph");
    }
    double total = 0.0;
    for (const Edge& e : edges_) {
      if (s.contains(e.u) != s.contains(e.v)) total += e.w;
    }
    return total;
  }

  bool operator==(const WeightedGraph&) const = default;

 private:
  int node_count_;
  std::vector<Edge> edges_;
};

inline double cut_value(const WeightedGraph& g, const Subset& s) {
  return g.cut_value(s);
}

// Set function S -> cut_G(S). Shares the graph between copies.
class CutFunction {
 public:
  explicit CutFunction(WeightedGraph g)
      : graph_(std::make_shared<const WeightedGraph>(std::move(g))) {}
  explicit CutFunction(std::shared_ptr<const WeightedGraph> g)
      : graph_(std::move(g)) {}

  int ground_size() const { return graph_->node_count(); }
  double operator()(const Subset& s) const { return graph_->cut_value(s); }
  const WeightedGraph& graph() const { return *graph_; }

 private:
  std::shared_ptr<const WeightedGraph> graph_;
};

// Text format: "nodes <N>" then one "<u> <v> <w>" line per edge.
inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "nodes " << g.node_count() << '\n';
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.w);
    out << e.u << ' ' << e.v << ' ' << buf << '\n';
  }
}

inline WeightedGraph read_graph(std::istream& in) {
  std::string line;
  long line_no = 0;
  int nodes = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("graph file, line " + std::to_string(line_no) +
                             ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag >> nodes) || tag != "nodes") {
      fail("expected header 'nodes <integer>'");
    }
    break;
  }
  if (nodes < 1) fail("missing or invalid header");
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Edge e{};
    if (!(ls >> e.u >> e.v >> e.w)) fail("expected '<u> <v> <w>'");
    edges.push_back(e);
  }
  return WeightedGraph(nodes, std::move(edges));
}

inline WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

inline void save_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

}  // namespace apxsub
