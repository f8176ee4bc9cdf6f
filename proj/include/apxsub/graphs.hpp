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

// Random graph generators and signed-trust edge list ingestion.
//
// Generators decide each unordered pair {u, v}, u < v, independently. The
// coin for the pair with lexicographic index i is Philox(seed, stream 1, i),
// so a graph is a pure function of its parameters and seed.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apxsub/graph.hpp"
#include "apxsub/random.hpp"

namespace apxsub {

namespace detail {

inline bool pair_coin(Seed seed, std::uint64_t pair_index, double p) {
  return to_unit(philox_words(seed, 1, pair_index)[0]) < p;
}

}  // namespace detail

inline WeightedGraph gen_er(int n, double p, Seed seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  std::vector<Edge> edges;
  std::uint64_t idx = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++idx) {
      if (detail::pair_coin(seed, idx, p)) edges.push_back({u, v, 1.0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

// Parts are consecutive node ranges of the given sizes.
inline WeightedGraph gen_sbm(const std::vector<int>& sizes,
                             const std::vector<std::vector<double>>& probs,
                             Seed seed) {
  const std::size_t parts = sizes.size();
  if (parts == 0) throw std::invalid_argument("need at least one part");
  if (probs.size() != parts) {
    throw std::invalid_argument("probability matrix must be " +
                                std::to_string(parts) + "x" + std::to_string(parts));
  }
  for (std::size_t i = 0; i < parts; ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("part sizes must be >= 1");
    if (probs[i].size() != parts) {
      throw std::invalid_argument("probability matrix must be square");
    }
    for (std::size_t j = 0; j < parts; ++j) {
      const double q = probs[i][j];
      if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("probabilities must be in [0, 1]");
      }
      if (q != probs[j][i]) throw std::invalid_argument("probability matrix must be symmetric");
    }
  }
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts; ++i) {
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  std::uint64_t idx = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++idx) {
      if (detail::pair_coin(seed, idx, probs[part_of[u]][part_of[v]])) {
        edges.push_back({u, v, 1.0});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

struct IngestReport {
  WeightedGraph graph{1, {}};
  std::vector<long long> original_ids;  // compact id -> id in the file
  std::uint64_t rows = 0;
  std::uint64_t self_loops = 0;
  std::uint64_t overwrites = 0;      // repeated (source, target) rows
  std::uint64_t out_of_range = 0;    // edge weights outside [-10, 10]
};

// Rows "SOURCE,TARGET,RATING[,TIME...]". Node ids are compacted in order of
// first appearance. Both directions of a pair average into one undirected
// edge; a repeated direction keeps its last rating. Self-loops are dropped.
inline IngestReport ingest_snap_csv(std::istream& in) {
  IngestReport report;
  std::unordered_map<long long, int> compact;
  std::map<std::pair<int, int>, double> directed;
  auto node = [&](long long id) {
    auto [it, inserted] = compact.try_emplace(id, static_cast<int>(compact.size()));
    if (inserted) report.original_ids.push_back(id);
    return it->second;
  };

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() < 3) fail("expected SOURCE,TARGET,RATING[,TIME]");
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    long long src = 0;
    long long dst = 0;
    for (auto [field, out] : {std::pair{fields[0], &src}, std::pair{fields[1], &dst}}) {
      const auto f = trim(field);
      const auto res = std::from_chars(f.data(), f.data() + f.size(), *out);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        fail("node id '" + std::string(f) + "' is not an integer");
      }
    }
    double rating = 0.0;
    {
      const std::string r(trim(fields[2]));
      std::size_t used = 0;
      try {
        rating = std::stod(r, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != r.size()) fail("rating '" + r + "' is not numeric");
    }
    ++report.rows;
    const int u = node(src);
    const int v = node(dst);
    if (u == v) {
      ++report.self_loops;
      continue;
    }
    auto [it, inserted] = directed.insert_or_assign({u, v}, rating);
    if (!inserted) ++report.overwrites;
  }
  if (report.rows == 0) throw std::runtime_error("csv input has no rows");

  std::vector<Edge> edges;
  for (const auto& [key, w] : directed) {
    const auto [u, v] = key;
    const auto back = directed.find({v, u});
    if (back != directed.end()) {
      if (u > v) continue;  // emitted from the (v, u) side
      edges.push_back({u, v, (w + back->second) / 2.0});
    } else {
      edges.push_back({std::min(u, v), std::max(u, v), w});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : edges) {
    if (e.w < -10.0 || e.w > 10.0) ++report.out_of_range;
  }
  report.graph = WeightedGraph(static_cast<int>(compact.size()), std::move(edges));
  return report;
}

inline IngestReport ingest_snap_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingest_snap_csv(in);
}

}  // namespace apxsub
