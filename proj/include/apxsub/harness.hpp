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

// Seeded noisy-cut maximization experiments.
//
// Each trial builds f(S) = cut_G(S) + Z_S, obtains eps, runs the same
// algorithm on f and on its filtered version g, and scores both output sets
// on f: ratio = f(S_g) / f(S_f). Trial t draws every seed from
// derive_seed(master_seed, t), and the algorithm on f and on g shares the
// same seed. Reports depend only on the config, never on the thread count.
//
// Config (JSON):
//   {
//     "graph": {"kind": "er", "n": 20, "p": 0.5}
//            | {"kind": "sbm", "sizes": [100, 900], "probs": [[0.1, 0.8], [0.8, 0.1]]}
//            | {"kind": "file", "path": "graph.txt"}        (graph text format)
//            | {"kind": "snap_csv", "path": "trust.csv"},
//     "noise": {"kind": "none"} | {"kind": "gaussian", "sigma2": 5}
//            | {"kind": "rademacher", "c": 80},
//     "algo": "local" | "rdg" | "exhaustive",
//     "trials": 10,
//     "eps": {"mode": "estimate", "pairs": 4000} | {"mode": "exact"}
//          | {"mode": "fixed", "value": 1.5},
//     "seed": 1,
//     "tau": 0
//   }
// "pairs" defaults to 10 n^2; "tau" (local search threshold) defaults to 0.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apxsub/constraints.hpp"
#include "apxsub/filter.hpp"
#include "apxsub/graph.hpp"
#include "apxsub/graphs.hpp"
#include "apxsub/noise.hpp"
#include "apxsub/optimize.hpp"
#include "apxsub/parallel.hpp"
#include "apxsub/random.hpp"

namespace apxsub {

struct GraphSource {
  enum class Kind { kErdosRenyi, kBlockModel, kGraphFile, kSnapCsv };
  Kind kind = Kind::kErdosRenyi;
  int n = 0;
  double p = 0.0;
  std::vector<int> sizes;
  std::vector<std::vector<double>> probs;
  std::string path;
};

enum class Algorithm { kLocalSearch, kRdg, kExhaustive };

struct EpsMode {
  enum class Kind { kEstimate, kExact, kFixed };
  Kind kind = Kind::kEstimate;
  std::optional<std::uint64_t> pairs;  // kEstimate; default 10 n^2
  double value = 0.0;                  // kFixed
};

struct ExperimentConfig {
  GraphSource graph;
  NoiseKind noise = NoiseKind::kNone;
  double noise_scale = 0.0;  // variance (gaussian) or c (rademacher)
  Algorithm algo = Algorithm::kLocalSearch;
  int trials = 1;
  EpsMode eps;
  Seed master_seed = 0;
  double tau = 0.0;
};

struct TrialRecord {
  int trial = 0;
  Seed seed = 0;
  double eps = 0.0;
  double value_raw = 0.0;       // f(S_f)
  double value_filtered = 0.0;  // f(S_g)
  std::optional<double> ratio;  // empty when f(S_f) == 0
  bool operator==(const TrialRecord&) const = default;
};

struct RatioStats {
  std::size_t count = 0;
  std::size_t excluded = 0;  // trials with f(S_f) == 0
  double min = std::numeric_limits<double>::quiet_NaN();
  double avg = std::numeric_limits<double>::quiet_NaN();
  double median = std::numeric_limits<double>::quiet_NaN();
  double sd = std::numeric_limits<double>::quiet_NaN();  // sample sd
};

struct ExperimentReport {
  std::vector<TrialRecord> trials;
  RatioStats stats;
  std::uint64_t num_pairs = 0;  // estimator sample size, 0 unless estimating
  int ground_size = 0;
  double runtime_seconds = 0.0;
};

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kLocalSearch: return "local";
    case Algorithm::kRdg: return "rdg";
    case Algorithm::kExhaustive: return "exhaustive";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "local") return Algorithm::kLocalSearch;
  if (s == "rdg") return Algorithm::kRdg;
  if (s == "exhaustive") return Algorithm::kExhaustive;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

inline RatioStats ratio_stats(const std::vector<TrialRecord>& trials) {
  RatioStats st;
  std::vector<double> r;
  for (const auto& t : trials) {
    if (t.ratio) {
      r.push_back(*t.ratio);
    } else {
      ++st.excluded;
    }
  }
  st.count = r.size();
  if (r.empty()) return st;
  double sum = 0.0;
  for (double v : r) sum += v;
  st.avg = sum / static_cast<double>(r.size());
  std::vector<double> sorted = r;
  std::sort(sorted.begin(), sorted.end());
  st.min = sorted.front();
  const std::size_t mid = sorted.size() / 2;
  st.median = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
  double ss = 0.0;
  for (double v : r) ss += (v - st.avg) * (v - st.avg);
  st.sd = r.size() > 1 ? std::sqrt(ss / static_cast<double>(r.size() - 1)) : 0.0;
  return st;
}

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(cfg.noise_scale >= 0.0)) throw std::invalid_argument("noise scale must be >= 0");
  if (!(cfg.tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  if (cfg.eps.kind == EpsMode::Kind::kFixed && !(cfg.eps.value >= 0.0)) {
    throw std::invalid_argument("fixed eps must be >= 0");
  }
  if (cfg.eps.kind == EpsMode::Kind::kEstimate && cfg.eps.pairs && *cfg.eps.pairs == 0) {
    throw std::invalid_argument("estimate pairs must be >= 1");
  }
  const auto& g = cfg.graph;
  if (g.kind == GraphSource::Kind::kErdosRenyi && g.n < 1) {
    throw std::invalid_argument("graph n must be >= 1");
  }
}

namespace detail {

inline int planned_ground_size(const GraphSource& g,
                               const std::shared_ptr<const WeightedGraph>& fixed) {
  switch (g.kind) {
    case GraphSource::Kind::kErdosRenyi: return g.n;
    case GraphSource::Kind::kBlockModel: {
      int n = 0;
      for (int s : g.sizes) n += s;
      return n;
    }
    default: return fixed->node_count();
  }
}

inline std::shared_ptr<const WeightedGraph> trial_graph(
    const GraphSource& g, const std::shared_ptr<const WeightedGraph>& fixed, Seed seed) {
  switch (g.kind) {
    case GraphSource::Kind::kErdosRenyi:
      return std::make_shared<const WeightedGraph>(gen_er(g.n, g.p, seed));
    case GraphSource::Kind::kBlockModel:
      return std::make_shared<const WeightedGraph>(gen_sbm(g.sizes, g.probs, seed));
    default:
      return fixed;
  }
}

inline NoiseModel noise_model(const ExperimentConfig& cfg, Seed seed) {
  switch (cfg.noise) {
    case NoiseKind::kNone: return NoiseModel::none();
    case NoiseKind::kGaussian: return NoiseModel::gaussian(cfg.noise_scale, seed);
    case NoiseKind::kRademacher: return NoiseModel::rademacher(cfg.noise_scale, seed);
  }
  throw std::logic_error("unknown noise kind");
}

template <SetFunction F>
Subset maximize(const F& f, int n, Algorithm algo, double tau, Seed seed) {
  switch (algo) {
    case Algorithm::kLocalSearch: return local_search(f, n, tau).best_set;
    case Algorithm::kRdg: return rdg(f, n, seed).best_set;
    case Algorithm::kExhaustive: return exhaustive_max(f, n).best_set;
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                       unsigned threads = default_thread_count()) {
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();

  std::shared_ptr<const WeightedGraph> fixed;
  if (cfg.graph.kind == GraphSource::Kind::kGraphFile) {
    fixed = std::make_shared<const WeightedGraph>(load_graph(cfg.graph.path));
  } else if (cfg.graph.kind == GraphSource::Kind::kSnapCsv) {
    fixed = std::make_shared<const WeightedGraph>(ingest_snap_csv(cfg.graph.path).graph);
  }
  const int n = detail::planned_ground_size(cfg.graph, fixed);
  if (cfg.algo == Algorithm::kExhaustive) require_dense(n, kDenseLimit, "exhaustive search");
  if (cfg.eps.kind == EpsMode::Kind::kExact) require_dense(n, 14, "exact eps");
  std::uint64_t num_pairs = 0;
  if (cfg.eps.kind == EpsMode::Kind::kEstimate) {
    num_pairs = cfg.eps.pairs.value_or(10ULL * static_cast<std::uint64_t>(n) *
                                       static_cast<std::uint64_t>(n));
  }

  std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
  parallel_chunks(records.size(), threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      const Seed trial_seed = derive_seed(cfg.master_seed, t);
      auto graph = detail::trial_graph(cfg.graph, fixed, derive_seed(trial_seed, 1));
      const NoisyFunction<CutFunction> f(CutFunction(graph),
                                         detail::noise_model(cfg, derive_seed(trial_seed, 2)));
      double eps = 0.0;
      switch (cfg.eps.kind) {
        case EpsMode::Kind::kEstimate:
          eps = estimate_epsilon(f, n, num_pairs, derive_seed(trial_seed, 3));
          break;
        case EpsMode::Kind::kExact:
          eps = exact_epsilon(f, ConstraintClass::kCross).epsilon;
          break;
        case EpsMode::Kind::kFixed:
          eps = cfg.eps.value;
          break;
      }
      const Seed algo_seed = derive_seed(trial_seed, 4);

      Subset s_f;
      Subset s_g;
      if (cfg.algo == Algorithm::kExhaustive || cfg.eps.kind == EpsMode::Kind::kExact) {
        const ExplicitFunction table = to_explicit(f);
        const auto g = filter_function(table, eps);
        if (cfg.eps.kind == EpsMode::Kind::kExact && verify_submodular(g, 1e-9)) {
          throw std::logic_error("filtered function is not submodular at exact eps");
        }
        s_f = detail::maximize(table, n, cfg.algo, cfg.tau, algo_seed);
        s_g = detail::maximize(g, n, cfg.algo, cfg.tau, algo_seed);
      } else {
        s_f = detail::maximize(f, n, cfg.algo, cfg.tau, algo_seed);
        s_g = detail::maximize(filter_function(f, eps), n, cfg.algo, cfg.tau, algo_seed);
      }

      TrialRecord& rec = records[t];
      rec.trial = static_cast<int>(t);
      rec.seed = trial_seed;
      rec.eps = eps;
      rec.value_raw = f(s_f);
      rec.value_filtered = f(s_g);
      if (rec.value_raw != 0.0) rec.ratio = rec.value_filtered / rec.value_raw;
    }
  });

  ExperimentReport report;
  report.trials = std::move(records);
  report.stats = ratio_stats(report.trials);
  report.num_pairs = num_pairs;
  report.ground_size = n;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream& out, const ExperimentReport& r) {
  out << "trial,seed,eps,value_raw,value_filtered,ratio\n";
  for (const auto& t : r.trials) {
    out << t.trial << ',' << t.seed << ',' << format_double(t.eps) << ','
        << format_double(t.value_raw) << ',' << format_double(t.value_filtered) << ','
        << (t.ratio ? format_double(*t.ratio) : std::string()) << '\n';
  }
}

inline nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json g;
  switch (cfg.graph.kind) {
    case GraphSource::Kind::kErdosRenyi:
      g = {{"kind", "er"}, {"n", cfg.graph.n}, {"p", cfg.graph.p}};
      break;
    case GraphSource::Kind::kBlockModel:
      g = {{"kind", "sbm"}, {"sizes", cfg.graph.sizes}, {"probs", cfg.graph.probs}};
      break;
    case GraphSource::Kind::kGraphFile:
      g = {{"kind", "file"}, {"path", cfg.graph.path}};
      break;
    case GraphSource::Kind::kSnapCsv:
      g = {{"kind", "snap_csv"}, {"path", cfg.graph.path}};
      break;
  }
  nlohmann::json noise;
  switch (cfg.noise) {
    case NoiseKind::kNone: noise = {{"kind", "none"}}; break;
    case NoiseKind::kGaussian: noise = {{"kind", "gaussian"}, {"sigma2", cfg.noise_scale}}; break;
    case NoiseKind::kRademacher: noise = {{"kind", "rademacher"}, {"c", cfg.noise_scale}}; break;
  }
  nlohmann::json eps;
  switch (cfg.eps.kind) {
    case EpsMode::Kind::kEstimate:
      eps = {{"mode", "estimate"}};
      if (cfg.eps.pairs) eps["pairs"] = *cfg.eps.pairs;
      break;
    case EpsMode::Kind::kExact: eps = {{"mode", "exact"}}; break;
    case EpsMode::Kind::kFixed: eps = {{"mode", "fixed"}, {"value", cfg.eps.value}}; break;
  }
  return {{"graph", g},  {"noise", noise},         {"algo", to_string(cfg.algo)},
          {"trials", cfg.trials}, {"eps", eps}, {"seed", cfg.master_seed},
          {"tau", cfg.tau}};
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  const auto& g = j.at("graph");
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "er") {
    cfg.graph.kind = GraphSource::Kind::kErdosRenyi;
    cfg.graph.n = g.at("n").get<int>();
    cfg.graph.p = g.at("p").get<double>();
  } else if (kind == "sbm") {
    cfg.graph.kind = GraphSource::Kind::kBlockModel;
    cfg.graph.sizes = g.at("sizes").get<std::vector<int>>();
    cfg.graph.probs = g.at("probs").get<std::vector<std::vector<double>>>();
  } else if (kind == "file" || kind == "snap_csv") {
    cfg.graph.kind = kind == "file" ? GraphSource::Kind::kGraphFile
                                    : GraphSource::Kind::kSnapCsv;
    cfg.graph.path = g.at("path").get<std::string>();
  } else {
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
  }

  if (j.contains("noise")) {
    const auto& nz = j.at("noise");
    const std::string nk = nz.at("kind").get<std::string>();
    if (nk == "none") {
      cfg.noise = NoiseKind::kNone;
    } else if (nk == "gaussian") {
      cfg.noise = NoiseKind::kGaussian;
      cfg.noise_scale = nz.at("sigma2").get<double>();
    } else if (nk == "rademacher") {
      cfg.noise = NoiseKind::kRademacher;
      cfg.noise_scale = nz.at("c").get<double>();
    } else {
      throw std::invalid_argument("unknown noise kind '" + nk + "'");
    }
  }

  cfg.algo = parse_algorithm(j.at("algo").get<std::string>());
  cfg.trials = j.value("trials", 1);
  if (j.contains("eps")) {
    const auto& e = j.at("eps");
    const std::string mode = e.at("mode").get<std::string>();
    if (mode == "estimate") {
      cfg.eps.kind = EpsMode::Kind::kEstimate;
      if (e.contains("pairs")) cfg.eps.pairs = e.at("pairs").get<std::uint64_t>();
    } else if (mode == "exact") {
      cfg.eps.kind = EpsMode::Kind::kExact;
    } else if (mode == "fixed") {
      cfg.eps.kind = EpsMode::Kind::kFixed;
      cfg.eps.value = e.at("value").get<double>();
    } else {
      throw std::invalid_argument("unknown eps mode '" + mode + "'");
    }
  }
  cfg.master_seed = j.value("seed", Seed{0});
  cfg.tau = j.value("tau", 0.0);
  validate(cfg);
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return config_from_json(nlohmann::json::parse(in));
}

inline nlohmann::json to_json(const ExperimentReport& r) {
  auto num = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"trial", t.trial},
                      {"seed", t.seed},
                      {"eps", t.eps},
                      {"value_raw", t.value_raw},
                      {"value_filtered", t.value_filtered},
                      {"ratio", t.ratio ? nlohmann::json(*t.ratio) : nlohmann::json(nullptr)}});
  }
  return {{"trials", trials},
          {"aggregates",
           {{"count", r.stats.count},
            {"excluded", r.stats.excluded},
            {"min", num(r.stats.min)},
            {"avg", num(r.stats.avg)},
            {"median", num(r.stats.median)},
            {"sd", num(r.stats.sd)}}},
          {"num_pairs", r.num_pairs},
          {"ground_size", r.ground_size},
          {"runtime_seconds", r.runtime_seconds}};
}

inline ExperimentReport report_from_json(const nlohmann::json& j) {
  auto num = [](const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  ExperimentReport r;
  for (const auto& t : j.at("trials")) {
    TrialRecord rec;
    rec.trial = t.at("trial").get<int>();
    rec.seed = t.at("seed").get<Seed>();
    rec.eps = t.at("eps").get<double>();
    rec.value_raw = t.at("value_raw").get<double>();
    rec.value_filtered = t.at("value_filtered").get<double>();
    if (!t.at("ratio").is_null()) rec.ratio = t.at("ratio").get<double>();
    r.trials.push_back(rec);
  }
  const auto& a = j.at("aggregates");
  r.stats.count = a.at("count").get<std::size_t>();
  r.stats.excluded = a.at("excluded").get<std::size_t>();
  r.stats.min = num(a.at("min"));
  r.stats.avg = num(a.at("avg"));
  r.stats.median = num(a.at("median"));
  r.stats.sd = num(a.at("sd"));
  r.num_pairs = j.at("num_pairs").get<std::uint64_t>();
  r.ground_size = j.at("ground_size").get<int>();
  r.runtime_seconds = j.at("runtime_seconds").get<double>();
  return r;
}

enum class ReportFormat { kCsv, kJson };

inline void export_report(const ExperimentReport& r, ReportFormat format,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (format == ReportFormat::kCsv) {
    write_csv(out, r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace apxsub
