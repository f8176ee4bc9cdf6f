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

// apxsub: command-line front end.
//
// A function argument (--fn) is either an explicit table file or a builtin:
//   square:N          |S|^2 on N elements
//   lbcross:N         (N - 2|S|)^2 / 8
//   lbdimin:N         max(0, |S| - (N-1)/2), N odd
//   fk:K              the (2, ..., K+1)-block function f_K
//   log:K:SIZE        K blocks of SIZE, log2 of the largest intersection
//   cut:PATH          cut function of a graph file
// --noise gaussian:S2|rademacher:C with --noise-seed adds per-set noise.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apxsub.hpp"

namespace {

using apxsub::AnySetFunction;
using apxsub::Mask;
using apxsub::Subset;
using nlohmann::json;

struct FnArgs {
  std::string fn;
  std::string noise = "none";
  std::uint64_t noise_seed = 0;
};

void add_fn_options(CLI::App* cmd, FnArgs& a, bool with_noise = true) {
  cmd->add_option("--fn", a.fn, "table file or builtin (square:N, lbcross:N, "
                                "lbdimin:N, fk:K, log:K:SIZE, cut:PATH)")
      ->required();
  if (with_noise) {
    cmd->add_option("--noise", a.noise, "none | gaussian:VARIANCE | rademacher:C");
    cmd->add_option("--noise-seed", a.noise_seed, "seed of the noise draws");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument(what + " '" + s + "' is not an integer");
  }
  return v;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument(what + " '" + s + "' is not a number");
  }
  return v;
}

// Builtins that are block functions keep that view for `lb nu`.
struct Loaded {
  AnySetFunction f;
  std::optional<apxsub::BlockFunction> block;
};

Loaded load_base(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (colon != std::string::npos && !std::filesystem::exists(spec)) {
    if (head == "square") {
      const int n = to_int(rest, "n");
      return {apxsub::CardinalityFunction(
                  n, [](int k) { return static_cast<double>(k) * k; }),
              std::nullopt};
    }
    if (head == "lbcross") {
      auto bf = apxsub::make_lbcross(to_int(rest, "n"));
      return {bf, bf};
    }
    if (head == "lbdimin") {
      auto bf = apxsub::make_lbdimin(to_int(rest, "n"));
      return {bf, bf};
    }
    if (head == "fk") {
      auto fk = apxsub::make_fk(to_int(rest, "k"));
      return {fk, fk.as_block()};
    }
    if (head == "log") {
      const auto parts = split(rest, ':');
      if (parts.size() != 2) throw std::invalid_argument("expected log:K:SIZE");
      auto bf = apxsub::make_log_block(to_int(parts[0], "k"), to_int(parts[1], "size"));
      return {bf, bf};
    }
    if (head == "cut") {
      return {apxsub::CutFunction(apxsub::load_graph(rest)), std::nullopt};
    }
    throw std::invalid_argument("unknown builtin '" + head + "'");
  }
  return {apxsub::load_explicit(spec), std::nullopt};
}

Loaded load_fn(const FnArgs& a) {
  Loaded l = load_base(a.fn);
  if (a.noise == "none") return l;
  const auto colon = a.noise.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("expected --noise gaussian:VARIANCE or rademacher:C");
  }
  const std::string kind = a.noise.substr(0, colon);
  const double scale = to_double(a.noise.substr(colon + 1), "noise scale");
  apxsub::NoiseModel model;
  if (kind == "gaussian") {
    model = apxsub::NoiseModel::gaussian(scale, a.noise_seed);
  } else if (kind == "rademacher") {
    model = apxsub::NoiseModel::rademacher(scale, a.noise_seed);
  } else {
    throw std::invalid_argument("unknown noise kind '" + kind + "'");
  }
  return {apxsub::noisy_function(l.f, model), std::nullopt};
}

// Bitmask in the dense regime, sorted index list otherwise.
json subset_json(const Subset& s) {
  if (s.universe() <= apxsub::kDenseLimit) return s.mask();
  return s.indices();
}

json pair_json(const std::optional<apxsub::ConstraintPair>& p, bool first) {
  if (!p) return nullptr;
  return first ? p->a : p->b;
}

Mask parse_mask(const std::string& s, int n) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("set '" + s + "' is not a bitmask");
  }
  if (n < 64 && (v >> n) != 0) {
    throw std::out_of_range("set " + s + " has bits outside the ground set");
  }
  return v;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_table(const apxsub::ExplicitFunction& f, const std::string& out) {
  if (out.empty() || out == "-") {
    apxsub::write_explicit(std::cout, f);
  } else {
    apxsub::save_explicit(out, f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for approximately submodular set functions"};
  app.require_subcommand(1);

  // eps
  auto* eps = app.add_subcommand("eps", "approximation parameter of a function");
  eps->require_subcommand(1);
  FnArgs eps_exact_fn;
  std::string eps_class = "cross";
  auto* eps_exact = eps->add_subcommand("exact", "largest gap over a constraint class");
  add_fn_options(eps_exact, eps_exact_fn);
  eps_exact->add_option("--class", eps_class, "cross | dimin | full")
      ->check(CLI::IsMember({"cross", "dimin", "full"}));
  eps_exact->callback([&] {
    const Loaded l = load_fn(eps_exact_fn);
    const auto cls = apxsub::parse_constraint_class(eps_class);
    const auto r = apxsub::exact_epsilon(l.f, cls);
    print({{"class", eps_class},
           {"epsilon", r.epsilon},
           {"witness_A", pair_json(r.witness, true)},
           {"witness_B", pair_json(r.witness, false)},
           {"pairs_checked", r.pairs_checked}});
  });

  FnArgs eps_est_fn;
  std::uint64_t eps_pairs = 0;
  std::uint64_t eps_seed = 0;
  auto* eps_est = eps->add_subcommand("estimate", "largest gap over sampled pairs");
  add_fn_options(eps_est, eps_est_fn);
  eps_est->add_option("--pairs", eps_pairs, "number of sampled pairs")->required();
  eps_est->add_option("--seed", eps_seed, "sampling seed")->required();
  eps_est->callback([&] {
    const Loaded l = load_fn(eps_est_fn);
    const auto r = apxsub::estimate_epsilon_report(l.f, l.f.ground_size(), eps_pairs,
                                                   eps_seed);
    json out = {{"class", "full"}, {"epsilon", r.epsilon},
                {"witness_A", nullptr}, {"witness_B", nullptr},
                {"pairs", eps_pairs}};
    if (r.witness) {
      out["witness_A"] = subset_json(r.witness->first);
      out["witness_B"] = subset_json(r.witness->second);
    }
    print(out);
  });

  // filter
  auto* filt = app.add_subcommand("filter", "the submodularity filter g = f + offset(|S|)");
  filt->require_subcommand(1);
  FnArgs filt_eval_fn;
  double filt_eps = 0.0;
  std::string filt_set;
  auto* filt_eval = filt->add_subcommand("eval", "value of the filtered function on one set");
  add_fn_options(filt_eval, filt_eval_fn);
  filt_eval->add_option("--eps", filt_eps, "filter parameter")->required();
  filt_eval->add_option("--set", filt_set, "subset bitmask")->required();
  filt_eval->callback([&] {
    const Loaded l = load_fn(filt_eval_fn);
    const int n = l.f.ground_size();
    if (n > 64) throw std::invalid_argument("--set bitmasks need n <= 64");
    const Subset s = Subset::from_mask(n, parse_mask(filt_set, n));
    print({{"set", s.mask()},
           {"eps", filt_eps},
           {"f", l.f(s)},
           {"value", apxsub::filter_value(l.f, filt_eps, s)},
           {"offset", apxsub::filter_offset(n, filt_eps, s.size())}});
  });

  FnArgs filt_exp_fn;
  double filt_exp_eps = 0.0;
  std::string filt_out;
  auto* filt_exp = filt->add_subcommand("export", "write the filtered table");
  add_fn_options(filt_exp, filt_exp_fn);
  filt_exp->add_option("--eps", filt_exp_eps, "filter parameter")->required();
  filt_exp->add_option("--out", filt_out, "output table file")->required();
  filt_exp->callback([&] {
    const Loaded l = load_fn(filt_exp_fn);
    write_table(apxsub::to_explicit(apxsub::filter_function(l.f, filt_exp_eps)), filt_out);
  });

  // lb
  auto* lb = app.add_subcommand("lb", "lower-bound constructions");
  lb->require_subcommand(1);
  std::string lb_kind;
  int lb_k = 0;
  int lb_n = 0;
  int lb_size = 0;
  std::string lb_out;
  auto* lb_make = lb->add_subcommand("make", "tabulate a construction");
  lb_make->add_option("--kind", lb_kind, "fk | dimin | cross | log")
      ->required()
      ->check(CLI::IsMember({"fk", "dimin", "cross", "log"}));
  lb_make->add_option("--k", lb_k, "k for fk, block count for log");
  lb_make->add_option("--n", lb_n, "ground-set size for dimin and cross");
  lb_make->add_option("--size", lb_size, "block size for log");
  lb_make->add_option("--out", lb_out, "output table file (default stdout)");
  lb_make->callback([&] {
    auto need = [](int v, const char* flag) {
      if (v < 1) throw std::invalid_argument(std::string(flag) + " is required");
      return v;
    };
    AnySetFunction f;
    if (lb_kind == "fk") {
      f = apxsub::make_fk(need(lb_k, "--k"));
    } else if (lb_kind == "dimin") {
      f = apxsub::make_lbdimin(need(lb_n, "--n"));
    } else if (lb_kind == "cross") {
      f = apxsub::make_lbcross(need(lb_n, "--n"));
    } else {
      f = apxsub::make_log_block(need(lb_k, "--k"), need(lb_size, "--size"));
    }
    write_table(apxsub::to_explicit(f), lb_out);
  });

  FnArgs lb_nu_fn;
  std::string lb_blocks;
  auto* lb_nu = lb->add_subcommand("nu", "block-function distance lower bound");
  add_fn_options(lb_nu, lb_nu_fn, false);
  lb_nu->add_option("--blocks", lb_blocks,
                    "comma-separated block sizes for a table file, e.g. 2,3");
  lb_nu->callback([&] {
    Loaded l = load_fn(lb_nu_fn);
    std::optional<apxsub::BlockFunction> bf = l.block;
    if (!lb_blocks.empty()) {
      std::vector<int> sizes;
      for (const auto& s : split(lb_blocks, ',')) sizes.push_back(to_int(s, "block size"));
      bf = apxsub::as_block_function(apxsub::to_explicit(l.f), sizes);
      if (!bf) throw std::invalid_argument("function is not constant on block profiles");
    }
    if (!bf) throw std::invalid_argument("need a block builtin or --blocks");
    print({{"blocks", bf->block_sizes()}, {"nu", apxsub::nu(*bf)}});
  });

  // distance
  FnArgs dist_fn;
  double dist_tol = 1e-6;
  std::string dist_nearest;
  auto* dist = app.add_subcommand("distance", "exact l-infinity distance to submodularity");
  add_fn_options(dist, dist_fn);
  dist->add_option("--tol", dist_tol, "certification tolerance");
  dist->add_option("--emit-nearest", dist_nearest, "write the nearest submodular table");
  dist->callback([&] {
    const Loaded l = load_fn(dist_fn);
    const auto r = apxsub::exact_distance(l.f, dist_tol);
    json pairs = json::array();
    for (const auto& [p, w] : r.certificate.pairs) {
      pairs.push_back({{"A", p.a}, {"B", p.b}, {"weight", w}});
    }
    print({{"t_star", r.t_star},
           {"lower_bound", r.certificate.bound},
           {"upper_bound", r.upper_bound},
           {"pivots", r.pivots},
           {"certificate", pairs}});
    if (!dist_nearest.empty()) apxsub::save_explicit(dist_nearest, r.nearest);
  });

  // opt
  FnArgs opt_fn;
  std::string opt_algo;
  bool opt_filtered = false;
  std::optional<double> opt_eps;
  std::optional<std::uint64_t> opt_est;
  std::uint64_t opt_seed = 0;
  std::optional<int> opt_budget;
  double opt_tau = 0.0;
  auto* opt = app.add_subcommand("opt", "maximize a function");
  add_fn_options(opt, opt_fn);
  opt->add_option("--algo", opt_algo, "exhaustive | greedy | local | rdg")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "greedy", "local", "rdg"}));
  auto* filtered_flag = opt->add_flag("--filtered", opt_filtered, "maximize the filtered function");
  opt->add_option("--eps", opt_eps, "filter parameter")->needs(filtered_flag);
  auto* est_opt = opt->add_option("--eps-estimate", opt_est,
                                  "filter with eps estimated from this many pairs");
  opt->add_option("--seed", opt_seed, "seed for rdg and eps estimation")->required();
  opt->add_option("--budget", opt_budget, "greedy cardinality budget (default n)");
  opt->add_option("--tau", opt_tau, "local search improvement threshold");
  est_opt->excludes("--eps");
  opt->callback([&] {
    const Loaded l = load_fn(opt_fn);
    const int n = l.f.ground_size();
    AnySetFunction target = l.f;
    std::optional<double> eps_used;
    if (opt_est) {
      eps_used = apxsub::estimate_epsilon(l.f, n, *opt_est, apxsub::derive_seed(opt_seed, 3));
    } else if (opt_filtered) {
      if (!opt_eps) throw std::invalid_argument("--filtered needs --eps");
      eps_used = *opt_eps;
    }
    if (eps_used) target = apxsub::filter_function(l.f, *eps_used);

    apxsub::OptResult r;
    if (opt_algo == "exhaustive") {
      r = apxsub::exhaustive_max(target, n);
    } else if (opt_algo == "greedy") {
      r = apxsub::greedy(target, n, opt_budget.value_or(n));
    } else if (opt_algo == "local") {
      r = apxsub::local_search(target, n, opt_tau);
    } else {
      r = apxsub::rdg(target, n, opt_seed);
    }
    json out = {{"algo", opt_algo},
                {"set", subset_json(r.best_set)},
                {"value", l.f(r.best_set)},
                {"queries", r.query_count}};
    if (eps_used) {
      out["eps"] = *eps_used;
      out["filtered_value"] = r.best_value;
    }
    print(out);
  });

  // graph
  auto* graph = app.add_subcommand("graph", "graph generation and ingestion");
  graph->require_subcommand(1);
  std::vector<std::string> gen_er;
  std::vector<std::string> gen_sbm;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = graph->add_subcommand("gen", "random graph");
  auto* er_opt = gen->add_option("--er", gen_er, "N P")->expected(2);
  auto* sbm_opt = gen->add_option("--sbm", gen_sbm, "sizes.json probs.json")->expected(2);
  er_opt->excludes(sbm_opt);
  gen->add_option("--seed", gen_seed, "graph seed")->required();
  gen->add_option("--out", gen_out, "output graph file")->required();
  gen->callback([&] {
    apxsub::WeightedGraph g(1, {});
    if (!gen_er.empty()) {
      g = apxsub::gen_er(to_int(gen_er[0], "N"), to_double(gen_er[1], "P"), gen_seed);
    } else if (!gen_sbm.empty()) {
      auto read = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return json::parse(in);
      };
      g = apxsub::gen_sbm(read(gen_sbm[0]).get<std::vector<int>>(),
                          read(gen_sbm[1]).get<std::vector<std::vector<double>>>(),
                          gen_seed);
    } else {
      throw std::invalid_argument("need --er or --sbm");
    }
    apxsub::save_graph(gen_out, g);
    print({{"nodes", g.node_count()}, {"edges", g.edges().size()}});
  });

  std::string ingest_csv;
  std::string ingest_out;
  auto* ingest = graph->add_subcommand("ingest", "signed-trust CSV to graph file");
  ingest->add_option("--csv", ingest_csv, "SOURCE,TARGET,RATING[,TIME] rows")->required();
  ingest->add_option("--out", ingest_out, "output graph file")->required();
  ingest->callback([&] {
    const auto r = apxsub::ingest_snap_csv(ingest_csv);
    apxsub::save_graph(ingest_out, r.graph);
    print({{"nodes", r.graph.node_count()},
           {"edges", r.graph.edges().size()},
           {"rows", r.rows},
           {"self_loops", r.self_loops},
           {"overwrites", r.overwrites},
           {"out_of_range", r.out_of_range}});
  });

  // exp
  auto* exp = app.add_subcommand("exp", "noisy cut-maximization experiments");
  exp->require_subcommand(1);
  std::string exp_config;
  std::string exp_out;
  bool exp_json = false;
  auto* exp_run = exp->add_subcommand("run", "run an experiment config");
  exp_run->add_option("--config", exp_config, "JSON config")->required();
  exp_run->add_option("--out", exp_out, "report file")->required();
  exp_run->add_flag("--json", exp_json, "write JSON instead of CSV");
  exp_run->callback([&] {
    const auto cfg = apxsub::load_config(exp_config);
    const auto r = apxsub::run_experiment(cfg);
    apxsub::export_report(r, exp_json ? apxsub::ReportFormat::kJson : apxsub::ReportFormat::kCsv,
                          exp_out);
    print({{"trials", r.trials.size()},
           {"ratios", r.stats.count},
           {"excluded", r.stats.excluded},
           {"avg", std::isnan(r.stats.avg) ? json(nullptr) : json(r.stats.avg)},
           {"min", std::isnan(r.stats.min) ? json(nullptr) : json(r.stats.min)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
