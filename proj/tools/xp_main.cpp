// Command-line front end: graph generation, spectral reports, path queries,
// closed-form bounds, query games, and batch experiments with CSV output.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xp/bench.hpp"
#include "xp/bounds.hpp"
#include "xp/generators.hpp"
#include "xp/graph_io.hpp"
#include "xp/pathfind.hpp"
#include "xp/querygame.hpp"
#include "xp/spectral.hpp"

using nlohmann::json;

namespace {

xp::Graph load_graph(const std::string& path, const std::string& format) {
  if (format == "binary") return xp::read_binary(path);
  if (format == "text") return xp::read_edge_list(path);
  throw xp::parameter_error("unknown format: " + format);
}

void save_graph(const xp::Graph& g, const std::string& path, const std::string& format) {
  if (format == "binary") {
    xp::write_binary(g, path);
  } else if (format == "text") {
    xp::write_edge_list(g, path);
  } else {
    throw xp::parameter_error("unknown format: " + format);
  }
}

json spectral_json(const xp::SpectralReport& rep) {
  json j;
  j["lambda_est"] = rep.lambda_est;
  j["lambda2"] = rep.lambda2;
  j["lambda_min"] = rep.lambda_min;
  j["method"] = rep.method == xp::SpectralReport::Method::kExact ? "exact" : "power";
  j["iterations"] = rep.iterations;
  j["residual"] = rep.residual;
  j["is_ramanujan"] = rep.is_ramanujan;
  if (!std::isnan(rep.ratio)) j["ratio"] = rep.ratio;
  return j;
}

json path_json(const xp::PathResult& res) {
  json j;
  j["status"] = res.found() ? "found" : "not_found";
  if (res.found()) {
    j["distance"] = *res.distance;
    j["path"] = res.path;
  }
  j["visited_count"] = res.visited_count;
  j["expanded_count"] = res.expanded_count;
  j["query_count"] = res.query_count;
  if (res.meet_node) j["meet_node"] = *res.meet_node;
  return j;
}

double resolve_lambda(const xp::Graph& g, const std::string& lambda_arg) {
  if (lambda_arg != "auto") {
    std::size_t used = 0;
    double x = std::stod(lambda_arg, &used);
    if (used != lambda_arg.size() || !(x > 0))
      throw xp::parameter_error("--lambda must be 'auto' or a positive number");
    return x;
  }
  if (g.regular_degree()) {
    try {
      return xp::lambda_power(g, 1e-4).lambda_est;
    } catch (const xp::convergence_error& e) {
      return e.best.lambda_est;
    }
  }
  if (g.num_nodes() <= xp::kExactEigensolveMaxNodes) return xp::lambda_exact(g).lambda_est;
  throw xp::parameter_error("cannot estimate lambda for this graph; pass --lambda");
}

int run(int argc, char** argv) {
  CLI::App app{"expander short-path toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph and write it to a file");
  std::string gen_model = "regular", gen_out, gen_format = "text", gen_algo = "auto";
  std::uint32_t gen_n = 1024, gen_m = 16;
  int gen_d = 3;
  double gen_p = 0.01;
  std::uint64_t gen_seed = 1;
  bool gen_contract = false;
  gen->add_option("--model", gen_model, "regular | er | margulis | matching")
      ->check(CLI::IsMember({"regular", "er", "margulis", "matching"}));
  gen->add_option("--n", gen_n, "number of nodes (groups for matching)");
  gen->add_option("--d", gen_d, "degree / group size");
  gen->add_option("--p", gen_p, "edge probability for er");
  gen->add_option("--m", gen_m, "torus side for margulis");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--algo", gen_algo, "regular sampler: auto | reject | pairing")
      ->check(CLI::IsMember({"auto", "reject", "pairing"}));
  gen->add_flag("--contract", gen_contract, "matching model: contract groups to a simple graph");
  gen->add_option("--out", gen_out, "output path")->required();
  gen->add_option("--format", gen_format, "text | binary")
      ->check(CLI::IsMember({"text", "binary"}));

  // ---- spectral ----
  auto* spectral = app.add_subcommand("spectral", "eigenvalue report for a graph file");
  std::string sp_in, sp_format = "text", sp_method = "exact";
  double sp_tol = 1e-6;
  int sp_max_iter = 0;
  spectral->add_option("--in", sp_in, "input graph")->required();
  spectral->add_option("--format", sp_format, "text | binary")
      ->check(CLI::IsMember({"text", "binary"}));
  spectral->add_option("--method", sp_method, "exact | power")
      ->check(CLI::IsMember({"exact", "power"}));
  spectral->add_option("--tol", sp_tol, "power iteration tolerance");
  spectral->add_option("--max-iter", sp_max_iter, "power iteration cap (0 = auto)");

  // ---- path ----
  auto* path = app.add_subcommand("path", "run a search algorithm on a graph file");
  std::string pa_in, pa_format = "text", pa_algo = "bibfs", pa_lambda = "auto";
  std::uint32_t pa_s = 0, pa_t = 0;
  bool pa_t_set = false;
  double pa_delta = 0.1;
  std::uint64_t pa_seed = 1;
  int pa_len = 10;
  path->add_option("--in", pa_in, "input graph")->required();
  path->add_option("--format", pa_format, "text | binary")
      ->check(CLI::IsMember({"text", "binary"}));
  path->add_option("--algo", pa_algo, "bibfs | walks | full | walk")
      ->check(CLI::IsMember({"bibfs", "walks", "full", "walk"}));
  path->add_option("--s", pa_s, "source node");
  auto* pa_t_opt = path->add_option("--t", pa_t, "target node (default n-1)");
  path->add_option("--lambda", pa_lambda, "lambda for walks: auto or a number");
  path->add_option("--delta", pa_delta, "failure budget for walks");
  path->add_option("--len", pa_len, "walk length for --algo walk");
  path->add_option("--seed", pa_seed, "random seed");

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "closed-form expander bounds");
  std::uint32_t bo_n = 1024;
  int bo_d = 3, bo_k = 10;
  double bo_lambda = 2.0, bo_delta = 0.5;
  std::uint64_t bo_w = 0;
  bounds->add_option("--n", bo_n, "node count")->required();
  bounds->add_option("--d", bo_d, "degree")->required();
  bounds->add_option("--lambda", bo_lambda, "second eigenvalue bound")->required();
  bounds->add_option("--k", bo_k, "radius / walk length");
  bounds->add_option("--delta", bo_delta, "fraction for radius_for_fraction");
  bounds->add_option("--w", bo_w, "subset size for the confined-walk bound (default n/2)");

  // ---- game ----
  auto* game = app.add_subcommand("game", "trace-based incidence query game");
  std::string ga_model = "er", ga_strategy = "bibfs";
  std::uint32_t ga_n = 1024;
  int ga_d = 3, ga_trials = 100;
  double ga_p = 0.01;
  std::uint64_t ga_budget = 32, ga_seed = 1;
  bool ga_classify = false;
  game->add_option("--model", ga_model, "er | regular | matching")
      ->check(CLI::IsMember({"er", "regular", "matching"}));
  game->add_option("--n", ga_n, "nodes (groups for matching)");
  game->add_option("--d", ga_d, "degree / group size");
  game->add_option("--p", ga_p, "er edge probability");
  game->add_option("--budget", ga_budget, "query budget");
  game->add_option("--strategy", ga_strategy, "bibfs | random | greedy | guess");
  game->add_option("--trials", ga_trials, "number of games");
  game->add_option("--seed", ga_seed, "random seed");
  game->add_flag("--classify", ga_classify, "include per-step trace classification of game 0");

  // ---- exp ----
  auto* exp = app.add_subcommand("exp", "batch experiments with CSV output");
  std::string ex_experiment, ex_config, ex_out, ex_plot;
  std::vector<std::string> ex_sets;
  exp->add_option("--experiment", ex_experiment, "bibfs_scaling | walks_success | lower_bound");
  exp->add_option("--config", ex_config, "key = value config file");
  exp->add_option("--set", ex_sets, "override key=value (repeatable, wins over file)");
  exp->add_option("--out", ex_out, "CSV output path");
  exp->add_option("--plot", ex_plot, "also write a plot script here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  pa_t_set = pa_t_opt->count() > 0;

  if (gen->parsed()) {
    json j;
    if (gen_model == "matching") {
      xp::MatchingGraph mg = xp::gen_matching_model(gen_n, gen_d, gen_seed);
      if (gen_contract) {
        auto g = xp::contract_to_simple(mg);
        if (!g) {
          std::cerr << "contraction is not simple for this seed\n";
          return 1;
        }
        save_graph(*g, gen_out, gen_format);
        j["n"] = g->num_nodes();
        j["m"] = g->num_edges();
        j["d"] = gen_d;
        j["contracted"] = true;
      } else {
        // the raw matching is itself a 1-regular graph on n*d half-nodes
        std::vector<xp::Edge> edges;
        for (std::uint32_t x = 0; x < mg.num_half_nodes(); ++x)
          if (x < mg.partner[x]) edges.push_back({x, mg.partner[x]});
        xp::Graph g = xp::Graph::from_edges(mg.num_half_nodes(), edges, 1);
        save_graph(g, gen_out, gen_format);
        j["n"] = g.num_nodes();
        j["m"] = g.num_edges();
        j["groups"] = mg.n;
        j["group_size"] = mg.d;
      }
    } else {
      xp::Graph g;
      if (gen_model == "regular") {
        xp::RegularAlgo algo = xp::RegularAlgo::kAuto;
        if (gen_algo == "reject") algo = xp::RegularAlgo::kReject;
        if (gen_algo == "pairing") algo = xp::RegularAlgo::kPairing;
        g = xp::gen_random_regular(gen_n, gen_d, gen_seed, algo);
      } else if (gen_model == "er") {
        g = xp::gen_erdos_renyi(gen_n, gen_p, gen_seed);
      } else {
        g = xp::gen_margulis_expander(gen_m);
      }
      save_graph(g, gen_out, gen_format);
      j["n"] = g.num_nodes();
      j["m"] = g.num_edges();
      if (g.regular_degree()) j["d"] = *g.regular_degree();
    }
    j["model"] = gen_model;
    j["seed"] = gen_seed;
    j["out"] = gen_out;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (spectral->parsed()) {
    xp::Graph g = load_graph(sp_in, sp_format);
    xp::SpectralReport rep;
    if (sp_method == "exact") {
      rep = xp::lambda_exact(g);
    } else {
      try {
        rep = xp::lambda_power(g, sp_tol, sp_max_iter);
      } catch (const xp::convergence_error& e) {
        json j = spectral_json(e.best);
        j["converged"] = false;
        std::cout << j.dump(2) << "\n";
        return 1;
      }
    }
    json j = spectral_json(rep);
    j["n"] = g.num_nodes();
    j["m"] = g.num_edges();
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (path->parsed()) {
    xp::Graph g = load_graph(pa_in, pa_format);
    if (g.num_nodes() < 2) throw xp::parameter_error("graph too small");
    xp::NodeId t = pa_t_set ? pa_t : g.num_nodes() - 1;
    json j;
    if (pa_algo == "full") {
      xp::QueryOracle oracle(g);
      auto dist = xp::full_bfs(oracle, pa_s);
      std::uint64_t reachable = 0;
      for (auto dv : dist)
        if (dv != xp::kUnreachable) ++reachable;
      j["s"] = pa_s;
      j["reachable"] = reachable;
      j["query_count"] = oracle.total_queries();
      j["dist_t"] = dist[t] == xp::kUnreachable ? json(nullptr) : json(dist[t]);
    } else if (pa_algo == "walk") {
      xp::QueryOracle oracle(g);
      auto walk = xp::random_walk(oracle, pa_s, pa_len, pa_seed);
      j["walk"] = walk;
      j["query_count"] = oracle.total_queries();
    } else if (pa_algo == "bibfs") {
      xp::QueryOracle oracle(g);
      j = path_json(xp::bidirectional_bfs(oracle, pa_s, t));
    } else {
      double lambda = resolve_lambda(g, pa_lambda);
      j = path_json(xp::bfs_plus_walks(g, pa_s, t, lambda, pa_delta, pa_seed));
      j["lambda"] = lambda;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (bounds->parsed()) {
    xp::ExpanderParams ep(bo_n, bo_d, bo_lambda);
    std::uint64_t w = bo_w == 0 ? bo_n / 2 : bo_w;
    json j;
    j["n"] = bo_n;
    j["d"] = bo_d;
    j["lambda"] = bo_lambda;
    j["k"] = bo_k;
    j["far_node_bound"] = xp::far_node_bound(ep, bo_k);
    j["radius_for_fraction"] = xp::radius_for_fraction(ep, bo_delta);
    j["diameter_bound"] = xp::diameter_bound(ep);
    j["mixing_deviation_bound"] = xp::mixing_deviation_bound(ep, bo_k);
    j["confined_walk_bound"] = {{"w", w}, {"value", xp::confined_walk_bound(ep, w, bo_k)},
                                {"log_value", xp::log_confined_walk_bound(ep, w, bo_k)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (game->parsed()) {
    json j;
    if (ga_model == "matching") {
      std::uint64_t valid = 0, queries = 0;
      for (int trial = 0; trial < ga_trials; ++trial) {
        auto mg = xp::gen_matching_model(ga_n, ga_d, xp::derive_seed(ga_seed, trial));
        xp::GreedyGroupBfsStrategy strat(ga_n, ga_d, 0, ga_n - 1);
        auto res = xp::run_meta_game(strat, mg, ga_budget);
        if (res.valid) ++valid;
        queries += res.queries_used;
      }
      j["model"] = "matching";
      j["valid_rate"] = static_cast<double>(valid) / ga_trials;
      j["mean_queries"] = static_cast<double>(queries) / ga_trials;
    } else {
      xp::GraphModel model = [&](std::uint64_t seed) {
        return ga_model == "er" ? xp::gen_erdos_renyi(ga_n, ga_p, seed)
                                : xp::gen_random_regular(ga_n, ga_d, seed);
      };
      xp::StrategyFactory factory = [&](const xp::Graph& g, std::uint64_t seed) {
        return xp::make_node_strategy(ga_strategy, g.num_nodes(), 0, g.num_nodes() - 1, seed);
      };
      auto points = xp::success_vs_budget(model, factory, {ga_budget}, ga_trials, ga_seed);
      j["model"] = ga_model;
      j["strategy"] = ga_strategy;
      j["budget"] = points[0].budget;
      j["success_rate"] = points[0].success_rate;
      j["connected_rate"] = points[0].connected_rate;
      j["mean_edges"] = points[0].mean_edges;
      if (ga_classify) {
        xp::Graph g = model(xp::derive_seed(ga_seed, 0, 0));
        auto strat = factory(g, xp::derive_seed(ga_seed, 1, 0));
        auto res = xp::run_traced(*strat, g, ga_budget);
        std::optional<double> p;
        if (ga_model == "er") p = ga_p;
        json steps = json::array();
        for (const auto& tc : xp::classify_trace(res.trace, g.num_nodes(), 0, g.num_nodes() - 1, p)) {
          steps.push_back({{"k", tc.k},
                           {"connected", tc.connected},
                           {"useless", tc.useless},
                           {"edges", tc.edges_discovered}});
        }
        j["classification"] = steps;
      }
    }
    j["trials"] = ga_trials;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  // exp
  xp::ExperimentConfig cfg;
  if (!ex_config.empty()) cfg = xp::ExperimentConfig::from_file(ex_config);
  for (const std::string& kv : ex_sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw xp::parameter_error("--set expects key=value, got " + kv);
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!ex_experiment.empty()) cfg.set("experiment", ex_experiment);
  if (!ex_out.empty()) cfg.set("out", ex_out);
  std::string experiment = cfg.get_str("experiment", "");
  std::string out = cfg.get_str("out", "");
  if (experiment.empty()) throw xp::parameter_error("exp: no experiment selected");
  if (out.empty()) throw xp::parameter_error("exp: no --out path");

  json j;
  j["experiment"] = experiment;
  j["out"] = out;
  if (experiment == "bibfs_scaling") {
    auto res = xp::exp_bibfs_scaling(cfg);
    xp::write_csv(out, cfg, res.columns, res.rows,
                  {"fit_slope = " + xp::detail::fmt(res.slope)});
    j["rows"] = res.rows.size();
    j["fit_slope"] = res.slope;
  } else if (experiment == "walks_success") {
    auto res = xp::exp_walks_success(cfg);
    xp::write_csv(out, cfg, res.columns, res.rows);
    j["rows"] = res.rows.size();
  } else if (experiment == "lower_bound") {
    auto res = xp::exp_lower_bound(cfg);
    xp::write_csv(out, cfg, res.columns, res.rows);
    j["rows"] = res.rows.size();
  } else {
    throw xp::parameter_error("unknown experiment: " + experiment);
  }
  if (!ex_plot.empty()) {
    xp::emit_plots(out, ex_plot);
    j["plot"] = ex_plot;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const xp::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xp::schema_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
