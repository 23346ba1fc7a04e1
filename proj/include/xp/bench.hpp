#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "xp/bounds.hpp"
#include "xp/generators.hpp"
#include "xp/pathfind.hpp"
#include "xp/querygame.hpp"
#include "xp/spectral.hpp"

#ifndef XP_VERSION_STRING
#define XP_VERSION_STRING "dev"
#endif

namespace xp {

inline const char* version_string() { return XP_VERSION_STRING; }

// Flat key=value configuration. Files hold one pair per line ('#' comments);
// command-line overrides are applied on top and win.
class ExperimentConfig {
 public:
  static const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "experiment", "model",  "n_grid", "m_grid",        "d",     "p",
        "delta",      "deltas", "pairs",  "trials",        "seed",  "out",
        "budget_coeffs",        "strategy", "lambda",      "tol",   "workers",
    };
    return keys;
  }

  static ExperimentConfig from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parameter_error("config: cannot open " + path);
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      std::string stripped = line.substr(0, line.find('#'));
      auto first = stripped.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      auto eq = stripped.find('=');
      if (eq == std::string::npos)
        throw parameter_error("config: line " + std::to_string(lineno) + " is not key = value");
      cfg.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
  }

  void set(const std::string& key, const std::string& value) {
    if (!known_keys().count(key)) throw parameter_error("config: unknown key '" + key + "'");
    values_[key] = value;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_str(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse_double(key, it->second);
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      return std::stoull(it->second);
    } catch (const std::exception&) {
      throw parameter_error("config: key '" + key + "' is not an integer: " + it->second);
    }
  }

  int get_int(const std::string& key, int fallback) const {
    return static_cast<int>(get_u64(key, static_cast<std::uint64_t>(fallback)));
  }

  std::vector<std::uint64_t> get_u64_list(const std::string& key,
                                          std::vector<std::uint64_t> fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<std::uint64_t> out;
    for (const std::string& tok : split(it->second)) {
      try {
        out.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw parameter_error("config: key '" + key + "' has a non-integer entry: " + tok);
      }
    }
    if (out.empty()) throw parameter_error("config: key '" + key + "' is empty");
    return out;
  }

  std::vector<double> get_double_list(const std::string& key,
                                      std::vector<double> fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    for (const std::string& tok : split(it->second)) out.push_back(parse_double(key, tok));
    if (out.empty()) throw parameter_error("config: key '" + key + "' is empty");
    return out;
  }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  static std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  }

  static std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        if (!trim(cur).empty()) out.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
  }

  static double parse_double(const std::string& key, const std::string& value) {
    try {
      std::size_t used = 0;
      double x = std::stod(value, &used);
      if (used != value.size()) throw parameter_error("");
      return x;
    } catch (const std::exception&) {
      throw parameter_error("config: key '" + key + "' is not a number: " + value);
    }
  }

  std::map<std::string, std::string> values_;
};

namespace detail {

template <class F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int nth = std::min<int>(workers, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(nth));
  for (int i = 0; i < nth; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  double idx = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = idx - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return quantile_sorted(xs, 0.5);
}

inline double p90(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return quantile_sorted(xs, 0.9);
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Least-squares slope of ln(y) against ln(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) continue;
    double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double denom = static_cast<double>(n) * sxx - sx * sx;
  if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace detail

// CSV with provenance: '#' comment block carrying the tool version and the
// full configuration, then a header row, then data rows.
inline void write_csv(const std::string& path, const ExperimentConfig& cfg,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::string>>& rows,
                      const std::vector<std::string>& extra_comments = {}) {
  std::ofstream os(path);
  if (!os) throw io_error("cannot open " + path + " for writing");
  os << "# xp " << version_string() << "\n";
  for (const auto& [k, v] : cfg.values()) os << "# " << k << " = " << v << "\n";
  for (const auto& c : extra_comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw schema_error("write_csv: row width mismatch");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  if (!os) throw io_error("write failed: " + path);
}

struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    return -1;
  }
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot open " + path);
  CsvTable table;
  std::string line;
  bool have_header = false;
  auto split_row = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.comments.push_back(line);
      continue;
    }
    if (!have_header) {
      table.columns = split_row(line);
      have_header = true;
      continue;
    }
    auto row = split_row(line);
    if (row.size() != table.columns.size())
      throw schema_error("csv: row width " + std::to_string(row.size()) + " != header width " +
                         std::to_string(table.columns.size()));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw schema_error("csv: missing header row");
  return table;
}

// ---- experiment drivers -----------------------------------------------------

namespace detail {

struct ModelSpec {
  std::string name;   // regular | er | margulis
  int d = 3;
  double p = 0.01;

  Graph make(std::uint64_t n_or_m, std::uint64_t seed) const {
    if (name == "regular")
      return gen_random_regular(static_cast<std::uint32_t>(n_or_m), d, seed);
    if (name == "er") return gen_erdos_renyi(static_cast<std::uint32_t>(n_or_m), p, seed);
    if (name == "margulis") return gen_margulis_expander(static_cast<std::uint32_t>(n_or_m));
    throw parameter_error("unknown model: " + name);
  }
};

inline ModelSpec model_from_config(const ExperimentConfig& cfg) {
  ModelSpec spec;
  spec.name = cfg.get_str("model", "regular");
  spec.d = cfg.get_int("d", 3);
  spec.p = cfg.get_double("p", 0.01);
  if (spec.name != "regular" && spec.name != "er" && spec.name != "margulis")
    throw parameter_error("unknown model: " + spec.name);
  return spec;
}

// The grid the model is swept over: node counts for regular/er, torus sides
// for margulis (the CSV reports n = m*m there).
inline std::vector<std::uint64_t> grid_from_config(const ExperimentConfig& cfg,
                                                   const ModelSpec& spec) {
  if (spec.name == "margulis") return cfg.get_u64_list("m_grid", {16, 24, 32});
  return cfg.get_u64_list("n_grid", {1u << 12, 1u << 13, 1u << 14});
}

inline double lambda_for(const Graph& g, double tol) {
  if (g.regular_degree()) {
    try {
      return lambda_power(g, tol).lambda_est;
    } catch (const convergence_error& e) {
      return e.best.lambda_est;
    }
  }
  if (g.num_nodes() <= kExactEigensolveMaxNodes) return lambda_exact(g).lambda_est;
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

struct BibfsScalingResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  double slope = std::numeric_limits<double>::quiet_NaN();
};

// Sweeps bidirectional_bfs over the model grid, sampling random s-t pairs,
// and fits the log-log growth of the median visited count against n.
inline BibfsScalingResult exp_bibfs_scaling(const ExperimentConfig& cfg) {
  detail::ModelSpec model = detail::model_from_config(cfg);
  auto grid = detail::grid_from_config(cfg, model);
  int pairs = cfg.get_int("pairs", 100);
  int workers = cfg.get_int("workers", 1);
  std::uint64_t seed = cfg.get_u64("seed", 1);
  double tol = cfg.get_double("tol", 1e-4);
  if (pairs < 1) throw parameter_error("exp_bibfs_scaling: pairs must be >= 1");

  BibfsScalingResult out;
  out.columns = {"n",        "d",       "model",          "lambda_est",    "pairs",
                 "success_rate", "median_visited", "p90_visited", "median_queries",
                 "median_dist",  "wall_ms"};
  std::vector<double> fit_n, fit_visited;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    auto start = std::chrono::steady_clock::now();
    Graph g = model.make(grid[gi], derive_seed(seed, gi));
    const std::uint32_t n = g.num_nodes();
    double lambda = cfg.has("lambda") ? cfg.get_double("lambda", 0) : detail::lambda_for(g, tol);
    std::vector<double> visited(static_cast<std::size_t>(pairs)),
        queries(static_cast<std::size_t>(pairs)), dist(static_cast<std::size_t>(pairs));
    std::vector<char> found(static_cast<std::size_t>(pairs), 0);
    detail::parallel_for(static_cast<std::size_t>(pairs), workers, [&](std::size_t pi) {
      SplitMix64 rng(derive_seed(seed, gi, pi + 1));
      NodeId s = static_cast<NodeId>(uniform_below(rng, n));
      NodeId t = s;
      while (t == s) t = static_cast<NodeId>(uniform_below(rng, n));
      QueryOracle oracle(g);
      PathResult res = bidirectional_bfs(oracle, s, t);
      visited[pi] = static_cast<double>(res.visited_count);
      queries[pi] = static_cast<double>(res.query_count);
      found[pi] = res.found() ? 1 : 0;
      dist[pi] = res.found() ? static_cast<double>(*res.distance)
                             : std::numeric_limits<double>::quiet_NaN();
    });
    double succ = 0;
    for (char f : found) succ += f;
    succ /= pairs;
    std::vector<double> found_dists;
    for (double x : dist)
      if (!std::isnan(x)) found_dists.push_back(x);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    double med_visited = detail::median(visited);
    fit_n.push_back(n);
    fit_visited.push_back(med_visited);
    int d_col = g.regular_degree() ? *g.regular_degree() : -1;
    out.rows.push_back({std::to_string(n), std::to_string(d_col), model.name,
                        detail::fmt(lambda), std::to_string(pairs), detail::fmt(succ),
                        detail::fmt(med_visited), detail::fmt(detail::p90(visited)),
                        detail::fmt(detail::median(queries)),
                        detail::fmt(found_dists.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                        : detail::median(found_dists)),
                        detail::fmt(ms)});
  }
  out.slope = detail::loglog_slope(fit_n, fit_visited);
  return out;
}

struct WalksSuccessResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Runs bfs_plus_walks over the grid for each failure budget delta, recording
// success rates, visited counts and path lengths.
inline WalksSuccessResult exp_walks_success(const ExperimentConfig& cfg) {
  detail::ModelSpec model = detail::model_from_config(cfg);
  if (model.name != "regular")
    throw parameter_error("exp_walks_success: only the regular model is supported");
  auto grid = detail::grid_from_config(cfg, model);
  auto deltas = cfg.get_double_list("deltas", {cfg.get_double("delta", 0.1)});
  int trials = cfg.get_int("trials", 100);
  int workers = cfg.get_int("workers", 1);
  std::uint64_t seed = cfg.get_u64("seed", 1);
  double tol = cfg.get_double("tol", 1e-4);
  if (trials < 1) throw parameter_error("exp_walks_success: trials must be >= 1");

  WalksSuccessResult out;
  out.columns = {"n",          "d",        "delta",           "lambda_est",     "trials",
                 "success_rate", "median_visited", "p90_visited",   "median_queries",
                 "median_path_len", "p90_path_len", "max_path_len", "walk_len",
                 "num_walks",  "bfs_target", "wall_ms"};
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    Graph g = model.make(grid[gi], derive_seed(seed, gi));
    const std::uint32_t n = g.num_nodes();
    double lambda = cfg.has("lambda") ? cfg.get_double("lambda", 0) : detail::lambda_for(g, tol);
    for (std::size_t di = 0; di < deltas.size(); ++di) {
      auto start = std::chrono::steady_clock::now();
      WalkParams params = WalkParams::from_graph(n, model.d, lambda, deltas[di]);
      std::vector<double> visited(static_cast<std::size_t>(trials)),
          queries(static_cast<std::size_t>(trials)), plen(static_cast<std::size_t>(trials));
      std::vector<char> found(static_cast<std::size_t>(trials), 0);
      detail::parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t ti) {
        SplitMix64 rng(derive_seed(seed, gi * 1000 + di, ti + 1));
        NodeId s = static_cast<NodeId>(uniform_below(rng, n));
        NodeId t = s;
        while (t == s) t = static_cast<NodeId>(uniform_below(rng, n));
        QueryOracle oracle(g);
        PathResult res = bfs_plus_walks(oracle, s, t, params, rng());
        visited[ti] = static_cast<double>(res.visited_count);
        queries[ti] = static_cast<double>(res.query_count);
        found[ti] = res.found() ? 1 : 0;
        plen[ti] = res.found() ? static_cast<double>(*res.distance)
                               : std::numeric_limits<double>::quiet_NaN();
      });
      double succ = 0;
      for (char f : found) succ += f;
      succ /= trials;
      std::vector<double> lens;
      for (double x : plen)
        if (!std::isnan(x)) lens.push_back(x);
      double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      auto len_q = [&](double q) {
        if (lens.empty()) return std::numeric_limits<double>::quiet_NaN();
        std::vector<double> c = lens;
        std::sort(c.begin(), c.end());
        return detail::quantile_sorted(c, q);
      };
      double max_len = std::numeric_limits<double>::quiet_NaN();
      if (!lens.empty()) max_len = *std::max_element(lens.begin(), lens.end());
      out.rows.push_back({std::to_string(n), std::to_string(model.d), detail::fmt(deltas[di]),
                          detail::fmt(lambda), std::to_string(trials), detail::fmt(succ),
                          detail::fmt(detail::median(visited)), detail::fmt(detail::p90(visited)),
                          detail::fmt(detail::median(queries)), detail::fmt(len_q(0.5)),
                          detail::fmt(len_q(0.9)), detail::fmt(max_len),
                          std::to_string(params.walk_len), std::to_string(params.num_walks),
                          std::to_string(params.bfs_target), detail::fmt(ms)});
    }
  }
  return out;
}

struct LowerBoundResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Plays an incidence-query strategy against fresh random graphs under budgets
// c * sqrt(n) and records how often a valid path is produced.
inline LowerBoundResult exp_lower_bound(const ExperimentConfig& cfg) {
  detail::ModelSpec model = detail::model_from_config(cfg);
  if (model.name == "margulis")
    throw parameter_error("exp_lower_bound: needs a randomized model (regular or er)");
  auto grid = detail::grid_from_config(cfg, model);
  auto coeffs = cfg.get_double_list("budget_coeffs", {0.25, 0.5, 1.0, 2.0, 4.0});
  std::string strategy = cfg.get_str("strategy", "bibfs");
  int trials = cfg.get_int("trials", 100);
  std::uint64_t seed = cfg.get_u64("seed", 1);
  if (trials < 1) throw parameter_error("exp_lower_bound: trials must be >= 1");

  LowerBoundResult out;
  out.columns = {"n",          "model",        "strategy",   "budget", "budget_coeff",
                 "trials",     "success_rate", "connected_rate", "mean_edges", "wall_ms"};
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::uint64_t n = grid[gi];
    std::vector<std::uint64_t> budgets;
    for (double c : coeffs)
      budgets.push_back(static_cast<std::uint64_t>(c * std::sqrt(static_cast<double>(n))));
    GraphModel graph_model = [&](std::uint64_t gseed) { return model.make(n, gseed); };
    StrategyFactory factory = [&](const Graph& g, std::uint64_t sseed) {
      return make_node_strategy(strategy, g.num_nodes(), 0, g.num_nodes() - 1, sseed);
    };
    for (std::size_t ci = 0; ci < coeffs.size(); ++ci) {
      auto start = std::chrono::steady_clock::now();
      auto points = success_vs_budget(graph_model, factory, {budgets[ci]}, trials,
                                      derive_seed(seed, gi, ci));
      double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      const BudgetPoint& pt = points.front();
      out.rows.push_back({std::to_string(n), model.name, strategy, std::to_string(pt.budget),
                          detail::fmt(coeffs[ci]), std::to_string(trials),
                          detail::fmt(pt.success_rate), detail::fmt(pt.connected_rate),
                          detail::fmt(pt.mean_edges), detail::fmt(ms)});
    }
  }
  return out;
}

// ---- plot script generation -------------------------------------------------

// Writes a self-contained matplotlib script for the given CSV. The CSV kind
// is detected from its header columns; an unrecognized or malformed header is
// a schema error.
inline void emit_plots(const std::string& csv_path, const std::string& script_path) {
  CsvTable table = read_csv(csv_path);
  auto need = [&](const char* col) { return table.column(col) >= 0; };
  std::string kind;
  if (need("median_visited") && need("delta"))
    kind = "walks";
  else if (need("median_visited") && need("n"))
    kind = "scaling";
  else if (need("budget") && need("success_rate"))
    kind = "game";
  else
    throw schema_error("emit_plots: unrecognized CSV schema in " + csv_path);

  std::ofstream os(script_path);
  if (!os) throw io_error("cannot open " + script_path + " for writing");
  os << "#!/usr/bin/env python3\n"
     << "import csv, math, sys\n"
     << "import matplotlib\n"
     << "matplotlib.use('Agg')\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "path = sys.argv[1] if len(sys.argv) > 1 else " << std::quoted(csv_path) << "\n"
     << "rows = []\n"
     << "with open(path) as fh:\n"
     << "    reader = csv.reader(r for r in fh if not r.startswith('#'))\n"
     << "    header = next(reader)\n"
     << "    for row in reader:\n"
     << "        rows.append(dict(zip(header, row)))\n"
     << "if not rows:\n"
     << "    raise SystemExit('no data rows in ' + path)\n\n";
  if (kind == "scaling") {
    os << "ns = [float(r['n']) for r in rows]\n"
       << "ys = [float(r['median_visited']) for r in rows]\n"
       << "fig, ax = plt.subplots(figsize=(6, 4.5))\n"
       << "ax.loglog(ns, ys, 'o-', label='median visited')\n"
       << "ref = [ys[0] * math.sqrt(n / ns[0]) * (math.log(n) / math.log(ns[0])) ** 1.5"
          " for n in ns]\n"
       << "ax.loglog(ns, ref, '--', label='sqrt(n) ln^1.5 n (scaled)')\n"
       << "ax.set_xlabel('n')\n"
       << "ax.set_ylabel('visited nodes')\n"
       << "ax.legend()\n";
  } else if (kind == "walks") {
    os << "deltas = sorted({r['delta'] for r in rows})\n"
       << "fig, ax = plt.subplots(figsize=(6, 4.5))\n"
       << "for dv in deltas:\n"
       << "    pts = [r for r in rows if r['delta'] == dv]\n"
       << "    ax.plot([float(r['n']) for r in pts], [float(r['success_rate']) for r in pts],\n"
       << "            'o-', label='delta=' + dv)\n"
       << "ax.set_xscale('log')\n"
       << "ax.set_xlabel('n')\n"
       << "ax.set_ylabel('success rate')\n"
       << "ax.set_ylim(0, 1.05)\n"
       << "ax.legend()\n";
  } else {
    os << "ns = sorted({r['n'] for r in rows}, key=float)\n"
       << "fig, ax = plt.subplots(figsize=(6, 4.5))\n"
       << "for nv in ns:\n"
       << "    pts = [r for r in rows if r['n'] == nv]\n"
       << "    xs = [float(r['budget_coeff']) for r in pts]\n"
       << "    ys = [float(r['success_rate']) for r in pts]\n"
       << "    ax.plot(xs, ys, 'o-', label='n=' + nv)\n"
       << "ax.set_xlabel('budget / sqrt(n)')\n"
       << "ax.set_ylabel('success rate')\n"
       << "ax.set_ylim(0, 1.05)\n"
       << "ax.legend()\n";
  }
  os << "out = path.rsplit('.', 1)[0] + '.png'\n"
     << "fig.tight_layout()\n"
     << "fig.savefig(out, dpi=150)\n"
     << "print('wrote ' + out)\n";
  if (!os) throw io_error("write failed: " + script_path);
}

}  // namespace xp
