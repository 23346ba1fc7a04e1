#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "xp/pathfind.hpp"

namespace xp {

// Closed-form expander estimates, each paired with an exact brute-force
// counterpart so the inequalities can be checked on real graphs rather than
// trusted.
struct ExpanderParams {
  std::uint32_t n = 0;
  int d = 0;
  double lambda = 0.0;

  ExpanderParams(std::uint32_t n_, int d_, double lambda_) : n(n_), d(d_), lambda(lambda_) {
    if (n < 2) throw parameter_error("ExpanderParams: need n >= 2");
    if (d < 1 || static_cast<std::uint32_t>(d) >= n)
      throw parameter_error("ExpanderParams: need 1 <= d <= n-1");
    if (!(lambda > 0.0 && lambda < static_cast<double>(d)))
      throw parameter_error("ExpanderParams: need 0 < lambda < d");
  }

  double ratio() const { return lambda / static_cast<double>(d); }
};

// Upper bound on the number of ordered pairs (equivalently, on |Z| where Z is
// the set of nodes farther than k from a fixed source): (lambda/d)^{2k} n^2.
inline double far_node_bound(const ExpanderParams& ep, int k) {
  if (k < 0) throw parameter_error("far_node_bound: k must be >= 0");
  double n = static_cast<double>(ep.n);
  return std::pow(ep.ratio(), 2.0 * k) * n * n;
}

// Smallest real radius k with (lambda/d)^{2k} n^2 <= delta * n, i.e. at most
// a delta fraction of nodes lies outside the radius-k ball:
// k = ln(n/delta) / (2 ln(d/lambda)).
inline double radius_for_fraction(const ExpanderParams& ep, double delta) {
  if (!(delta > 0.0)) throw parameter_error("radius_for_fraction: delta must be positive");
  return std::log(static_cast<double>(ep.n) / delta) / (2.0 * std::log(1.0 / ep.ratio()));
}

// Diameter upper bound ceil(log_{d/lambda} n). The epsilon absorbs float fuzz
// when the quotient is an exact integer.
inline int diameter_bound(const ExpanderParams& ep) {
  double x = std::log(static_cast<double>(ep.n)) / std::log(1.0 / ep.ratio());
  return static_cast<int>(std::ceil(x - 1e-9));
}

// Exact count of nodes at distance > k from s (unreachable nodes included).
inline std::uint64_t count_far_nodes(const Graph& g, NodeId s, std::uint32_t k) {
  QueryOracle oracle(g);
  auto dist = full_bfs(oracle, s);
  std::uint64_t far = 0;
  for (std::uint32_t dv : dist)
    if (dv > k) ++far;
  return far;
}

// Natural log of the confined-walk bound below; use this form for
// comparisons once d^k leaves double range.
inline double log_confined_walk_bound(const ExpanderParams& ep, std::uint64_t w, int k) {
  if (k < 0) throw parameter_error("log_confined_walk_bound: k must be >= 0");
  if (w > ep.n) throw parameter_error("log_confined_walk_bound: need w <= n");
  if (w == 0) return -std::numeric_limits<double>::infinity();  // empty W admits no walks
  double mu = static_cast<double>(w) / static_cast<double>(ep.n);
  double base = mu + ep.ratio() * (1.0 - mu);
  return std::log(static_cast<double>(w)) + k * std::log(static_cast<double>(ep.d)) +
         k * std::log(base);
}

// Upper bound on walks of length k that stay inside a subset W with |W| = w:
// w d^k (mu + (lambda/d)(1 - mu))^k where mu = w/n.
inline double confined_walk_bound(const ExpanderParams& ep, std::uint64_t w, int k) {
  double lg = log_confined_walk_bound(ep, w, k);
  if (lg > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(lg);
}

inline constexpr std::uint32_t kExactWalkCountMaxNodes = 4096;
inline constexpr int kExactWalkCountMaxLen = 64;

// Exact number of length-k walks confined to W, as a big integer (the count
// grows like d^k). Dynamic program on the W-induced subgraph.
inline mpz_class count_confined_walks(const Graph& g, const std::vector<NodeId>& w_nodes, int k) {
  if (k < 0) throw parameter_error("count_confined_walks: k must be >= 0");
  if (g.num_nodes() > kExactWalkCountMaxNodes)
    throw budget_error("count_confined_walks: n exceeds cap");
  if (k > kExactWalkCountMaxLen) throw budget_error("count_confined_walks: k exceeds cap");
  std::vector<NodeId> w = w_nodes;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (NodeId v : w)
    if (v >= g.num_nodes()) throw std::out_of_range("count_confined_walks: node out of range");
  std::vector<std::uint32_t> index(g.num_nodes(), kUnreachable);
  for (std::size_t i = 0; i < w.size(); ++i) index[w[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> adj(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (NodeId u : g.neighbors(w[i]))
      if (index[u] != kUnreachable) adj[i].push_back(index[u]);
  std::vector<mpz_class> cur(w.size(), 1), nxt(w.size());
  for (int step = 0; step < k; ++step) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      nxt[i] = 0;
      for (std::uint32_t j : adj[i]) nxt[i] += cur[j];
    }
    cur.swap(nxt);
  }
  mpz_class total = 0;
  for (const mpz_class& c : cur) total += c;
  return total;
}

// Deviation of the k-step walk distribution from uniform: every entry of
// p_k - 1/n is bounded by (lambda/d)^k in absolute value.
inline double mixing_deviation_bound(const ExpanderParams& ep, int k) {
  if (k < 0) throw parameter_error("mixing_deviation_bound: k must be >= 0");
  return std::pow(ep.ratio(), k);
}

inline constexpr int kExactWalkDistMaxLen = 10000;

// Exact k-step distribution of the degree-normalized walk started at s. On a
// d-regular graph the transition is exactly A/d; on irregular graphs the
// deficit d_max - deg(v) is kept as a holding probability, which preserves
// the uniform stationary distribution. Renormalized each step so the output
// sums to 1 despite rounding.
inline std::vector<double> exact_walk_distribution(const Graph& g, NodeId s, int k) {
  if (s >= g.num_nodes()) throw std::out_of_range("exact_walk_distribution: s out of range");
  if (k < 0) throw parameter_error("exact_walk_distribution: k must be >= 0");
  if (g.num_nodes() > kExactWalkCountMaxNodes)
    throw budget_error("exact_walk_distribution: n exceeds cap");
  if (k > kExactWalkDistMaxLen) throw budget_error("exact_walk_distribution: k exceeds cap");
  const NodeId n = g.num_nodes();
  double dmax = 0.0;
  if (g.regular_degree()) {
    dmax = static_cast<double>(*g.regular_degree());
  } else {
    for (NodeId v = 0; v < n; ++v) dmax = std::max(dmax, static_cast<double>(g.degree(v)));
  }
  if (dmax == 0.0) throw parameter_error("exact_walk_distribution: graph has no edges");
  std::vector<double> cur(n, 0.0), nxt(n);
  cur[s] = 1.0;
  for (int step = 0; step < k; ++step) {
    for (NodeId v = 0; v < n; ++v) {
      double acc = (dmax - static_cast<double>(g.degree(v))) * cur[v];
      for (NodeId u : g.neighbors(v)) acc += cur[u];
      nxt[v] = acc / dmax;
    }
    double sum = 0.0;
    for (double x : nxt) sum += x;
    for (double& x : nxt) x /= sum;
    cur.swap(nxt);
  }
  return cur;
}

// Fraction of nodes whose distance from s falls outside the concentration
// window log_{d-1} n +- 3 log_{d-1} log2 n. Unreachable nodes count as
// outside. Distances concentrate for random regular graphs, so this fraction
// should vanish as n grows.
inline double ramanujan_concentration_check(const Graph& g, NodeId s) {
  if (!g.regular_degree() || *g.regular_degree() < 3)
    throw parameter_error("ramanujan_concentration_check: need declared degree >= 3");
  if (s >= g.num_nodes()) throw std::out_of_range("ramanujan_concentration_check: s out of range");
  const double n = static_cast<double>(g.num_nodes());
  const double d = static_cast<double>(*g.regular_degree());
  double center = std::log(n) / std::log(d - 1.0);
  double lg_n = std::log2(n);
  double slack = lg_n > 1.0 ? 3.0 * std::log(lg_n) / std::log(d - 1.0) : 0.0;
  QueryOracle oracle(g);
  auto dist = full_bfs(oracle, s);
  std::uint64_t outside = 0;
  for (std::uint32_t dv : dist) {
    if (dv == kUnreachable) {
      ++outside;
      continue;
    }
    double x = static_cast<double>(dv);
    if (x < center - slack || x > center + slack) ++outside;
  }
  return static_cast<double>(outside) / n;
}

}  // namespace xp
