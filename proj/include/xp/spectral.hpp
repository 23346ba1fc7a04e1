#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "xp/graph.hpp"
#include "xp/rng.hpp"

namespace xp {

// lambda = max_{i >= 2} |lambda_i| of the adjacency matrix, eigenvalues sorted
// descending. ratio = lambda / d is what the expander machinery consumes; a
// ratio of 1 (e.g. bipartite regular graphs, where lambda_n = -d) means no
// expansion despite connectivity.
struct SpectralReport {
  double lambda_est = 0.0;
  double lambda2 = std::numeric_limits<double>::quiet_NaN();      // second-largest eigenvalue
  double lambda_min = std::numeric_limits<double>::quiet_NaN();   // most negative eigenvalue
  double ratio = std::numeric_limits<double>::quiet_NaN();        // lambda / d for regular graphs
  bool is_ramanujan = false;                                      // lambda <= 2 sqrt(d-1) + tol
  int iterations = 0;
  double residual = 0.0;
  enum class Method { kExact, kPower } method = Method::kExact;
  std::vector<double> top_vector;  // power iteration only: unit iterate achieving lambda_est
};

inline constexpr std::uint32_t kExactEigensolveMaxNodes = 4096;
inline constexpr double kRamanujanTol = 1e-9;

struct convergence_error : std::runtime_error {
  SpectralReport best;
  convergence_error(const std::string& msg, SpectralReport r)
      : std::runtime_error(msg), best(std::move(r)) {}
};

namespace detail {

inline void finish_report(SpectralReport& rep, const Graph& g) {
  if (g.regular_degree()) {
    double d = static_cast<double>(*g.regular_degree());
    rep.ratio = rep.lambda_est / d;
    rep.is_ramanujan = rep.lambda_est <= 2.0 * std::sqrt(d - 1.0) + kRamanujanTol;
  }
}

}  // namespace detail

// Dense symmetric eigensolve; exact up to LAPACK-grade rounding. Guarded by a
// node cap because it is Theta(n^3) time and Theta(n^2) memory.
inline SpectralReport lambda_exact(const Graph& g) {
  if (g.num_nodes() < 2) throw parameter_error("lambda_exact: need n >= 2");
  if (g.num_nodes() > kExactEigensolveMaxNodes)
    throw budget_error("lambda_exact: n exceeds cap " + std::to_string(kExactEigensolveMaxNodes));
  const auto n = g.num_nodes();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : g.neighbors(v)) a(v, u) += 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  SpectralReport rep;
  rep.method = SpectralReport::Method::kExact;
  rep.lambda2 = ev(n - 2);
  rep.lambda_min = ev(0);
  rep.lambda_est = std::max(std::abs(rep.lambda2), std::abs(rep.lambda_min));
  detail::finish_report(rep, g);
  return rep;
}

namespace detail {

// Power iteration on a shifted adjacency operator restricted to the
// complement of the all-ones vector. shift_plus: B = A + dI (dominant
// eigenpair on 1-perp gives lambda_2); otherwise B = dI - A (gives -lambda_n).
inline double power_run(const Graph& g, double d, bool shift_plus, double tol, int max_iter,
                        int& iterations, double& residual, SplitMix64& rng,
                        std::vector<double>& out_vec) {
  const auto n = g.num_nodes();
  std::vector<double> v(n), w(n);
  auto deflate_normalize = [&](std::vector<double>& x) {
    double mean = 0.0;
    for (double xi : x) mean += xi;
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& xi : x) {
      xi -= mean;
      norm += xi * xi;
    }
    norm = std::sqrt(norm);
    if (norm > 0) for (double& xi : x) xi /= norm;
    return norm;
  };
  do {
    for (double& xi : v) xi = uniform_real01(rng) - 0.5;
  } while (deflate_normalize(v) < 1e-12);

  double rayleigh = 0.0;
  residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    ++iterations;
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (NodeId nb : g.neighbors(u)) acc += v[nb];
      w[u] = shift_plus ? acc + d * v[u] : d * v[u] - acc;
    }
    rayleigh = 0.0;
    for (NodeId u = 0; u < n; ++u) rayleigh += v[u] * w[u];
    double res = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      double r = w[u] - rayleigh * v[u];
      res += r * r;
    }
    residual = std::sqrt(res);
    if (residual <= tol * d) {
      out_vec = v;
      return shift_plus ? rayleigh - d : d - rayleigh;
    }
    v.swap(w);
    deflate_normalize(v);
  }
  out_vec = v;
  return shift_plus ? rayleigh - d : d - rayleigh;
}

}  // namespace detail

// Sparse-friendly estimate of lambda for connected regular graphs: one run on
// A + dI for lambda_2 and one on dI - A for lambda_n, both deflated against
// the all-ones eigenvector. Deterministic (fixed internal stream).
inline SpectralReport lambda_power(const Graph& g, double tol = 1e-6, int max_iter = 0) {
  if (!g.regular_degree()) throw parameter_error("lambda_power: graph must be declared regular");
  if (g.num_nodes() < 2) throw parameter_error("lambda_power: need n >= 2");
  if (!(tol > 0)) throw parameter_error("lambda_power: tol must be positive");
  double d = static_cast<double>(*g.regular_degree());
  const auto n = g.num_nodes();
  if (max_iter <= 0) {
    double auto_iter = 10.0 * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
    max_iter = std::max(100, static_cast<int>(std::ceil(auto_iter)));
  }
  SplitMix64 rng(0x9e3779b97f4a7c15ULL);
  SpectralReport rep;
  rep.method = SpectralReport::Method::kPower;
  int iters = 0;
  double res2 = 0.0, resn = 0.0;
  std::vector<double> v2, vn;
  double l2 = detail::power_run(g, d, true, tol, max_iter, iters, res2, rng, v2);
  double ln = detail::power_run(g, d, false, tol, max_iter, iters, resn, rng, vn);
  rep.lambda2 = l2;
  rep.lambda_min = ln;
  rep.lambda_est = std::max(std::abs(l2), std::abs(ln));
  rep.top_vector = std::abs(l2) >= std::abs(ln) ? std::move(v2) : std::move(vn);
  rep.iterations = iters;
  rep.residual = std::max(res2, resn);
  detail::finish_report(rep, g);
  if (rep.residual > tol * d)
    throw convergence_error("lambda_power: no convergence in " + std::to_string(max_iter) +
                            " iterations (residual " + std::to_string(rep.residual) + ")", rep);
  return rep;
}

}  // namespace xp
