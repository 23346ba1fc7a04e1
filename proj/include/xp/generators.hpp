#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "xp/graph.hpp"
#include "xp/rng.hpp"

namespace xp {

// Perfect matching on n*d half-nodes. Half-node x belongs to group x / d and
// occupies slot x % d; partner[] is a fixed-point-free involution.
struct MatchingGraph {
  std::uint32_t n = 0;
  int d = 0;
  std::vector<std::uint32_t> partner;

  std::uint32_t num_half_nodes() const { return n * static_cast<std::uint32_t>(d); }
  std::uint32_t group_of(std::uint32_t x) const { return x / static_cast<std::uint32_t>(d); }
  int slot_of(std::uint32_t x) const { return static_cast<int>(x % static_cast<std::uint32_t>(d)); }

  bool is_valid_involution() const {
    if (partner.size() != num_half_nodes()) return false;
    for (std::uint32_t x = 0; x < partner.size(); ++x) {
      std::uint32_t y = partner[x];
      if (y >= partner.size() || y == x || partner[y] != x) return false;
    }
    return true;
  }
};

// Uniform perfect matching: shuffle all half-nodes, pair consecutive entries.
inline MatchingGraph sample_matching(std::uint32_t n, int d, SplitMix64& rng) {
  MatchingGraph mg;
  mg.n = n;
  mg.d = d;
  std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d);
  std::vector<std::uint32_t> pool(total);
  for (std::uint64_t i = 0; i < total; ++i) pool[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = total - 1; i > 0; --i) {
    std::uint64_t j = uniform_below(rng, i + 1);
    std::swap(pool[i], pool[j]);
  }
  mg.partner.resize(total);
  for (std::uint64_t i = 0; i < total; i += 2) {
    mg.partner[pool[i]] = pool[i + 1];
    mg.partner[pool[i + 1]] = pool[i];
  }
  return mg;
}

// Collapse half-nodes onto their groups. Returns nullopt when the contraction
// would need a self-loop or a parallel edge.
inline std::optional<Graph> contract_to_simple(const MatchingGraph& mg) {
  std::vector<Edge> edges;
  edges.reserve(mg.num_half_nodes() / 2);
  for (std::uint32_t x = 0; x < mg.num_half_nodes(); ++x) {
    std::uint32_t y = mg.partner[x];
    if (x >= y) continue;
    NodeId a = mg.group_of(x), b = mg.group_of(y);
    if (a == b) return std::nullopt;
    edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
  return Graph::from_edges(mg.n, edges, mg.d);
}

inline MatchingGraph gen_matching_model(std::uint32_t n, int d, std::uint64_t seed) {
  if (d < 1) throw parameter_error("gen_matching_model: d must be >= 1");
  if (n < 1) throw parameter_error("gen_matching_model: n must be >= 1");
  if ((static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d)) % 2 != 0)
    throw parameter_error("gen_matching_model: n*d must be even");
  SplitMix64 rng(seed);
  return sample_matching(n, d, rng);
}

namespace detail {

// Map a linear index in [0, n(n-1)/2) to the pair (u,v), u < v, ordered by u
// then v.
inline Edge decode_pair(std::uint32_t n, std::uint64_t idx) {
  std::uint64_t lo = 0, hi = n - 1;  // find max u with base(u) <= idx
  auto base = [n](std::uint64_t u) {
    return u * (n - 1) - u * (u - 1) / 2;
  };
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (base(mid) <= idx) lo = mid; else hi = mid - 1;
  }
  std::uint64_t u = lo;
  std::uint64_t v = u + 1 + (idx - base(u));
  return {static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

}  // namespace detail

// G(n,p) by geometric skips over the n(n-1)/2 pair slots; expected time
// O(pn^2 + n).
inline Graph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
  if (n < 2) throw parameter_error("gen_erdos_renyi: n must be >= 2");
  if (!(p > 0.0 && p < 1.0)) throw parameter_error("gen_erdos_renyi: p must be in (0,1)");
  SplitMix64 rng(seed);
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  std::uint64_t pos = geometric_skip(rng, p);
  while (pos < total) {
    edges.push_back(detail::decode_pair(n, pos));
    std::uint64_t gap = geometric_skip(rng, p);
    if (total - pos - 1 <= gap) break;
    pos += gap + 1;
  }
  return Graph::from_edges(n, edges);
}

inline constexpr int kRejectionCap = 1000;
inline constexpr int kPairingRestartCap = 1000;

enum class RegularAlgo { kAuto, kReject, kPairing };

namespace detail {

inline std::optional<Graph> pairing_attempt(std::uint32_t n, int d, SplitMix64& rng) {
  std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d);
  std::vector<NodeId> pool(total);
  for (std::uint64_t i = 0; i < total; ++i)
    pool[i] = static_cast<NodeId>(i / static_cast<std::uint64_t>(d));
  std::unordered_set<std::uint64_t> used;
  used.reserve(total);
  std::vector<Edge> edges;
  edges.reserve(total / 2);
  auto key = [](NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  };
  std::uint64_t stale = 0;
  while (!pool.empty()) {
    std::uint64_t i = uniform_below(rng, pool.size());
    std::uint64_t j = uniform_below(rng, pool.size());
    NodeId u = pool[i], v = pool[j];
    if (i == j || u == v || used.count(key(u, v))) {
      if (++stale > 10000 + 100 * pool.size()) return std::nullopt;
      continue;
    }
    stale = 0;
    used.insert(key(u, v));
    edges.push_back(make_edge(u, v));
    if (i < j) std::swap(i, j);
    pool[i] = pool.back();
    pool.pop_back();
    pool[j] = pool.back();
    pool.pop_back();
  }
  return Graph::from_edges(n, edges, d);
}

}  // namespace detail

// Uniform d-regular graph by configuration-model rejection (exactly uniform;
// practical only while the simplicity probability ~ exp(-(d^2-1)/4) is not
// tiny), or by pairing with restarts (asymptotically uniform, fine for any d).
// kAuto switches from rejection to pairing at d = 5.
inline Graph gen_random_regular(std::uint32_t n, int d, std::uint64_t seed,
                                RegularAlgo algo = RegularAlgo::kAuto) {
  if (d < 1) throw parameter_error("gen_random_regular: d must be >= 1");
  if (n <= static_cast<std::uint32_t>(d)) throw parameter_error("gen_random_regular: need n > d");
  if ((static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d)) % 2 != 0)
    throw parameter_error("gen_random_regular: n*d must be even");
  if (algo == RegularAlgo::kAuto) algo = d <= 4 ? RegularAlgo::kReject : RegularAlgo::kPairing;
  SplitMix64 rng(seed);
  if (algo == RegularAlgo::kReject) {
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
      MatchingGraph mg = sample_matching(n, d, rng);
      if (auto g = contract_to_simple(mg)) return *g;
    }
    throw generation_error("gen_random_regular: no simple graph in " +
                           std::to_string(kRejectionCap) + " rejection attempts (d too large?)");
  }
  for (int attempt = 0; attempt < kPairingRestartCap; ++attempt) {
    if (auto g = detail::pairing_attempt(n, d, rng)) return *g;
  }
  throw generation_error("gen_random_regular: pairing failed to complete");
}

// Margulis-style expander on the m x m torus: node (x,y) has id x*m + y and is
// joined to (x+-2y, y), (x, y+-2x), (x+-(2y+1), y), (x, y+-(2x+1)), all mod m.
// Coincident images are merged and fixed points dropped, so the result is
// simple but not exactly 8-regular; regular_degree is left unset.
inline Graph gen_margulis_expander(std::uint32_t m) {
  if (m < 3) throw parameter_error("gen_margulis_expander: m must be >= 3");
  std::uint64_t n = static_cast<std::uint64_t>(m) * m;
  if (n > std::numeric_limits<NodeId>::max()) throw parameter_error("gen_margulis_expander: m too large");
  std::vector<Edge> edges;
  edges.reserve(4 * n);
  auto id = [m](std::uint64_t x, std::uint64_t y) {
    return static_cast<NodeId>(x * m + y);
  };
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      NodeId v = id(x, y);
      std::uint64_t images[8] = {
          id((x + 2 * y) % m, y),         id((x + m + m - 2 * y % m) % m, y),
          id(x, (y + 2 * x) % m),         id(x, (y + m + m - 2 * x % m) % m),
          id((x + 2 * y + 1) % m, y),     id((x + m + m - (2 * y + 1) % m) % m, y),
          id(x, (y + 2 * x + 1) % m),     id(x, (y + m + m - (2 * x + 1) % m) % m),
      };
      for (std::uint64_t w : images)
        if (w != v && v < w) edges.push_back({v, static_cast<NodeId>(w)});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(static_cast<NodeId>(n), edges);
}

}  // namespace xp
