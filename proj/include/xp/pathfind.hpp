#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "xp/oracle.hpp"
#include "xp/rng.hpp"

namespace xp {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Distances from s to every node, kUnreachable where no path exists. Linear in
// edges; the baseline the sublinear searches are compared against.
template <QueryOracleLike O>
std::vector<std::uint32_t> full_bfs(O& oracle, NodeId s) {
  const NodeId n = oracle.num_nodes();
  if (s >= n) throw std::out_of_range("full_bfs: source out of range");
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<NodeId> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    int deg = oracle.degree(u);
    for (int j = 0; j < deg; ++j) {
      NodeId v = oracle.neighbor(u, j);
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

// Meeting-in-the-middle BFS. Layers alternate strictly, s side first; after
// each completed layer the trees are checked for overlap, and the smallest
// overlapping node id is the meet point. First overlap happens exactly when
// the two tree depths sum to dist(s,t), so the returned path is shortest.
template <QueryOracleLike O>
PathResult bidirectional_bfs(O& oracle, NodeId s, NodeId t) {
  const NodeId n = oracle.num_nodes();
  if (s >= n || t >= n) throw std::out_of_range("bidirectional_bfs: endpoint out of range");
  if (s == t) throw parameter_error("bidirectional_bfs: s and t must differ");

  const std::uint64_t before = oracle.total_queries();
  PathResult res;
  // dist doubles as tree membership; parent reconstructs the two tree paths.
  std::vector<std::uint32_t> dist[2] = {std::vector<std::uint32_t>(n, kUnreachable),
                                        std::vector<std::uint32_t>(n, kUnreachable)};
  std::vector<NodeId> parent[2] = {std::vector<NodeId>(n, kNoNode),
                                   std::vector<NodeId>(n, kNoNode)};
  std::vector<NodeId> frontier[2] = {{s}, {t}};
  dist[0][s] = 0;
  dist[1][t] = 0;
  res.visited_count = 2;

  int side = 0;
  std::vector<NodeId> next, meets;
  while (true) {
    auto& cur = frontier[side];
    if (cur.empty()) {  // side's component exhausted without overlap
      res.status = PathStatus::kNotFound;
      res.query_count = oracle.total_queries() - before;
      return res;
    }
    next.clear();
    meets.clear();
    std::uint32_t depth = dist[side][cur.front()];
    for (NodeId u : cur) {
      int deg = oracle.degree(u);
      ++res.expanded_count;
      for (int j = 0; j < deg; ++j) {
        NodeId v = oracle.neighbor(u, j);
        if (dist[side][v] != kUnreachable) continue;
        dist[side][v] = depth + 1;
        parent[side][v] = u;
        next.push_back(v);
        if (dist[1 - side][v] == kUnreachable) ++res.visited_count;
        else meets.push_back(v);
      }
    }
    if (!meets.empty()) {
      NodeId meet = *std::min_element(meets.begin(), meets.end());
      std::vector<NodeId> from_s;
      for (NodeId v = meet; v != kNoNode; v = parent[0][v]) from_s.push_back(v);
      std::reverse(from_s.begin(), from_s.end());  // s .. meet
      for (NodeId v = parent[1][meet]; v != kNoNode; v = parent[1][v]) from_s.push_back(v);
      res.status = PathStatus::kFound;
      res.path = std::move(from_s);
      res.distance = static_cast<std::uint32_t>(res.path.size() - 1);
      res.meet_node = meet;
      res.query_count = oracle.total_queries() - before;
      return res;
    }
    frontier[side] = next;
    side = 1 - side;
  }
}

// Uniform random walk of the given length; returns the node sequence
// including the start (len+1 entries). Each step costs one degree query and
// one neighbor query.
template <QueryOracleLike O>
std::vector<NodeId> random_walk(O& oracle, NodeId start, int len, std::uint64_t seed) {
  if (start >= oracle.num_nodes()) throw std::out_of_range("random_walk: start out of range");
  if (len < 0) throw parameter_error("random_walk: len must be >= 0");
  SplitMix64 rng(seed);
  std::vector<NodeId> walk;
  walk.reserve(static_cast<std::size_t>(len) + 1);
  walk.push_back(start);
  NodeId v = start;
  for (int i = 0; i < len; ++i) {
    int deg = oracle.degree(v);
    if (deg == 0) break;  // isolated node, walk is stuck
    v = oracle.neighbor(v, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg))));
    walk.push_back(v);
  }
  return walk;
}

// Parameters for bfs_plus_walks, derived from (n, d, lambda, delta):
//   bfs_target  k   = ceil(sqrt(7 n ln(1/delta)))
//   walk_len        = ceil(3 log_{d/lambda} n)
//   num_walks   tau = ceil(k / (3 log_{d/lambda} n))
// Valid only while lambda/d <= 1/2.
struct WalkParams {
  std::uint64_t bfs_target = 0;
  int walk_len = 0;
  int num_walks = 0;
  double lambda_over_d = 0.0;
  double delta = 0.0;

  static WalkParams from_graph(std::uint32_t n, int d, double lambda, double delta) {
    if (n < 2) throw parameter_error("WalkParams: need n >= 2");
    if (d < 1) throw parameter_error("WalkParams: need d >= 1");
    if (!(lambda > 0.0)) throw parameter_error("WalkParams: lambda must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("WalkParams: delta must be in (0,1)");
    double ratio = lambda / static_cast<double>(d);
    if (ratio > 0.5) throw parameter_error("WalkParams: requires lambda/d <= 1/2");
    double log_ratio_n = std::log(static_cast<double>(n)) / std::log(1.0 / ratio);
    WalkParams p;
    p.lambda_over_d = ratio;
    p.delta = delta;
    p.bfs_target = static_cast<std::uint64_t>(
        std::ceil(std::sqrt(7.0 * static_cast<double>(n) * std::log(1.0 / delta))));
    p.walk_len = static_cast<int>(std::ceil(3.0 * log_ratio_n));
    p.num_walks = static_cast<int>(std::ceil(
        static_cast<double>(p.bfs_target) / (3.0 * log_ratio_n)));
    return p;
  }
};

// Removes cycles from a walk-produced node sequence: whenever a node repeats,
// the loop between its two occurrences is spliced out.
inline std::vector<NodeId> simplify_path(const std::vector<NodeId>& raw) {
  std::unordered_map<NodeId, std::size_t> pos;
  std::vector<NodeId> out;
  out.reserve(raw.size());
  for (NodeId v : raw) {
    auto it = pos.find(v);
    if (it != pos.end()) {
      while (out.size() > it->second + 1) {
        pos.erase(out.back());
        out.pop_back();
      }
    } else {
      pos.emplace(v, out.size());
      out.push_back(v);
    }
  }
  return out;
}

// One-sided variant: grow a BFS ball around s to exactly min(k, reachable)
// nodes, then launch random walks from t until one lands in the ball. The
// returned path (ball tree prefix + reversed walk suffix, loops erased) is
// short, not necessarily shortest.
template <QueryOracleLike O>
PathResult bfs_plus_walks(O& oracle, NodeId s, NodeId t, const WalkParams& params,
                          std::uint64_t seed) {
  const NodeId n = oracle.num_nodes();
  if (s >= n || t >= n) throw std::out_of_range("bfs_plus_walks: endpoint out of range");
  if (s == t) throw parameter_error("bfs_plus_walks: s and t must differ");
  if (params.bfs_target < 1 || params.walk_len < 1 || params.num_walks < 1)
    throw parameter_error("bfs_plus_walks: params not positive");

  const std::uint64_t before = oracle.total_queries();
  PathResult res;
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<char> in_ball(n, 0), touched(n, 0);
  std::vector<NodeId> queue{s};
  in_ball[s] = 1;
  touched[s] = 1;
  res.visited_count = 1;
  std::uint64_t ball = 1;

  auto finish = [&](PathResult&& r) {
    r.query_count = oracle.total_queries() - before;
    return std::move(r);
  };
  auto tree_path_to = [&](NodeId v) {
    std::vector<NodeId> p;
    for (NodeId w = v; w != kNoNode; w = parent[w]) p.push_back(w);
    std::reverse(p.begin(), p.end());  // s .. v
    return p;
  };

  for (std::size_t head = 0; head < queue.size() && ball < params.bfs_target; ++head) {
    NodeId u = queue[head];
    int deg = oracle.degree(u);
    ++res.expanded_count;
    for (int j = 0; j < deg && ball < params.bfs_target; ++j) {
      NodeId v = oracle.neighbor(u, j);
      if (in_ball[v]) continue;
      in_ball[v] = 1;
      touched[v] = 1;
      parent[v] = u;
      ++ball;
      ++res.visited_count;
      if (v == t) {
        res.status = PathStatus::kFound;
        res.path = tree_path_to(t);
        res.distance = static_cast<std::uint32_t>(res.path.size() - 1);
        res.meet_node = t;
        return finish(std::move(res));
      }
      queue.push_back(v);
    }
  }
  if (in_ball[t]) {  // t swallowed during the final partial expansion
    res.status = PathStatus::kFound;
    res.path = tree_path_to(t);
    res.distance = static_cast<std::uint32_t>(res.path.size() - 1);
    res.meet_node = t;
    return finish(std::move(res));
  }

  std::vector<NodeId> walk;
  for (int wi = 0; wi < params.num_walks; ++wi) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(wi)));
    walk.assign(1, t);
    NodeId v = t;
    for (int step = 0; step < params.walk_len; ++step) {
      int deg = oracle.degree(v);
      ++res.expanded_count;
      if (deg == 0) break;
      v = oracle.neighbor(v, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg))));
      walk.push_back(v);
      if (!touched[v]) {
        touched[v] = 1;
        ++res.visited_count;
      }
      if (in_ball[v]) {
        std::vector<NodeId> path = tree_path_to(v);  // s .. v
        for (std::size_t i = walk.size() - 1; i-- > 0;) path.push_back(walk[i]);  // v .. t
        path = simplify_path(path);
        res.status = PathStatus::kFound;
        res.path = std::move(path);
        res.distance = static_cast<std::uint32_t>(res.path.size() - 1);
        res.meet_node = v;
        return finish(std::move(res));
      }
    }
  }
  res.status = PathStatus::kNotFound;
  return finish(std::move(res));
}

// Convenience wrapper that owns the oracle and enforces the d-regularity
// requirement via the graph's declared degree.
inline PathResult bfs_plus_walks(const Graph& g, NodeId s, NodeId t, double lambda, double delta,
                                 std::uint64_t seed) {
  if (!g.regular_degree())
    throw parameter_error("bfs_plus_walks: graph must be declared regular");
  WalkParams params = WalkParams::from_graph(g.num_nodes(), *g.regular_degree(), lambda, delta);
  QueryOracle oracle(g);
  return bfs_plus_walks(oracle, s, t, params, seed);
}

}  // namespace xp
