#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "xp/generators.hpp"
#include "xp/oracle.hpp"
#include "xp/rng.hpp"

namespace xp {

// A trace is everything an incidence-query strategy has seen: the queried
// nodes in order and the edge sets returned for them.
struct TraceStep {
  std::uint32_t query = 0;
  std::vector<Edge> returned_edges;
};

struct Trace {
  std::vector<TraceStep> steps;

  std::vector<Edge> discovered_edges() const {
    std::vector<Edge> out;
    for (const auto& st : steps) out.insert(out.end(), st.returned_edges.begin(), st.returned_edges.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::uint32_t> parent, size;

  explicit UnionFind(std::uint32_t n) : parent(n), size(n, 1) {
    for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }

  bool connected(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }
};

inline std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.first) << 32) | e.second;
}

}  // namespace detail

// Classification of every prefix pi_k of a trace. A prefix is connected when
// its discovered edges already join s and t, and (in the G(n,p) model)
// useless when it is not connected and has found at most 2*p*n*k edges, i.e.
// no more than twice the expected haul of k blind queries.
struct TraceClass {
  std::uint32_t k = 0;
  bool connected = false;
  bool useless = false;
  std::uint64_t edges_discovered = 0;
};

inline std::vector<TraceClass> classify_trace(const Trace& trace, std::uint32_t n, NodeId s,
                                              NodeId t,
                                              std::optional<double> p = std::nullopt) {
  if (s >= n || t >= n) throw std::out_of_range("classify_trace: endpoint out of range");
  detail::UnionFind uf(n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<TraceClass> out;
  out.reserve(trace.steps.size() + 1);
  bool connected = s == t;
  std::uint64_t edges = 0;
  auto classify = [&](std::uint32_t k) {
    TraceClass tc;
    tc.k = k;
    tc.connected = connected;
    tc.edges_discovered = edges;
    if (p && !connected)
      tc.useless = static_cast<double>(edges) <= 2.0 * *p * static_cast<double>(n) * k;
    out.push_back(tc);
  };
  classify(0);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    for (Edge e : trace.steps[i].returned_edges) {
      if (e.first >= n || e.second >= n) throw std::out_of_range("classify_trace: edge out of range");
      if (seen.insert(detail::edge_key(make_edge(e.first, e.second))).second) ++edges;
      uf.unite(e.first, e.second);
    }
    connected = connected || uf.connected(s, t);
    classify(static_cast<std::uint32_t>(i + 1));
  }
  return out;
}

inline bool is_valid_st_path(const Graph& g, const std::vector<NodeId>& path, NodeId s, NodeId t) {
  if (path.empty()) return false;
  if (path.front() != s || path.back() != t) return false;
  std::unordered_set<NodeId> seen;
  for (NodeId v : path) {
    if (v >= g.num_nodes()) return false;
    if (!seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  return true;
}

// A strategy sees only the trace so far. next_query returns the node whose
// incidence list it wants next, or nullopt to stop early; output produces the
// claimed s-t path (empty = concede).
class NodeStrategy {
 public:
  virtual ~NodeStrategy() = default;
  virtual std::optional<NodeId> next_query(const Trace& trace) = 0;
  virtual std::vector<NodeId> output(const Trace& trace) = 0;
};

struct GameResult {
  Trace trace;
  std::vector<NodeId> path;
  std::uint64_t queries_used = 0;
};

// Plays a strategy against a concrete graph under a query budget. All graph
// access goes through the incidence oracle, so the trace is exactly what the
// strategy paid for.
inline GameResult run_traced(NodeStrategy& strategy, const Graph& g, std::uint64_t budget) {
  QueryOracle oracle(g);
  GameResult res;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto q = strategy.next_query(res.trace);
    if (!q) break;
    if (*q >= g.num_nodes()) throw strategy_error("strategy queried out-of-range node");
    TraceStep step;
    step.query = *q;
    step.returned_edges = oracle.node_incidence(*q);
    res.trace.steps.push_back(std::move(step));
  }
  res.queries_used = oracle.incidence_queries();
  res.path = strategy.output(res.trace);
  return res;
}

namespace detail {

// Discovered-graph bookkeeping shared by the concrete strategies: adjacency
// of revealed edges (insertion order, deduplicated), queried markers, and
// s-t connectivity.
struct DiscoveredState {
  std::uint32_t n;
  NodeId s, t;
  UnionFind uf;
  std::unordered_map<NodeId, std::vector<NodeId>> adj;
  std::unordered_set<std::uint64_t> edges;
  std::vector<char> queried;
  std::size_t steps_seen = 0;

  DiscoveredState(std::uint32_t n_, NodeId s_, NodeId t_)
      : n(n_), s(s_), t(t_), uf(n_), queried(n_, 0) {
    if (s >= n || t >= n) throw parameter_error("strategy: endpoint out of range");
  }

  // Returns the edges of the newly ingested steps, in order.
  std::vector<Edge> ingest(const Trace& trace) {
    std::vector<Edge> fresh;
    for (; steps_seen < trace.steps.size(); ++steps_seen) {
      const auto& st = trace.steps[steps_seen];
      if (st.query < n) queried[st.query] = 1;
      for (Edge e : st.returned_edges) {
        fresh.push_back(e);
        if (!edges.insert(edge_key(make_edge(e.first, e.second))).second) continue;
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
        uf.unite(e.first, e.second);
      }
    }
    return fresh;
  }

  bool connected() { return uf.connected(s, t); }

  // Shortest s-t path in the discovered graph (deterministic tie-break by
  // discovery order).
  std::vector<NodeId> bfs_path() {
    if (!connected()) return {};
    std::unordered_map<NodeId, NodeId> parent;
    parent[s] = s;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      if (u == t) break;
      auto it = adj.find(u);
      if (it == adj.end()) continue;
      for (NodeId v : it->second) {
        if (parent.count(v)) continue;
        parent[v] = u;
        queue.push_back(v);
      }
    }
    if (!parent.count(t)) return {};
    std::vector<NodeId> path;
    for (NodeId v = t; v != s; v = parent[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

}  // namespace detail

// Faithful query-game version of the meeting-in-the-middle search: layers of
// incidence queries alternate between the s tree and the t tree, s first;
// stops as soon as the discovered edges connect s and t.
class BiBfsStrategy : public NodeStrategy {
 public:
  BiBfsStrategy(std::uint32_t n, NodeId s, NodeId t) : state_(n, s, t) {
    in_tree_[0].assign(n, 0);
    in_tree_[1].assign(n, 0);
    in_tree_[0][s] = 1;
    in_tree_[1][t] = 1;
    cur_[0].push_back(s);
    cur_[1].push_back(t);
  }

  std::optional<NodeId> next_query(const Trace& trace) override {
    auto fresh = state_.ingest(trace);
    if (pending_side_ >= 0) {
      for (Edge e : fresh) {
        for (NodeId v : {e.first, e.second}) {
          if (!in_tree_[pending_side_][v]) {
            in_tree_[pending_side_][v] = 1;
            next_[pending_side_].push_back(v);
          }
        }
      }
      pending_side_ = -1;
    }
    if (state_.connected()) return std::nullopt;
    for (int guard = 0; guard < 4; ++guard) {
      while (!cur_[active_].empty()) {
        NodeId u = cur_[active_].front();
        cur_[active_].pop_front();
        if (state_.queried[u]) continue;
        pending_side_ = active_;
        return u;
      }
      active_ = 1 - active_;
      if (cur_[active_].empty()) {
        cur_[active_] = std::move(next_[active_]);
        next_[active_].clear();
      }
    }
    return std::nullopt;
  }

  std::vector<NodeId> output(const Trace& trace) override {
    state_.ingest(trace);
    return state_.bfs_path();
  }

 private:
  detail::DiscoveredState state_;
  std::vector<char> in_tree_[2];
  std::deque<NodeId> cur_[2], next_[2];
  int active_ = 0;
  int pending_side_ = -1;
};

// Queries uniformly random not-yet-queried nodes.
class RandomProbeStrategy : public NodeStrategy {
 public:
  RandomProbeStrategy(std::uint32_t n, NodeId s, NodeId t, std::uint64_t seed)
      : state_(n, s, t), rng_(seed) {}

  std::optional<NodeId> next_query(const Trace& trace) override {
    state_.ingest(trace);
    if (state_.connected()) return std::nullopt;
    for (int miss = 0; miss < 64; ++miss) {
      NodeId v = static_cast<NodeId>(uniform_below(rng_, state_.n));
      if (!state_.queried[v]) return v;
    }
    NodeId start = static_cast<NodeId>(uniform_below(rng_, state_.n));
    for (std::uint32_t i = 0; i < state_.n; ++i) {
      NodeId v = static_cast<NodeId>((start + i) % state_.n);
      if (!state_.queried[v]) return v;
    }
    return std::nullopt;  // every node queried
  }

  std::vector<NodeId> output(const Trace& trace) override {
    state_.ingest(trace);
    return state_.bfs_path();
  }

 private:
  detail::DiscoveredState state_;
  SplitMix64 rng_;
};

// Queries s, then t, then whichever revealed node has the highest observed
// degree (ties to the smallest id); falls back to the smallest unqueried id.
class DegreeGreedyStrategy : public NodeStrategy {
 public:
  DegreeGreedyStrategy(std::uint32_t n, NodeId s, NodeId t) : state_(n, s, t) {}

  std::optional<NodeId> next_query(const Trace& trace) override {
    for (Edge e : state_.ingest(trace)) {
      seen_endpoints_.insert(e.first);
      seen_endpoints_.insert(e.second);
    }
    if (state_.connected()) return std::nullopt;
    if (!state_.queried[state_.s]) return state_.s;
    if (!state_.queried[state_.t]) return state_.t;
    NodeId best = kNoNode;
    std::size_t best_deg = 0;
    for (NodeId v : seen_endpoints_) {
      if (state_.queried[v]) continue;
      std::size_t deg = state_.adj.count(v) ? state_.adj.at(v).size() : 0;
      if (deg > best_deg) {  // set iteration is ascending, so ties keep the smallest id
        best = v;
        best_deg = deg;
      }
    }
    if (best != kNoNode && best_deg > 0) return best;
    for (NodeId v = 0; v < state_.n; ++v)
      if (!state_.queried[v]) return v;
    return std::nullopt;
  }

  std::vector<NodeId> output(const Trace& trace) override {
    state_.ingest(trace);
    return state_.bfs_path();
  }

 private:
  detail::DiscoveredState state_;
  std::set<NodeId> seen_endpoints_;
};

// Spends no queries and outputs the two-node path (s, t); succeeds exactly
// when the direct edge happens to exist.
class GuessDirectEdgeStrategy : public NodeStrategy {
 public:
  GuessDirectEdgeStrategy(NodeId s, NodeId t) : s_(s), t_(t) {}

  std::optional<NodeId> next_query(const Trace&) override { return std::nullopt; }

  std::vector<NodeId> output(const Trace&) override { return {s_, t_}; }

 private:
  NodeId s_, t_;
};

inline std::unique_ptr<NodeStrategy> make_node_strategy(const std::string& name, std::uint32_t n,
                                                        NodeId s, NodeId t, std::uint64_t seed) {
  if (name == "bibfs") return std::make_unique<BiBfsStrategy>(n, s, t);
  if (name == "random") return std::make_unique<RandomProbeStrategy>(n, s, t, seed);
  if (name == "greedy") return std::make_unique<DegreeGreedyStrategy>(n, s, t);
  if (name == "guess") return std::make_unique<GuessDirectEdgeStrategy>(s, t);
  throw parameter_error("unknown strategy: " + name);
}

// ---- matching-model meta game ----------------------------------------------

// Metered group-incidence access to a matching graph: one query reveals all d
// matching edges touching a group.
class GroupOracle {
 public:
  explicit GroupOracle(const MatchingGraph& mg) : mg_(&mg) {}

  std::uint32_t num_groups() const { return mg_->n; }
  int group_size() const { return mg_->d; }

  std::vector<Edge> group_incidence(std::uint32_t i) {
    if (i >= mg_->n) throw std::out_of_range("group_incidence: group out of range");
    ++incidence_queries_;
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(mg_->d));
    std::uint32_t base = i * static_cast<std::uint32_t>(mg_->d);
    for (int j = 0; j < mg_->d; ++j) {
      std::uint32_t x = base + static_cast<std::uint32_t>(j);
      std::uint32_t y = mg_->partner[x];
      Edge e = make_edge(x, y);
      if (e.first >= base && e.first < base + static_cast<std::uint32_t>(mg_->d) && e.second >= base &&
          e.second < base + static_cast<std::uint32_t>(mg_->d) && e.first != x)
        continue;  // intra-group edge already emitted from its lower half-node
      out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t incidence_queries() const { return incidence_queries_; }
  std::uint64_t total_queries() const { return incidence_queries_; }

 private:
  const MatchingGraph* mg_;
  std::uint64_t incidence_queries_ = 0;
};

// Sequence of groups; consecutive entries must share a matching edge.
using MetaPath = std::vector<std::uint32_t>;

inline bool is_valid_meta_path(const MatchingGraph& mg, const MetaPath& path, std::uint32_t s,
                               std::uint32_t t) {
  if (path.empty()) return false;
  if (path.front() != s || path.back() != t) return false;
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t gr : path) {
    if (gr >= mg.n) return false;
    if (!seen.insert(gr).second) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    std::uint32_t a = path[i], b = path[i + 1];
    bool joined = false;
    std::uint32_t base = a * static_cast<std::uint32_t>(mg.d);
    for (int j = 0; j < mg.d && !joined; ++j)
      joined = mg.group_of(mg.partner[base + static_cast<std::uint32_t>(j)]) == b;
    if (!joined) return false;
  }
  return true;
}

// Contract each group to one node; nullopt when the result would not be
// simple. (Same operation the configuration-model rejection sampler uses.)
inline std::optional<Graph> contract_groups(const MatchingGraph& mg) {
  return contract_to_simple(mg);
}

class GroupStrategy {
 public:
  virtual ~GroupStrategy() = default;
  virtual std::optional<std::uint32_t> next_query(const Trace& trace) = 0;
  virtual MetaPath output(const Trace& trace) = 0;
};

struct MetaGameResult {
  Trace trace;
  MetaPath meta_path;
  bool valid = false;
  std::uint64_t queries_used = 0;
};

inline MetaGameResult run_meta_game(GroupStrategy& strategy, const MatchingGraph& mg,
                                    std::uint64_t budget, std::uint32_t s, std::uint32_t t) {
  if (s >= mg.n || t >= mg.n) throw parameter_error("run_meta_game: endpoint out of range");
  GroupOracle oracle(mg);
  MetaGameResult res;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto q = strategy.next_query(res.trace);
    if (!q) break;
    if (*q >= mg.n) throw strategy_error("strategy queried out-of-range group");
    TraceStep step;
    step.query = *q;
    step.returned_edges = oracle.group_incidence(*q);
    res.trace.steps.push_back(std::move(step));
  }
  res.queries_used = oracle.incidence_queries();
  res.meta_path = strategy.output(res.trace);
  res.valid = is_valid_meta_path(mg, res.meta_path, s, t);
  return res;
}

inline MetaGameResult run_meta_game(GroupStrategy& strategy, const MatchingGraph& mg,
                                    std::uint64_t budget) {
  if (mg.n < 2) throw parameter_error("run_meta_game: need at least two groups");
  return run_meta_game(strategy, mg, budget, 0, mg.n - 1);
}

// Single-sided BFS over groups: query discovered groups in BFS order from s
// until the discovered matching edges connect the s and t groups. Falls back
// to guessing the direct meta-edge when the budget runs out first.
class GreedyGroupBfsStrategy : public GroupStrategy {
 public:
  GreedyGroupBfsStrategy(std::uint32_t n_groups, int d, std::uint32_t s, std::uint32_t t)
      : n_(n_groups), d_(d), s_(s), t_(t), uf_(n_groups), queried_(n_groups, 0),
        in_tree_(n_groups, 0) {
    if (s >= n_ || t >= n_) throw parameter_error("strategy: endpoint out of range");
    in_tree_[s] = 1;
    queue_.push_back(s);
  }

  std::optional<std::uint32_t> next_query(const Trace& trace) override {
    ingest(trace);
    if (uf_.connected(s_, t_)) return std::nullopt;
    while (!queue_.empty()) {
      std::uint32_t gq = queue_.front();
      if (queried_[gq]) {
        queue_.pop_front();
        continue;
      }
      return gq;
    }
    return std::nullopt;
  }

  MetaPath output(const Trace& trace) override {
    ingest(trace);
    if (!uf_.connected(s_, t_)) return {s_, t_};
    std::unordered_map<std::uint32_t, std::uint32_t> parent;
    parent[s_] = s_;
    std::deque<std::uint32_t> q{s_};
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop_front();
      if (u == t_) break;
      auto it = adj_.find(u);
      if (it == adj_.end()) continue;
      for (std::uint32_t v : it->second) {
        if (parent.count(v)) continue;
        parent[v] = u;
        q.push_back(v);
      }
    }
    if (!parent.count(t_)) return {s_, t_};
    MetaPath path;
    for (std::uint32_t v = t_; v != s_; v = parent[v]) path.push_back(v);
    path.push_back(s_);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  void ingest(const Trace& trace) {
    for (; steps_seen_ < trace.steps.size(); ++steps_seen_) {
      const auto& st = trace.steps[steps_seen_];
      if (st.query < n_) queried_[st.query] = 1;
      for (Edge e : st.returned_edges) {
        std::uint32_t a = e.first / static_cast<std::uint32_t>(d_);
        std::uint32_t b = e.second / static_cast<std::uint32_t>(d_);
        if (a == b) continue;
        if (!meta_edges_.insert(detail::edge_key(make_edge(a, b))).second) continue;
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        uf_.unite(a, b);
        for (std::uint32_t gr : {a, b}) {
          if (!in_tree_[gr]) {
            in_tree_[gr] = 1;
            queue_.push_back(gr);
          }
        }
      }
    }
  }

  std::uint32_t n_;
  int d_;
  std::uint32_t s_, t_;
  detail::UnionFind uf_;
  std::vector<char> queried_, in_tree_;
  std::deque<std::uint32_t> queue_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> adj_;
  std::unordered_set<std::uint64_t> meta_edges_;
  std::size_t steps_seen_ = 0;
};

// ---- budget sweep harness ---------------------------------------------------

struct BudgetPoint {
  std::uint64_t budget = 0;
  double success_rate = 0.0;     // strategy output was a valid s-t path
  double connected_rate = 0.0;   // trace alone already connected s and t
  double mean_edges = 0.0;       // mean distinct edges discovered
};

using GraphModel = std::function<Graph(std::uint64_t seed)>;
using StrategyFactory =
    std::function<std::unique_ptr<NodeStrategy>(const Graph& g, std::uint64_t seed)>;

// Plays `trials` independent games per budget; s = 0 and t = n-1 in every
// game. Trial seeds are derived from (seed, budget index, trial index), so a
// sweep is reproducible point by point.
inline std::vector<BudgetPoint> success_vs_budget(const GraphModel& model,
                                                  const StrategyFactory& factory,
                                                  const std::vector<std::uint64_t>& budgets,
                                                  int trials, std::uint64_t seed) {
  if (trials < 1) throw parameter_error("success_vs_budget: trials must be >= 1");
  std::vector<BudgetPoint> out;
  out.reserve(budgets.size());
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    BudgetPoint pt;
    pt.budget = budgets[bi];
    std::uint64_t successes = 0, connected = 0, edges_total = 0;
    for (int trial = 0; trial < trials; ++trial) {
      std::uint64_t graph_seed = derive_seed(seed, 2 * bi, static_cast<std::uint64_t>(trial));
      std::uint64_t strat_seed = derive_seed(seed, 2 * bi + 1, static_cast<std::uint64_t>(trial));
      Graph g = model(graph_seed);
      if (g.num_nodes() < 2) throw parameter_error("success_vs_budget: model produced n < 2");
      NodeId s = 0, t = g.num_nodes() - 1;
      auto strategy = factory(g, strat_seed);
      GameResult res = run_traced(*strategy, g, budgets[bi]);
      if (is_valid_st_path(g, res.path, s, t)) ++successes;
      auto classes = classify_trace(res.trace, g.num_nodes(), s, t);
      if (classes.back().connected) ++connected;
      edges_total += classes.back().edges_discovered;
    }
    pt.success_rate = static_cast<double>(successes) / trials;
    pt.connected_rate = static_cast<double>(connected) / trials;
    pt.mean_edges = static_cast<double>(edges_total) / trials;
    out.push_back(pt);
  }
  return out;
}

}  // namespace xp
