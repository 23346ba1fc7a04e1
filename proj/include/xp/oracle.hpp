#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "xp/graph.hpp"

namespace xp {

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Metered access layer. Algorithms that claim sublinear query complexity take
// their input through one of these, never through the Graph directly, so the
// counters are exact by construction.
class QueryOracle {
 public:
  enum class QueryKind { kDegree, kNeighbor, kIncidence };

  struct LogEntry {
    QueryKind kind;
    NodeId node;
  };

  explicit QueryOracle(const Graph& g) : g_(&g) {}

  NodeId num_nodes() const { return g_->num_nodes(); }

  int degree(NodeId v) {
    ++degree_queries_;
    record(QueryKind::kDegree, v);
    return g_->degree(v);
  }

  NodeId neighbor(NodeId v, int j) {
    ++neighbor_queries_;
    record(QueryKind::kNeighbor, v);
    auto nb = g_->neighbors(v);
    if (j < 0 || static_cast<std::size_t>(j) >= nb.size())
      throw std::out_of_range("neighbor index out of range");
    return nb[static_cast<std::size_t>(j)];
  }

  // All incident edges of v, normalized and sorted; counts as one query
  // regardless of degree.
  std::vector<Edge> node_incidence(NodeId v) {
    ++incidence_queries_;
    record(QueryKind::kIncidence, v);
    std::vector<Edge> out;
    auto nb = g_->neighbors(v);  // may throw before any state is touched below
    if (in_visited_log_.empty()) in_visited_log_.assign(g_->num_nodes(), false);
    if (!in_visited_log_[v]) {
      in_visited_log_[v] = true;
      visited_log_.push_back(v);
    }
    out.reserve(nb.size());
    for (NodeId u : nb) out.push_back(make_edge(v, u));
    return out;
  }

  std::uint64_t degree_queries() const { return degree_queries_; }
  std::uint64_t neighbor_queries() const { return neighbor_queries_; }
  std::uint64_t incidence_queries() const { return incidence_queries_; }
  std::uint64_t total_queries() const {
    return degree_queries_ + neighbor_queries_ + incidence_queries_;
  }

  void reset() {
    degree_queries_ = neighbor_queries_ = incidence_queries_ = 0;
    log_.clear();
    visited_log_.clear();
    in_visited_log_.clear();
  }

  void enable_log(bool on) { logging_ = on; }
  const std::vector<LogEntry>& log() const { return log_; }

  // Distinct nodes whose incidence was revealed, in first-reveal order.
  const std::vector<NodeId>& visited_log() const { return visited_log_; }

 private:
  void record(QueryKind kind, NodeId v) {
    if (logging_) log_.push_back({kind, v});
  }

  const Graph* g_;
  std::uint64_t degree_queries_ = 0;
  std::uint64_t neighbor_queries_ = 0;
  std::uint64_t incidence_queries_ = 0;
  bool logging_ = false;
  std::vector<LogEntry> log_;
  std::vector<NodeId> visited_log_;
  std::vector<bool> in_visited_log_;
};

// Minimal interface the search algorithms are written against.
template <class O>
concept QueryOracleLike = requires(O& o, NodeId v, int j) {
  { o.num_nodes() } -> std::convertible_to<NodeId>;
  { o.degree(v) } -> std::convertible_to<int>;
  { o.neighbor(v, j) } -> std::convertible_to<NodeId>;
  { o.total_queries() } -> std::convertible_to<std::uint64_t>;
};

enum class PathStatus { kFound, kNotFound };

struct PathResult {
  PathStatus status = PathStatus::kNotFound;
  std::vector<NodeId> path;                  // node sequence s..t when found
  std::optional<std::uint32_t> distance;     // path.size() - 1
  std::uint64_t visited_count = 0;           // distinct nodes placed in any tree or walk
  std::uint64_t expanded_count = 0;          // nodes whose neighborhood was read
  std::uint64_t query_count = 0;             // oracle queries spent by this call
  std::optional<NodeId> meet_node;

  bool found() const { return status == PathStatus::kFound; }
};

}  // namespace xp
