#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xp/errors.hpp"

namespace xp {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable undirected graph in CSR form. Adjacency lists are kept sorted,
// which makes has_edge a binary search and all iteration orders canonical.
class Graph {
 public:
  Graph() = default;

  // edges are unordered pairs; both directions are materialized.
  // Rejects out-of-range endpoints, self-loops and duplicate edges.
  static Graph from_edges(NodeId n, const std::vector<Edge>& edges,
                          std::optional<int> regular_degree = std::nullopt) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
      if (e.first >= n || e.second >= n) throw std::out_of_range("from_edges: endpoint out of range");
      if (e.first == e.second) throw parameter_error("from_edges: self-loop");
      ++g.offsets_[e.first + 1];
      ++g.offsets_[e.second + 1];
    }
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(edges.size() * 2);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.adj_[cursor[e.first]++] = e.second;
      g.adj_[cursor[e.second]++] = e.first;
    }
    for (NodeId v = 0; v < n; ++v) {
      auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(begin, end);
      if (std::adjacent_find(begin, end) != end)
        throw parameter_error("from_edges: duplicate edge at node " + std::to_string(v));
    }
    g.regular_degree_ = regular_degree;
    return g;
  }

  // Raw per-node lists, kept as given except for sorting. The result may be
  // asymmetric or non-simple; validate() reports such defects.
  static Graph from_adjacency(std::vector<std::vector<NodeId>> adj,
                              std::optional<int> regular_degree = std::nullopt) {
    Graph g;
    g.n_ = static_cast<NodeId>(adj.size());
    g.offsets_.assign(adj.size() + 1, 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      for (NodeId u : adj[v])
        if (u >= g.n_) throw std::out_of_range("from_adjacency: neighbor out of range");
      std::sort(adj[v].begin(), adj[v].end());
      g.offsets_[v + 1] = g.offsets_[v] + adj[v].size();
    }
    g.adj_.reserve(g.offsets_.back());
    for (const auto& list : adj) g.adj_.insert(g.adj_.end(), list.begin(), list.end());
    g.regular_degree_ = regular_degree;
    return g;
  }

  NodeId num_nodes() const { return n_; }

  // Undirected edge count; equals adjacency entries / 2 on symmetric graphs.
  std::uint64_t num_edges() const { return adj_.size() / 2; }

  std::uint64_t num_adjacency_entries() const { return adj_.size(); }

  int degree(NodeId v) const {
    check(v);
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    check(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    check(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Degree every node is supposed to have, when known at construction time.
  std::optional<int> regular_degree() const { return regular_degree_; }

  bool operator==(const Graph&) const = default;

 private:
  void check(NodeId v) const {
    if (v >= n_) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }

  NodeId n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> adj_;
  std::optional<int> regular_degree_;
};

struct ValidationReport {
  bool symmetric = true;
  bool simple = true;
  bool regular_ok = true;
  std::vector<std::string> violations;

  bool valid() const { return symmetric && simple && regular_ok; }
};

inline constexpr std::size_t kMaxViolationMessages = 32;

inline ValidationReport validate(const Graph& g) {
  ValidationReport rep;
  auto note = [&rep](std::string msg) {
    if (rep.violations.size() < kMaxViolationMessages) rep.violations.push_back(std::move(msg));
  };
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      NodeId u = nb[i];
      if (u == v) {
        rep.simple = false;
        note("self-loop at " + std::to_string(v));
      }
      if (i + 1 < nb.size() && nb[i + 1] == u) {
        rep.simple = false;
        note("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
      }
      if (u != v && !g.has_edge(u, v)) {
        rep.symmetric = false;
        note("missing reverse edge " + std::to_string(u) + "-" + std::to_string(v));
      }
    }
    if (g.regular_degree() && g.degree(v) != *g.regular_degree()) {
      rep.regular_ok = false;
      note("degree " + std::to_string(g.degree(v)) + " at " + std::to_string(v) +
           ", expected " + std::to_string(*g.regular_degree()));
    }
  }
  return rep;
}

}  // namespace xp
