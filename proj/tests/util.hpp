#pragma once

#include <vector>

#include "xp/graph.hpp"

namespace xp::testutil {

inline Graph cycle_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, edges, 2);
}

inline Graph complete_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges, static_cast<int>(n) - 1);
}

inline Graph path_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

// 3-regular, diameter 2, adjacency spectrum {3, 1^5, (-2)^4}.
inline Graph petersen() {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},   // outer cycle
                             {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},   // inner pentagram
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};  // spokes
  return Graph::from_edges(10, edges, 3);
}

// Two disjoint triangles.
inline Graph two_triangles() {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph::from_edges(6, edges, 2);
}

}  // namespace xp::testutil
