// Generates a random regular graph and compares full BFS, bidirectional BFS
// and BFS+walks on the same s-t pair, printing the query bill for each.
#include <cinttypes>
#include <cstdio>

#include "xp/generators.hpp"
#include "xp/pathfind.hpp"
#include "xp/spectral.hpp"

int main() {
  const std::uint32_t n = 1 << 14;
  const int d = 8;
  xp::Graph g = xp::gen_random_regular(n, d, 42);
  xp::SpectralReport spec = xp::lambda_power(g, 1e-5);
  std::printf("n = %u, d = %d, lambda = %.4f (ratio %.4f, ramanujan: %s)\n", n, d,
              spec.lambda_est, spec.ratio, spec.is_ramanujan ? "yes" : "no");

  const xp::NodeId s = 0, t = n - 1;

  xp::QueryOracle full_oracle(g);
  auto dist = xp::full_bfs(full_oracle, s);
  std::printf("full BFS:  dist %u, %" PRIu64 " queries\n", dist[t], full_oracle.total_queries());

  xp::QueryOracle bi_oracle(g);
  xp::PathResult bi = xp::bidirectional_bfs(bi_oracle, s, t);
  std::printf("bibfs:     dist %u, %" PRIu64 " queries, %" PRIu64 " visited\n", *bi.distance,
              bi.query_count, bi.visited_count);

  xp::PathResult walks = xp::bfs_plus_walks(g, s, t, spec.lambda_est, 0.1, 7);
  if (walks.found())
    std::printf("bfs+walks: dist %u, %" PRIu64 " queries, %" PRIu64 " visited\n", *walks.distance,
                walks.query_count, walks.visited_count);
  else
    std::printf("bfs+walks: no path found within budget\n");
  return 0;
}
