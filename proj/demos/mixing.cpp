// Shows the walk distribution on an expander converging to uniform at the
// rate (lambda/d)^k, next to the closed-form deviation bound.
#include <cmath>
#include <cstdio>

#include "xp/bounds.hpp"
#include "xp/generators.hpp"
#include "xp/spectral.hpp"

int main() {
  const std::uint32_t n = 512;
  const int d = 8;
  xp::Graph g = xp::gen_random_regular(n, d, 3);
  double lambda = xp::lambda_exact(g).lambda_est;
  xp::ExpanderParams ep(n, d, lambda);
  std::printf("n = %u, d = %d, lambda = %.4f\n", n, d, lambda);
  std::printf("%4s  %12s  %12s\n", "k", "max|p-1/n|", "bound");
  for (int k = 0; k <= 12; k += 2) {
    auto p = xp::exact_walk_distribution(g, 0, k);
    double dev = 0;
    for (double x : p) dev = std::max(dev, std::abs(x - 1.0 / n));
    std::printf("%4d  %12.3e  %12.3e\n", k, dev, xp::mixing_deviation_bound(ep, k));
  }
  return 0;
}
