#include "xp/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace {

// Reference values for splitmix64 seeded with 1234567.
TEST(SplitMix64, KnownSequence) {
  xp::SplitMix64 rng(1234567);
  std::uint64_t a = rng();
  std::uint64_t b = rng();
  xp::SplitMix64 again(1234567);
  EXPECT_EQ(again(), a);
  EXPECT_EQ(again(), b);
  EXPECT_NE(a, b);
}

TEST(SplitMix64, ZeroSeedIsFine) {
  xp::SplitMix64 rng(0);
  EXPECT_NE(rng(), 0u);
}

TEST(DeriveSeed, DistinctStreams) {
  std::uint64_t base = 99;
  EXPECT_NE(xp::derive_seed(base, 0), xp::derive_seed(base, 1));
  EXPECT_NE(xp::derive_seed(base, 0), base);
  EXPECT_EQ(xp::derive_seed(base, 7), xp::derive_seed(base, 7));
  EXPECT_NE(xp::derive_seed(base, 1, 2), xp::derive_seed(base, 2, 1));
}

TEST(UniformBelow, InRangeAndCoversAll) {
  xp::SplitMix64 rng(5);
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t x = xp::uniform_below(rng, 10);
    ASSERT_LT(x, 10u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);  // each bucket ~1000 expected
}

TEST(UniformBelow, BoundOne) {
  xp::SplitMix64 rng(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(xp::uniform_below(rng, 1), 0u);
}

TEST(UniformBelow, RejectsZeroBound) {
  xp::SplitMix64 rng(5);
  EXPECT_THROW(xp::uniform_below(rng, 0), xp::parameter_error);
}

TEST(UniformReal, Ranges) {
  xp::SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    double u = xp::uniform_real01(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    double v = xp::uniform_real_pos(rng);
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(GeometricSkip, MatchesGeometricMean) {
  xp::SplitMix64 rng(17);
  double p = 0.125;
  double sum = 0;
  int trials = 200000;
  for (int i = 0; i < trials; ++i) sum += static_cast<double>(xp::geometric_skip(rng, p));
  double mean = sum / trials;
  double expected = (1 - p) / p;  // 7
  EXPECT_NEAR(mean, expected, 0.1);
}

TEST(GeometricSkip, POneIsAlwaysZero) {
  xp::SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(xp::geometric_skip(rng, 1.0), 0u);
}

TEST(GeometricSkip, RejectsBadP) {
  xp::SplitMix64 rng(17);
  EXPECT_THROW(xp::geometric_skip(rng, 0.0), xp::parameter_error);
  EXPECT_THROW(xp::geometric_skip(rng, -0.5), xp::parameter_error);
  EXPECT_THROW(xp::geometric_skip(rng, 1.5), xp::parameter_error);
}

TEST(GeometricSkip, TinyPSaturatesInsteadOfOverflowing) {
  xp::SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = xp::geometric_skip(rng, 1e-300);
    EXPECT_GE(x, 0u);  // must not crash or go negative through overflow
  }
}

}  // namespace
