#pragma once

#include <cmath>
#include <cstdint>

#include "xp/errors.hpp"

namespace xp {

// Splittable 64-bit generator (splitmix64). All sampling helpers below avoid
// std::*_distribution so that draws are byte-identical across platforms and
// standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Stateless finalizer used to derive independent child streams from one seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x6a09e667f3bcc909ULL));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

// Unbiased integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
  if (bound == 0) throw parameter_error("uniform_below: bound must be positive");
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Double in [0,1) with 53 random bits.
inline double uniform_real01(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Double in (0,1]; safe to pass to log().
inline double uniform_real_pos(SplitMix64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

inline bool bernoulli(SplitMix64& rng, double p) {
  return uniform_real01(rng) < p;
}

// Number of failures before the first success of a Bernoulli(p) sequence,
// drawn by inversion. Saturates at 2^64-1 when p is vanishingly small.
inline std::uint64_t geometric_skip(SplitMix64& rng, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw parameter_error("geometric_skip: p must be in (0,1]");
  if (p == 1.0) return 0;
  double u = uniform_real_pos(rng);
  double x = std::floor(std::log(u) / std::log1p(-p));
  if (!(x >= 0.0)) return 0;
  if (x >= 1.8e19) return ~std::uint64_t{0};
  return static_cast<std::uint64_t>(x);
}

}  // namespace xp
