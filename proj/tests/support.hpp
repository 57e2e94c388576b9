#pragma once

#include "stechkin/trig_poly.hpp"

#include <cmath>
#include <cstdint>

namespace test_support {

// SplitMix64: tiny, seedable and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Random polynomial of exact stored degree n with coefficients in [-1, 1] / max(j, 1).
  stechkin::TrigPolyd trig_poly(int n) {
    stechkin::TrigPolyd p(n);
    for (int j = 0; j <= n; ++j) {
      const double s = 1.0 / std::max(j, 1);
      p.a()(j) = uniform(-1.0, 1.0) * s;
      if (j > 0) p.b()(j) = uniform(-1.0, 1.0) * s;
    }
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace test_support
