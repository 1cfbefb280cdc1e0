#pragma once

// Portable pseudo-random draws. std::mt19937_64 is fully specified, but the
// standard distributions are not, so uniform draws are done by hand.

#include <cstdint>
#include <random>
#include <vector>

namespace orbsmooth {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform in {0, ..., n - 1}; n > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)); }
  int integer(int lo, int hi) { return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1))); }

  /// Uniform point in the ball of the given radius around the origin (rejection).
  std::vector<double> in_ball(std::size_t dim, double radius) {
    std::vector<double> x(dim);
    while (true) {
      double r2 = 0.0;
      for (auto& v : x) {
        v = uniform(-1.0, 1.0);
        r2 += v * v;
      }
      if (r2 <= 1.0) break;
    }
    for (auto& v : x) v *= radius;
    return x;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbsmooth
