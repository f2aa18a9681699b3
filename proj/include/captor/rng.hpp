#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace captor::montecarlo {

// SplitMix64 (Steele/Lea/Flood splittable generators). One independent
// stream per walker, keyed by (seed, stream id), so estimates do not depend
// on scheduling or thread count.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL +
                            0x243F6A8885A308D3ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // uniform in [0, 1)
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal, Marsaglia polar method
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  // uniform direction on the unit sphere
  void fill_unit_vector(std::span<double> v) {
    for (;;) {
      double norm2 = 0.0;
      for (double& x : v) {
        x = next_gaussian();
        norm2 += x * x;
      }
      if (norm2 > 1e-24) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& x : v) x *= inv;
        return;
      }
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace captor::montecarlo
