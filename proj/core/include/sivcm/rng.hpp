#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace sivcm {

/// Seedable, splittable pseudo-random stream. Substreams are derived by
/// folding a path of tags into the seed, so each (seed, replicate, purpose)
/// triple maps to an independent deterministic sequence regardless of the
/// order streams are consumed in. Stepping is SplitMix64.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kPhi)) {}

  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
      : RngStream(seed) {
    for (std::uint64_t tag : path) {
      state_ = mix(state_ ^ mix(tag + kPhi));
    }
  }

  std::uint64_t next_u64() {
    state_ += kPhi;
    return mix(state_);
  }

  /// Uniform on (0, 1]: 53-bit mantissa, never exactly zero.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via the Box-Muller transform (pairs cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double chisq1() {
    const double z = normal();
    return z * z;
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sivcm
