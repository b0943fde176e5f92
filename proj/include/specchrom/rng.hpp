#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace specchrom {

// Seeded generator with a fully specified draw sequence. std::mt19937_64's
// output is fixed by the standard; the distributions in <random> are not, so
// the conversions to doubles are done here by hand.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) from the top 53 bits of one draw.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, k). One draw.
  std::uint64_t below(std::uint64_t k) {
    return static_cast<std::uint64_t>(uniform01() * static_cast<double>(k));
  }

  /// Standard normal via Box-Muller; two draws per call, no caching.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; independent per-trial seeds from (base seed, index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace specchrom
