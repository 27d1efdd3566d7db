#pragma once

#include "critgen/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace critgen {

/// Deterministic random source. All randomized code in the project draws
/// through this wrapper so results depend only on the seed, never on
/// platform-specific std::*_distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Derives an independent stream for a work unit (restart, batch, ...).
  static Rng child(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed, stream));
  }

  std::uint64_t u64() { return engine_(); }

  bool coin() { return (u64() >> 63) != 0; }

  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = u64();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Exact rational lo + (hi-lo) * j/2^bits with j uniform in [0, 2^bits].
  Rat rat_in(const Rat& lo, const Rat& hi, unsigned bits = 16) {
    const std::uint64_t steps = std::uint64_t(1) << bits;
    Rat t(Int(static_cast<unsigned long>(below(steps + 1))), pow2(bits));
    t.canonicalize();
    Rat r = lo + (hi - lo) * t;
    r.canonicalize();
    return r;
  }

 private:
  // splitmix64 finalizer over the combined words.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace critgen
