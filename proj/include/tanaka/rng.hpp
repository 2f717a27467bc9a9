#pragma once

#include <cstdint>
#include <random>

#include "tanaka/rational.hpp"

namespace tanaka {

/// Deterministic sampler of small-height rationals. Uses mt19937_64 with raw
/// modular reduction only, so sequences are identical across platforms.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed, long height = 3)
      : eng_(seed), height_(height) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  /// Rational with |numerator| <= height and 1 <= denominator <= height.
  Rational rational() {
    const long num = integer(-height_, height_);
    const long den = integer(1, height_);
    return Rational(num, den);
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
  long height_;
};

}  // namespace tanaka
