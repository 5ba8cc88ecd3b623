#pragma once

// Seeded generators for property-style tests.

#include "cantorq/rational.hpp"

#include <cstdint>
#include <random>

namespace cantorq::testing {

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish rational in [lo, hi] with denominator up to max_den.
  Rational in(const Rational& lo, const Rational& hi, long max_den = 997) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng_);
    std::uniform_int_distribution<long> num(0, d);
    return lo + (hi - lo) * Rational(num(rng_), d);
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cantorq::testing
