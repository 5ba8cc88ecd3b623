#pragma once

// Limits of the constrained errors: V_inf = 3/16, the dimension estimates
// 2 log n / -log(V_n - V_inf) -> 2, and the scaled excess n^2 (V_n - V_inf),
// which diverges. Exact rationals are carried to the last step; only the
// logarithms are floating point.

#include "cantorq/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cantorq {

struct AsymptoticSample {
  std::uint64_t n = 0;
  Rational v_n;
  Rational excess;                      // v_n - 3/16
  std::optional<double> dim_estimate;   // 2 ln n / -ln(excess), only when excess < 1
  Rational coeff_exact;                 // n^2 * excess
  double coeff_estimate = 0.0;
};

/// lim V_n = 3/16.
Rational v_infinity();

/// Sample at any n >= 1, from the general closed form.
AsymptoticSample sample_at(std::uint64_t n);

/// Sample at n = 2^level, from the power-of-two closed form.
AsymptoticSample sample_at_level(int level);

/// Samples at n = 2^l for l = 1..max_level (max_level in 1..62).
std::vector<AsymptoticSample> dimension_sequence(int max_level);

/// Same samples as dimension_sequence; callers read coeff_exact/coeff_estimate.
std::vector<AsymptoticSample> coefficient_sequence(int max_level);

}  // namespace cantorq
