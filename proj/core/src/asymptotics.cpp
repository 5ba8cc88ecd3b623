#include "cantorq/asymptotics.hpp"

#include "cantorq/errors.hpp"
#include "cantorq/quantizer.hpp"

#include <cmath>

namespace cantorq {

namespace {

AsymptoticSample make_sample(std::uint64_t n, Rational v_n) {
  AsymptoticSample s;
  s.n = n;
  s.excess = v_n - v_infinity();
  s.v_n = std::move(v_n);
  const Rational n_sq = square(Rational(BigInt(static_cast<unsigned long>(n))));
  s.coeff_exact = n_sq * s.excess;
  s.coeff_estimate = s.coeff_exact.to_double();
  if (s.excess.sign() > 0 && s.excess < Rational(1))
    s.dim_estimate = 2.0 * std::log(static_cast<double>(n)) / -s.excess.log();
  return s;
}

std::vector<AsymptoticSample> power_of_two_samples(int max_level) {
  if (max_level < 1 || max_level > 62)
    throw InvalidArgument("max level must be in 1..62, got " + std::to_string(max_level));
  std::vector<AsymptoticSample> out;
  out.reserve(static_cast<std::size_t>(max_level));
  for (int level = 1; level <= max_level; ++level) out.push_back(sample_at_level(level));
  return out;
}

}  // namespace

Rational v_infinity() { return Rational(3, 16); }

AsymptoticSample sample_at(std::uint64_t n) { return make_sample(n, optimal_error(n)); }

AsymptoticSample sample_at_level(int level) {
  if (level < 0 || level > 62) throw InvalidArgument("level must be in 0..62");
  return make_sample(std::uint64_t{1} << level, optimal_error_power_of_two(level));
}

std::vector<AsymptoticSample> dimension_sequence(int max_level) {
  return power_of_two_samples(max_level);
}

std::vector<AsymptoticSample> coefficient_sequence(int max_level) {
  return power_of_two_samples(max_level);
}

}  // namespace cantorq
