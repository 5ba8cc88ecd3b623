#include "cantorq/quantizer.hpp"

#include "cantorq/errors.hpp"

#include <algorithm>
#include <set>

namespace cantorq {

namespace {

std::uint64_t pow2u(int level) { return std::uint64_t{1} << level; }

std::uint32_t split_count(std::uint32_t n) {
  return static_cast<std::uint32_t>(n - pow2u(level_of(n)));
}

// rho(a, U_n^-1(a)) weighted by `mass`.
Rational cell_a_term(std::uint32_t n, const Word& w, const Rational& mass) {
  const Rational a = centroid(w);
  return mass * rho(a, u_inverse(n, a));
}

}  // namespace

int level_of(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("n must be >= 1");
  int level = 0;
  while (n >>= 1) ++level;
  return level;
}

void validate_split_set(std::uint32_t n, const std::vector<Word>& split_set) {
  const int level = level_of(n);
  const std::uint32_t expected = split_count(n);
  if (split_set.size() != expected)
    throw InvalidArgument("split set for n=" + std::to_string(n) + " must hold " +
                          std::to_string(expected) + " words, got " +
                          std::to_string(split_set.size()));
  std::set<Word> seen;
  for (const auto& w : split_set) {
    if (w.size() != static_cast<std::size_t>(level))
      throw InvalidArgument("split word '" + w.letters() + "' must have length " +
                            std::to_string(level));
    if (!seen.insert(w).second) throw InvalidArgument("duplicate split word '" + w.letters() + "'");
  }
}

std::vector<Word> canonical_split_set(std::uint32_t n) {
  const auto words = words_of_length(level_of(n));
  return {words.begin(), words.begin() + split_count(n)};
}

void for_each_split_set(std::uint32_t n,
                        const std::function<void(const std::vector<Word>&)>& visit) {
  const auto words = words_of_length(level_of(n));
  const std::size_t m = split_count(n);
  const std::size_t total = words.size();
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  std::vector<Word> chosen(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) chosen[i] = words[pick[i]];
    visit(chosen);
    // next combination in lexicographic order
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == total - m + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

BigInt count_optimal_sets(std::uint32_t n) {
  const int level = level_of(n);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), pow2u(level), split_count(n));
  return out;
}

PointSet build_alpha(std::uint32_t n, const std::vector<Word>& split_set) {
  validate_split_set(n, split_set);
  if (n == 1) return PointSet(1, {u_inverse(1, mean())});

  const std::set<Word> split(split_set.begin(), split_set.end());
  std::vector<ConstraintPoint> points;
  points.reserve(n);
  for (const auto& w : words_of_length(level_of(n))) {
    if (split.count(w)) {
      points.push_back(u_inverse(n, centroid(w.child(1))));
      points.push_back(u_inverse(n, centroid(w.child(2))));
    } else {
      points.push_back(u_inverse(n, centroid(w)));
    }
  }
  return PointSet(n, std::move(points), {split.begin(), split.end()});
}

Rational a_term(std::uint32_t n, const std::vector<Word>& split_set) {
  validate_split_set(n, split_set);
  const int level = level_of(n);
  const std::set<Word> split(split_set.begin(), split_set.end());
  const Rational whole = pow2(-level);
  const Rational half = pow2(-level - 1);
  Rational sum;
  for (const auto& w : words_of_length(level)) {
    if (split.count(w)) {
      sum += cell_a_term(n, w.child(1), half);
      sum += cell_a_term(n, w.child(2), half);
    } else {
      sum += cell_a_term(n, w, whole);
    }
  }
  return sum;
}

Rational unconstrained_error(std::uint64_t n) {
  const int level = level_of(n);
  const Rational base(BigInt(static_cast<unsigned long>(pow2u(level))));
  const Rational count(BigInt(static_cast<unsigned long>(n)));
  const Rational bracket = Rational(2) * base - count + (count - base) * Rational(1, 9);
  return Rational(BigInt(1), ipow(18, static_cast<unsigned long>(level))) * variance() * bracket;
}

DistortionReport distortion_closed_form(std::uint32_t n, const std::vector<Word>& split_set) {
  DistortionReport report;
  report.n = n;
  report.variance_term = unconstrained_error(n);
  report.a_term = a_term(n, split_set);
  report.total = report.variance_term + report.a_term;
  report.split_set = split_set;
  std::sort(report.split_set.begin(), report.split_set.end());
  return report;
}

UnconstrainedBaseline unconstrained_baseline(std::uint32_t n, const std::vector<Word>& split_set) {
  const PointSet alpha = build_alpha(n, split_set);
  UnconstrainedBaseline out;
  out.means.reserve(alpha.size());
  for (const auto& p : alpha.points()) out.means.push_back(u_forward(p));
  out.error = unconstrained_error(n);
  return out;
}

Rational a_term_power_of_two(int level) {
  if (level < 0) throw InvalidArgument("level must be >= 0");
  const auto l = static_cast<unsigned long>(level);
  const Rational nine_l(ipow(9, l));
  return Rational(ipow(2, l) + 1, 2 * ipow(4, l)) +
         (Rational(3) * nine_l - Rational(1)) / (Rational(16) * nine_l);
}

Rational optimal_error_power_of_two(int level) {
  if (level < 0) throw InvalidArgument("level must be >= 0");
  const Rational nine_inv = pow(Rational(9), -level);
  return (pow2(3 - 2L * level) + pow2(3 - level) + nine_inv + Rational(3)) * Rational(1, 16);
}

Rational optimal_error(std::uint64_t n) {
  const Rational inv_n(BigInt(1), BigInt(static_cast<unsigned long>(n)));
  const Rational half(1, 2);
  return unconstrained_error(n) * half + Rational(3, 16) + inv_n * half + square(inv_n) * half;
}

}  // namespace cantorq
