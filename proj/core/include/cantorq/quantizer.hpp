#pragma once

// Closed-form constrained optimal sets alpha_n(I) on S_n and their errors.
//
// For 2^l <= n < 2^{l+1} and a split set I of n - 2^l words of length l,
// alpha_n(I) places one point U_n^-1(a(w)) for every unsplit word w and two
// points U_n^-1(a(w1)), U_n^-1(a(w2)) for every w in I. Every admissible I
// gives an optimal set with the same error.

#include "cantorq/cantor_measure.hpp"
#include "cantorq/constraint_geometry.hpp"
#include "cantorq/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace cantorq {

struct DistortionReport {
  std::uint32_t n = 0;
  Rational total;
  Rational variance_term;
  Rational a_term;
  std::vector<Word> split_set;
};

struct UnconstrainedBaseline {
  std::vector<Rational> means;  // U_n(alpha_n(I)), increasing
  Rational error;
};

/// floor(log2 n); the l with 2^l <= n < 2^{l+1}. Requires n >= 1.
int level_of(std::uint64_t n);

/// Throws InvalidArgument unless I is an admissible split set for n: words of
/// length level_of(n), pairwise distinct, exactly n - 2^l of them (and empty
/// for n = 1).
void validate_split_set(std::uint32_t n, const std::vector<Word>& split_set);

/// The lexicographically smallest admissible split set.
std::vector<Word> canonical_split_set(std::uint32_t n);

/// Calls `visit` for every admissible split set of n, in lexicographic order.
void for_each_split_set(std::uint32_t n, const std::function<void(const std::vector<Word>&)>& visit);

/// binomial(2^l, n - 2^l).
BigInt count_optimal_sets(std::uint32_t n);

/// alpha_n(I). For n = 1 (I empty) returns the single point U_1^-1(1/2) =
/// (-1/4, 3/4).
PointSet build_alpha(std::uint32_t n, const std::vector<Word>& split_set);

/// A = sum over the cells of alpha_n(I) of P(cell) * rho(a(cell), U_n^-1(a(cell))),
/// summed directly.
Rational a_term(std::uint32_t n, const std::vector<Word>& split_set);

/// 18^-l * V * (2^{l+1} - n + (n - 2^l)/9): the unconstrained n-means error.
Rational unconstrained_error(std::uint64_t n);

/// Exact V(P; alpha_n(I)) split into the unconstrained term and A.
DistortionReport distortion_closed_form(std::uint32_t n, const std::vector<Word>& split_set);

/// The unconstrained optimal n-means U_n(alpha_n(I)) and their error.
UnconstrainedBaseline unconstrained_baseline(std::uint32_t n, const std::vector<Word>& split_set);

/// A at n = 2^l: (2^l + 1)/(2 * 4^l) + (3 * 9^l - 1)/(16 * 9^l).
Rational a_term_power_of_two(int level);

/// V_{2^l} = (2^{3-2l} + 2^{3-l} + 9^-l + 3) / 16.
Rational optimal_error_power_of_two(int level);

/// V_n for any n >= 1 in O(1) rational operations.
///
/// On S_n, rho(x, p) = (U_n(p) - x)^2 / 2 + (x + 1/n)^2 / 2, so the
/// constrained problem is half the unconstrained one plus a constant:
/// V_n = unconstrained_error(n)/2 + 3/16 + 1/(2n) + 1/(2n^2).
Rational optimal_error(std::uint64_t n);

}  // namespace cantorq
