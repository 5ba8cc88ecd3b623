#pragma once

// Test-only oracles. They reach the same quantities as the library through
// different paths (enumeration of basic intervals, exhaustive search) and must
// not call the code they check.

#include "cantorq/cantor_measure.hpp"
#include "cantorq/constraint_geometry.hpp"
#include "cantorq/errors.hpp"
#include "cantorq/oracle.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cantorq::testing {

/// Lower/upper bounds on int_[0,b] x^m dP from the level-k basic intervals:
/// intervals wholly left of b count fully; an interval containing b counts
/// for nothing in `lower` and fully in `upper`.
struct MomentBracket {
  Moments lower;
  Moments upper;
};

inline MomentBracket bracket_moments(const Rational& b, int level) {
  MomentBracket out;
  const Rational unit = pow2(-level);
  const Rational inner = pow(Rational(1, 9), level) * variance();
  for (const auto& w : words_of_length(level)) {
    const BasicInterval interval = basic_interval(w);
    if (interval.left >= b) continue;
    const Rational a = centroid(w);
    const Moments m{unit, unit * a, unit * (square(a) + inner)};
    const auto add = [](Moments& acc, const Moments& v) {
      acc.mass += v.mass;
      acc.first += v.first;
      acc.second += v.second;
    };
    add(out.upper, m);
    if (interval.right <= b) add(out.lower, m);
  }
  return out;
}

struct BruteForceOptimum {
  Rational value;
  std::vector<std::size_t> cuts;
  std::vector<Rational> abscissas;
};

/// Exhaustive search over every split of the 2^level intervals into n
/// consecutive groups; each group is served by U_n^-1 of its mean and scored
/// with the self-similar formula per interval. Ties keep the
/// lexicographically smallest cut vector (enumeration order).
inline BruteForceOptimum brute_force_partition(std::uint32_t n, int level) {
  const auto words = words_of_length(level);
  const std::size_t count = words.size();
  const Rational unit = pow2(-level);
  std::vector<Rational> centroids;
  for (const auto& w : words) centroids.push_back(centroid(w));

  const auto group_cost = [&](std::size_t lo, std::size_t hi, Rational& abscissa) {
    Rational sum;
    for (std::size_t m = lo; m < hi; ++m) sum += centroids[m];
    const ConstraintPoint p = u_inverse(n, sum / Rational(static_cast<long>(hi - lo)));
    abscissa = p.x();
    Rational cost;
    for (std::size_t m = lo; m < hi; ++m) cost += unit * self_similar_distortion(words[m], p.to_plane());
    return cost;
  };

  std::optional<BruteForceOptimum> best;
  std::vector<std::size_t> cuts;
  const std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (cuts.size() + 1 == n) {
      BruteForceOptimum candidate;
      std::size_t lo = 0;
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t hi = g < cuts.size() ? cuts[g] : count;
        Rational x;
        candidate.value += group_cost(lo, hi, x);
        candidate.abscissas.push_back(x);
        lo = hi;
      }
      candidate.cuts = cuts;
      if (!best || candidate.value < best->value) best = std::move(candidate);
      return;
    }
    const std::size_t remaining = n - 1 - cuts.size();
    for (std::size_t c = from; c + remaining <= count; ++c) {
      cuts.push_back(c);
      recurse(c + 1);
      cuts.pop_back();
    }
  };
  recurse(1);
  return *best;
}

}  // namespace cantorq::testing
