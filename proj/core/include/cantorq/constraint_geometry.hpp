#pragma once

// The constraint family S_j = {(x, x + 1/j) : -1/j <= x <= 1} and the
// perpendicular-foot bijection U_j : S_j -> R, U_j(x, x + 1/j) = 2x + 1/j.

#include "cantorq/cantor_measure.hpp"
#include "cantorq/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cantorq {

/// A point of S_j, stored as (j, x). The ordinate x + 1/j is derived, never
/// stored, so a ConstraintPoint can only ever sit on its segment.
class ConstraintPoint {
 public:
  /// Throws InvalidArgument unless j >= 1 and -1/j <= x <= 1.
  ConstraintPoint(std::uint32_t j, Rational x);

  std::uint32_t index() const { return j_; }
  const Rational& x() const { return x_; }
  Rational y() const { return x_ + Rational(1, static_cast<long>(j_)); }
  PlanePoint to_plane() const { return {x_, y()}; }

  friend bool operator==(const ConstraintPoint&, const ConstraintPoint&) = default;

 private:
  std::uint32_t j_;
  Rational x_;
};

/// A constrained codebook on S_n with strictly increasing abscissas inside the
/// feasible window, plus the split set that produced it (empty if none).
class PointSet {
 public:
  /// Sorts `points` by abscissa and validates: 1 <= card <= n, every point on
  /// S_n, abscissas distinct and inside feasible_window(n).
  PointSet(std::uint32_t n, std::vector<ConstraintPoint> points, std::vector<Word> split_set = {});

  std::uint32_t n() const { return n_; }
  // rvalue overloads return by value so `build_alpha(...).points()` in a
  // range-for does not dangle
  const std::vector<ConstraintPoint>& points() const& { return points_; }
  std::vector<ConstraintPoint> points() && { return std::move(points_); }
  const std::vector<Word>& split_set() const& { return split_set_; }
  std::vector<Word> split_set() && { return std::move(split_set_); }
  std::size_t size() const { return points_.size(); }

  std::vector<Rational> abscissas() const;

 private:
  std::uint32_t n_;
  std::vector<ConstraintPoint> points_;
  std::vector<Word> split_set_;
};

/// Squared distance from (x, 0) to p: (x - p.x)^2 + (p.x + 1/j)^2.
Rational rho(const Rational& x, const ConstraintPoint& p);

/// U_j(p) = 2 p.x + 1/j.
Rational u_forward(const ConstraintPoint& p);

/// U_j^-1(t) = point with abscissa (t - 1/j)/2. Throws InvalidArgument when t
/// is outside U_j(S_j) = [-1/j, 2 + 1/j]; no clamping.
ConstraintPoint u_inverse(std::uint32_t j, const Rational& t);

/// Abscissa range (-1/(2n), 1/2 - 1/(2n)) of U_n^-1([0, 1]).
std::pair<Rational, Rational> feasible_window(std::uint32_t n);

}  // namespace cantorq
