#include "cantorq/constraint_geometry.hpp"

#include "cantorq/errors.hpp"

#include <algorithm>

namespace cantorq {

namespace {

Rational inv(std::uint32_t j) { return Rational(1, static_cast<long>(j)); }

}  // namespace

ConstraintPoint::ConstraintPoint(std::uint32_t j, Rational x) : j_(j), x_(std::move(x)) {
  if (j_ == 0) throw InvalidArgument("constraint index must be >= 1");
  if (x_ < -inv(j_) || x_ > Rational(1))
    throw InvalidArgument("abscissa " + x_.to_string() + " is not on S_" + std::to_string(j_));
}

PointSet::PointSet(std::uint32_t n, std::vector<ConstraintPoint> points, std::vector<Word> split_set)
    : n_(n), points_(std::move(points)), split_set_(std::move(split_set)) {
  if (n_ == 0) throw InvalidArgument("point set size n must be >= 1");
  if (points_.empty() || points_.size() > n_)
    throw InvalidArgument("point set on S_" + std::to_string(n_) + " must hold 1.." +
                          std::to_string(n_) + " points, got " + std::to_string(points_.size()));
  std::sort(points_.begin(), points_.end(),
            [](const ConstraintPoint& a, const ConstraintPoint& b) { return a.x() < b.x(); });
  const auto [lo, hi] = feasible_window(n_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.index() != n_)
      throw InvalidArgument("point on S_" + std::to_string(p.index()) + " in a set on S_" +
                            std::to_string(n_));
    if (p.x() < lo || p.x() > hi)
      throw InvalidArgument("abscissa " + p.x().to_string() + " outside the feasible window [" +
                            lo.to_string() + ", " + hi.to_string() + "]");
    if (i > 0 && points_[i - 1].x() == p.x())
      throw InvalidArgument("duplicate abscissa " + p.x().to_string());
  }
}

std::vector<Rational> PointSet::abscissas() const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.x());
  return out;
}

Rational rho(const Rational& x, const ConstraintPoint& p) { return rho(x, p.to_plane()); }

Rational u_forward(const ConstraintPoint& p) { return Rational(2) * p.x() + inv(p.index()); }

ConstraintPoint u_inverse(std::uint32_t j, const Rational& t) {
  if (j == 0) throw InvalidArgument("constraint index must be >= 1");
  const Rational x = (t - inv(j)) * Rational(1, 2);
  if (x < -inv(j) || x > Rational(1))
    throw InvalidArgument("t = " + t.to_string() + " is outside the image of S_" +
                          std::to_string(j));
  return ConstraintPoint(j, x);
}

std::pair<Rational, Rational> feasible_window(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("n must be >= 1");
  const Rational half_inv(1, 2 * static_cast<long>(n));
  return {-half_inv, Rational(1, 2) - half_inv};
}

}  // namespace cantorq
