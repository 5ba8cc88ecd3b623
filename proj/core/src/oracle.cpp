#include "cantorq/oracle.hpp"

#include "cantorq/cantor_measure.hpp"
#include "cantorq/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

namespace cantorq {

namespace {

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;

// C(b) = offset + linear * C(b') for one refinement step.
struct AffineStep {
  Vec3 offset;
  Mat3 linear;
};

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k <= i; ++k) out[i] += m[i][k] * v[k];  // lower triangular
  return out;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = j; k <= i; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Vec3 vec_add(Vec3 a, const Vec3& b) {
  for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

// Moments of P over J_1 = [0, 1/3].
Vec3 left_half() { return {Rational(1, 2), Rational(1, 12), Rational(1, 48)}; }
Vec3 whole() { return {Rational(1), mean(), second_moment()}; }

const AffineStep& left_step() {
  // F = F'/2, G = G'/6, H = H'/18
  static const AffineStep step{
      {Rational(0), Rational(0), Rational(0)},
      {{{Rational(1, 2), Rational(0), Rational(0)},
        {Rational(0), Rational(1, 6), Rational(0)},
        {Rational(0), Rational(0), Rational(1, 18)}}}};
  return step;
}

const AffineStep& right_step() {
  // x = (y + 2)/3 on J_2:
  // F = 1/2 + F'/2, G = 1/12 + (G' + 2F')/6, H = 1/48 + (H' + 4G' + 4F')/18
  static const AffineStep step{
      left_half(),
      {{{Rational(1, 2), Rational(0), Rational(0)},
        {Rational(1, 3), Rational(1, 6), Rational(0)},
        {Rational(2, 9), Rational(2, 9), Rational(1, 18)}}}};
  return step;
}

Moments to_moments(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

Moments cumulative_moments(const Rational& b, int max_depth) {
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);

  std::vector<const AffineStep*> path;
  std::map<Rational, std::size_t> seen;
  Rational state = b;
  Vec3 tail;
  for (int depth = 0;; ++depth) {
    if (state.sign() <= 0) {
      tail = {};
      break;
    }
    if (state >= Rational(1)) {
      tail = whole();
      break;
    }
    if (state >= third && state <= two_thirds) {
      tail = left_half();
      break;
    }
    if (const auto it = seen.find(state); it != seen.end()) {
      // Periodic address: C = offset + linear * C over one period.
      Vec3 offset;
      Mat3 linear{{{Rational(1), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)}}};
      for (std::size_t i = it->second; i < path.size(); ++i) {
        offset = vec_add(offset, mat_vec(linear, path[i]->offset));
        linear = multiply(linear, path[i]->linear);
      }
      // (I - linear) is lower triangular with diagonal 1 - 2^-p, 1 - 6^-p, 1 - 18^-p.
      tail[0] = offset[0] / (Rational(1) - linear[0][0]);
      tail[1] = (offset[1] + linear[1][0] * tail[0]) / (Rational(1) - linear[1][1]);
      tail[2] = (offset[2] + linear[2][0] * tail[0] + linear[2][1] * tail[1]) /
                (Rational(1) - linear[2][2]);
      path.resize(it->second);
      break;
    }
    if (depth >= max_depth)
      throw DepthExceeded("boundary " + b.to_string() +
                              " lies in the Cantor set and its address does not close within " +
                              std::to_string(max_depth) + " levels",
                          max_depth);
    seen.emplace(state, path.size());
    if (state < third) {
      path.push_back(&left_step());
      state = state * Rational(3);
    } else {
      path.push_back(&right_step());
      state = state * Rational(3) - Rational(2);
    }
  }

  for (auto it = path.rbegin(); it != path.rend(); ++it)
    tail = vec_add((*it)->offset, mat_vec((*it)->linear, tail));
  return to_moments(tail);
}

std::vector<Rational> projected_boundaries(std::span<const ConstraintPoint> points) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points.size(); ++i)
    out.push_back((u_forward(points[i - 1]) + u_forward(points[i])) * Rational(1, 2));
  return out;
}

std::vector<Rational> planar_boundaries(std::span<const ConstraintPoint> points) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const PlanePoint p = points[i - 1].to_plane();
    const PlanePoint q = points[i].to_plane();
    if (p.x == q.x) throw InvalidArgument("planar bisector needs distinct abscissas");
    // (x - p.x)^2 + p.y^2 = (x - q.x)^2 + q.y^2
    out.push_back((square(q.x) + square(q.y) - square(p.x) - square(p.y)) /
                  (Rational(2) * (q.x - p.x)));
  }
  return out;
}

std::vector<Moments> cell_moments(std::span<const Rational> boundaries, int max_depth) {
  std::vector<Moments> cumulative;
  cumulative.reserve(boundaries.size() + 2);
  cumulative.push_back({});
  for (const auto& b : boundaries) cumulative.push_back(cumulative_moments(b, max_depth));
  cumulative.push_back(to_moments(whole()));

  std::vector<Moments> cells;
  cells.reserve(boundaries.size() + 1);
  for (std::size_t i = 1; i < cumulative.size(); ++i)
    cells.push_back(cumulative[i] - cumulative[i - 1]);
  return cells;
}

std::vector<Rational> cell_masses_by_counting(std::span<const Rational> boundaries, int level) {
  std::vector<Rational> masses(boundaries.size() + 1);
  const Rational unit = pow2(-level);
  for (const auto& w : words_of_length(level)) {
    const BasicInterval interval = basic_interval(w);
    // Cell index = number of boundaries at or left of the interval.
    std::size_t cell = 0;
    while (cell < boundaries.size() && boundaries[cell] <= interval.left) ++cell;
    if (cell < boundaries.size() && boundaries[cell] < interval.right)
      throw InvalidArgument("boundary " + boundaries[cell].to_string() +
                            " cuts the level-" + std::to_string(level) + " interval [" +
                            interval.left.to_string() + ", " + interval.right.to_string() + "]");
    masses[cell] += unit;
  }
  return masses;
}

namespace {

std::vector<ConstraintPoint> sorted_unique(std::uint32_t n, std::span<const ConstraintPoint> points) {
  if (points.empty()) throw InvalidArgument("distortion of an empty point set");
  std::vector<ConstraintPoint> out(points.begin(), points.end());
  for (const auto& p : out)
    if (p.index() != n)
      throw InvalidArgument("point on S_" + std::to_string(p.index()) + " evaluated as a set on S_" +
                            std::to_string(n));
  std::sort(out.begin(), out.end(),
            [](const ConstraintPoint& a, const ConstraintPoint& b) { return a.x() < b.x(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Rational exact_distortion(std::uint32_t n, std::span<const ConstraintPoint> points, int max_depth) {
  const auto unique = sorted_unique(n, points);
  const auto boundaries = projected_boundaries(unique);
  const auto cells = cell_moments(boundaries, max_depth);
  Rational total;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    // int_cell (x - a)^2 + b^2 dP
    const Rational& a = unique[i].x();
    const Rational b = unique[i].y();
    const Moments& m = cells[i];
    total += m.second - Rational(2) * a * m.first + (square(a) + square(b)) * m.mass;
  }
  return total;
}

Rational exact_distortion(const PointSet& points, int max_depth) {
  return exact_distortion(points.n(), points.points(), max_depth);
}

PointSet lloyd_step(const PointSet& points, int max_depth) {
  const auto boundaries = projected_boundaries(points.points());
  const auto cells = cell_moments(boundaries, max_depth);
  std::vector<ConstraintPoint> moved;
  moved.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].mass.is_zero())
      throw EmptyCell("Voronoi cell of point " + std::to_string(i) + " (abscissa " +
                          points.points()[i].x().to_string() + ") has zero mass",
                      i);
    moved.push_back(u_inverse(points.n(), cells[i].first / cells[i].mass));
  }
  return PointSet(points.n(), std::move(moved), points.split_set());
}

LloydRun lloyd_iterate(const PointSet& start, int max_steps, int max_depth) {
  LloydRun run{start, {exact_distortion(start, max_depth)}, 0, false};
  while (run.steps < max_steps) {
    PointSet next = lloyd_step(run.final_points, max_depth);
    ++run.steps;
    const bool fixed = next.points() == run.final_points.points();
    run.distortions.push_back(exact_distortion(next, max_depth));
    run.final_points = std::move(next);
    if (fixed) {
      run.converged = true;
      break;
    }
  }
  return run;
}

DpResult dp_optimal(std::uint32_t n, int level) {
  if (level < 0 || level > kDefaultLevelLimit)
    throw InvalidArgument("DP level must be in 0.." + std::to_string(kDefaultLevelLimit));
  const std::size_t count = std::size_t{1} << level;
  if (n == 0 || n > count)
    throw InvalidArgument("cannot split 2^" + std::to_string(level) + " intervals into " +
                          std::to_string(n) + " nonempty groups");

  // Level-k centroids are c_m / (2 * 3^k) with integer c_m, in left-to-right
  // order. Within-group cost in these integer units is S2 - S1^2 / size; the
  // remaining distortion terms do not depend on the partition.
  const auto numerators = centroid_numerators(level);
  std::vector<BigInt> s1(count + 1);
  std::vector<BigInt> s2(count + 1);
  std::vector<long double> s1f(count + 1);
  std::vector<long double> s2f(count + 1);
  for (std::size_t m = 0; m < count; ++m) {
    const BigInt c(static_cast<long>(numerators[m]));
    s1[m + 1] = s1[m] + c;
    s2[m + 1] = s2[m] + c * c;
    const auto cf = static_cast<long double>(numerators[m]);
    s1f[m + 1] = s1f[m] + cf;
    s2f[m + 1] = s2f[m] + cf * cf;
  }
  const auto cost_f = [&](std::size_t i, std::size_t j) {
    const long double d1 = s1f[j] - s1f[i];
    return (s2f[j] - s2f[i]) - d1 * d1 / static_cast<long double>(j - i);
  };
  const auto cost_x = [&](std::size_t i, std::size_t j) {
    const BigInt d1 = s1[j] - s1[i];
    return Rational(BigInt(s2[j] - s2[i])) -
           Rational(BigInt(d1 * d1), BigInt(static_cast<unsigned long>(j - i)));
  };

  // Candidates are screened in long double; every split point within
  // `tolerance` of the float minimum is then compared exactly. The tolerance
  // is orders of magnitude above the accumulated rounding error.
  const long double tolerance = std::max<long double>(1e-15L * s2f[count], 1e-9L);

  // best[g][i]: optimal cost of splitting intervals i.. into g groups.
  std::vector<std::vector<long double>> best_f(n + 1);
  std::vector<std::vector<Rational>> best_x(n + 1);
  std::vector<std::vector<std::size_t>> next_cut(n + 1);
  for (std::uint32_t g = 1; g <= n; ++g) {
    const std::size_t last = count - g;  // i ranges 0..last
    best_f[g].resize(last + 1);
    best_x[g].resize(last + 1);
    next_cut[g].resize(last + 1, count);
    for (std::size_t i = 0; i <= last; ++i) {
      if (g == 1) {
        best_f[g][i] = cost_f(i, count);
        best_x[g][i] = cost_x(i, count);
        continue;
      }
      long double lowest = std::numeric_limits<long double>::infinity();
      for (std::size_t j = i + 1; j <= count - g + 1; ++j)
        lowest = std::min(lowest, cost_f(i, j) + best_f[g - 1][j]);
      bool found = false;
      for (std::size_t j = i + 1; j <= count - g + 1; ++j) {
        const long double candidate = cost_f(i, j) + best_f[g - 1][j];
        if (candidate > lowest + tolerance) continue;
        Rational exact = cost_x(i, j) + best_x[g - 1][j];
        if (!found || exact < best_x[g][i]) {
          best_x[g][i] = std::move(exact);
          best_f[g][i] = candidate;
          next_cut[g][i] = j;
          found = true;
        }
      }
    }
  }

  Partition partition{level, {}};
  std::size_t start = 0;
  for (std::uint32_t g = n; g > 1; --g) {
    start = next_cut[g][start];
    partition.cuts.push_back(start);
  }

  const Rational scale(BigInt(1), BigInt(2) * ipow(3, static_cast<unsigned long>(level)));
  const Rational unit = pow2(-level);
  const Rational inner = Rational(BigInt(1), ipow(9, static_cast<unsigned long>(level))) * variance();
  std::vector<ConstraintPoint> points;
  Rational value;
  std::size_t lo = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t hi = g + 1 < n ? partition.cuts[g] : count;
    const Rational size(static_cast<long>(hi - lo));
    const Rational first = Rational(BigInt(s1[hi] - s1[lo])) * scale;
    const Rational second = Rational(BigInt(s2[hi] - s2[lo])) * square(scale);
    ConstraintPoint p = u_inverse(n, first / size);
    // sum over the group's intervals of 9^-k V + (a_m - x)^2 + y^2
    value += unit * (size * inner + second - Rational(2) * p.x() * first +
                     size * (square(p.x()) + square(p.y())));
    points.push_back(std::move(p));
    lo = hi;
  }
  return DpResult{PointSet(n, std::move(points)), std::move(value), std::move(partition)};
}

}  // namespace cantorq
