#pragma once

// Independent verification machinery: an exact distortion evaluator for
// arbitrary point sets on S_n, the constrained Lloyd map, and a dynamic
// program over partitions of level-k basic intervals.
//
// Voronoi cells of points on one constraint S_n are handled through their
// projections: U_n preserves order, so the cell boundary between consecutive
// points lies at the midpoint of their U_n images on the real line.

#include "cantorq/constraint_geometry.hpp"
#include "cantorq/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cantorq {

inline constexpr int kDefaultMaxRefineDepth = 40;

/// int x^m dP over some set, m = 0, 1, 2.
struct Moments {
  Rational mass;
  Rational first;
  Rational second;

  friend Moments operator-(const Moments& a, const Moments& b) {
    return {a.mass - b.mass, a.first - b.first, a.second - b.second};
  }
  friend bool operator==(const Moments&, const Moments&) = default;
};

/// Moments of P restricted to [0, b] (equivalently (-inf, b]; P has no atoms).
///
/// Walks the ternary address of b one level at a time, using
///   b < 1/3:  int_[0,b] f dP = 1/2 int_[0,3b] f(T1 y) dP(y)
///   b > 2/3:  int_[0,b] f dP = int_J1 f dP + 1/2 int_[0,3b-2] f(T2 y) dP(y)
/// until b leaves the Cantor set (lands in a gap or at an endpoint) or the
/// address repeats; a repeating address is closed by solving the resulting
/// linear fixed-point equation. Every rational b eventually does one or the
/// other. Throws DepthExceeded if neither happens within `max_depth` levels.
Moments cumulative_moments(const Rational& b, int max_depth = kDefaultMaxRefineDepth);

/// Boundaries between the projected Voronoi cells of `points` (all on one
/// S_n, sorted by abscissa, distinct): midpoints of consecutive U_n images.
std::vector<Rational> projected_boundaries(std::span<const ConstraintPoint> points);

/// The same boundaries obtained from planar geometry: the x where
/// rho(x, p_i) = rho(x, p_{i+1}) for consecutive points. Works for any points
/// with distinct abscissas, on any constraints.
std::vector<Rational> planar_boundaries(std::span<const ConstraintPoint> points);

/// Moments of P over each cell of the real line cut at `boundaries`
/// (increasing). Returns boundaries.size() + 1 entries.
std::vector<Moments> cell_moments(std::span<const Rational> boundaries,
                                  int max_depth = kDefaultMaxRefineDepth);

/// P-mass of each cell, counted from the 2^level basic intervals of that
/// level. Throws InvalidArgument if a boundary falls strictly inside a basic
/// interval (the cell masses are then not determined at this level).
std::vector<Rational> cell_masses_by_counting(std::span<const Rational> boundaries, int level);

/// V(P; points) = int min_p rho(x, p) dP for points on S_n. Duplicate
/// abscissas collapse to one point; order does not matter.
Rational exact_distortion(std::uint32_t n, std::span<const ConstraintPoint> points,
                          int max_depth = kDefaultMaxRefineDepth);
Rational exact_distortion(const PointSet& points, int max_depth = kDefaultMaxRefineDepth);

/// One constrained Lloyd step: each point moves to U_n^-1 of the conditional
/// mean of X over its projected Voronoi cell. Throws EmptyCell if some cell
/// has zero mass.
PointSet lloyd_step(const PointSet& points, int max_depth = kDefaultMaxRefineDepth);

struct LloydRun {
  PointSet final_points;
  std::vector<Rational> distortions;  // distortion before each step, then of the result
  int steps = 0;
  bool converged = false;  // reached an exact fixed point
};

/// Iterates lloyd_step until an exact fixed point or `max_steps`.
LloydRun lloyd_iterate(const PointSet& start, int max_steps,
                       int max_depth = kDefaultMaxRefineDepth);

/// Consecutive grouping of the 2^level level-k basic intervals: group g holds
/// intervals [cuts[g-1], cuts[g]) with cuts[-1] = 0 and cuts[n-1] = 2^level.
struct Partition {
  int level = 0;
  std::vector<std::size_t> cuts;  // n - 1 increasing indices in 1 .. 2^level - 1
};

struct DpResult {
  PointSet points;
  Rational value;
  Partition partition;
};

/// Exact optimum over all partitions of the level-k basic intervals into n
/// consecutive groups, each served by U_n^-1 of its conditional mean. Among
/// equal optima the lexicographically smallest cut vector wins.
DpResult dp_optimal(std::uint32_t n, int level);

}  // namespace cantorq
