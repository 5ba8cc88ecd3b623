// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is nonzero if any criterion fails.

#include "cantorq/cantorq.hpp"

#include "../support/generators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace cantorq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<Outcome()> body;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome one_point() {
  const PointSet alpha = build_alpha(1, {});
  if (alpha.size() != 1) return fail("expected one point");
  const auto& p = alpha.points()[0];
  if (p.x() != Rational(-1, 4) || p.y() != Rational(3, 4)) return fail("point " + p.x().to_string());
  const Rational v = distortion_closed_form(1, {}).total;
  if (v != Rational(5, 4)) return fail("V_1 = " + v.to_string());
  if (exact_distortion(alpha) != v) return fail("evaluator disagrees");
  return {true, "alpha_1 = (-1/4, 3/4), V_1 = 5/4"};
}

Outcome powers_of_two() {
  for (int level = 1; level <= 12; ++level) {
    const auto n = static_cast<std::uint32_t>(1u << level);
    const Rational expected = (pow2(3 - 2 * level) + pow2(3 - level) + pow(Rational(9), -level) +
                               Rational(3)) * Rational(1, 16);
    if (distortion_closed_form(n, {}).total != expected)
      return fail("mismatch at level " + std::to_string(level));
  }
  return {true, "levels 1..12"};
}

Outcome decomposition() {
  for (std::uint32_t n = 1; n <= 64; ++n) {
    const auto split = canonical_split_set(n);
    const auto report = distortion_closed_form(n, split);
    const auto base = unconstrained_baseline(n, split);
    if (report.total != base.error + report.a_term) return fail("n = " + std::to_string(n));
    if (report.total != exact_distortion(build_alpha(n, split)))
      return fail("evaluator disagrees at n = " + std::to_string(n));
  }
  return {true, "n = 1..64"};
}

Outcome split_independence() {
  std::size_t sets = 0;
  for (std::uint32_t n = 1; n <= 32; ++n) {
    const Rational expected = optimal_error(n);
    bool ok = true;
    BigInt seen = 0;
    for_each_split_set(n, [&](const std::vector<Word>& split) {
      ++seen;
      if (distortion_closed_form(n, split).total != expected) ok = false;
    });
    if (!ok) return fail("value depends on the split set at n = " + std::to_string(n));
    if (seen != count_optimal_sets(n)) return fail("enumeration count at n = " + std::to_string(n));
    sets += seen.get_ui();
  }
  return {true, std::to_string(sets) + " split sets, n = 1..32"};
}

Outcome dp_agreement() {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    const auto split = canonical_split_set(n);
    const DpResult dp = dp_optimal(n, 10);
    if (dp.value != distortion_closed_form(n, split).total)
      return fail("value at n = " + std::to_string(n));
    if (dp.points.abscissas() != build_alpha(n, split).abscissas())
      return fail("points at n = " + std::to_string(n));
  }
  return {true, "n = 1..16 at level 10"};
}

Outcome lloyd() {
  for (std::uint32_t n = 1; n <= 32; ++n) {
    const PointSet alpha = build_alpha(n, canonical_split_set(n));
    if (lloyd_step(alpha).points() != alpha.points()) return fail("moved at n = " + std::to_string(n));
  }
  testing::RationalGen gen(2024);
  int redraws = 0;
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const Rational optimum = dp_optimal(n, 10).value;
    const auto [lo, hi] = feasible_window(n);
    for (int run = 0; run < 100;) {
      std::vector<Rational> xs;
      while (xs.size() < n) {
        const Rational x = gen.in(lo, hi, 1000);
        if (x > lo && x < hi && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      std::vector<ConstraintPoint> points;
      for (const auto& x : xs) points.emplace_back(n, x);
      LloydRun result{PointSet(n, points), {}, 0, false};
      try {
        result = lloyd_iterate(PointSet(n, std::move(points)), 500);
      } catch (const EmptyCell&) {
        ++redraws;  // a cell fell into a gap of the Cantor set; draw again
        continue;
      }
      ++run;
      for (std::size_t i = 0; i < result.distortions.size(); ++i) {
        if (result.distortions[i] < optimum) return fail("below the optimum at n = " + std::to_string(n));
        if (i > 0 && result.distortions[i] > result.distortions[i - 1])
          return fail("distortion increased at n = " + std::to_string(n));
      }
    }
  }
  return {true, "fixed points n = 1..32; 400 random runs, " + std::to_string(redraws) +
                    " starts redrawn after an empty cell"};
}

Outcome dimension() {
  const auto seq = dimension_sequence(30);
  for (int level = 5; level <= 30; ++level)
    if (!(*seq[level - 1].dim_estimate > *seq[level - 2].dim_estimate))
      return fail("not increasing at level " + std::to_string(level));
  const double at25 = *seq[24].dim_estimate;
  if (at25 < 1.9) return fail("level 25 estimate " + std::to_string(at25));
  for (std::uint32_t n = 2; n <= 256; ++n) {
    const int level = level_of(n);
    const Rational v = distortion_closed_form(n, canonical_split_set(n)).total;
    if (!(optimal_error_power_of_two(level + 1) <= v && v <= optimal_error_power_of_two(level)))
      return fail("sandwich fails at n = " + std::to_string(n));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "estimate at level 25 = %.6f; sandwich n = 2..256", at25);
  return {true, buf};
}

Outcome coefficient() {
  const auto seq = coefficient_sequence(30);
  for (int level = 3; level <= 30; ++level)
    if (!(seq[level - 1].coeff_exact > seq[level - 2].coeff_exact))
      return fail("not increasing at level " + std::to_string(level));
  if (!(seq[29].coeff_exact > Rational(1000000))) return fail("level 30 below 1e6");
  for (int level = 25; level <= 30; ++level) {
    const double ratio = (seq[level - 1].coeff_exact / seq[level - 2].coeff_exact).to_double();
    if (ratio < 1.98 || ratio > 2.02) return fail("ratio off at level " + std::to_string(level));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "level 30 coefficient = %.6g", seq[29].coeff_estimate);
  return {true, buf};
}

Outcome moment_sums() {
  for (int k = 0; k <= 20; ++k) {
    if (moment_sum(k, 1) != ipow(6, k)) return fail("m = 1 at k = " + std::to_string(k));
    // moment_sum checks the m = 2 enumeration against its closed form internally
    if (moment_sum(k, 2) != moment_sum_closed_form(k, 2)) return fail("m = 2 at k = " + std::to_string(k));
  }
  if (moment_sum(2, 2) != 484) return fail("k = 2, m = 2");
  return {true, "k = 0..20, m = 1 and 2"};
}

Outcome voronoi() {
  std::size_t checked = 0;
  for (std::uint32_t n = 2; n <= 16; ++n) {
    bool ok = true;
    for_each_split_set(n, [&](const std::vector<Word>& split) {
      const PointSet alpha = build_alpha(n, split);
      const auto constrained = cell_moments(planar_boundaries(alpha.points()));
      const auto means = unconstrained_baseline(n, split).means;
      std::vector<Rational> midpoints;
      for (std::size_t i = 1; i < means.size(); ++i)
        midpoints.push_back((means[i - 1] + means[i]) * Rational(1, 2));
      const auto counted = cell_masses_by_counting(midpoints, level_of(n) + 2);
      for (std::size_t i = 0; i < counted.size(); ++i)
        if (constrained[i].mass != counted[i]) ok = false;
      ++checked;
    });
    if (!ok) return fail("cell masses differ at n = " + std::to_string(n));
  }
  return {true, std::to_string(checked) + " codebooks, n = 2..16"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "optimal one-point set", 1.0, one_point},
      {"AC2", "closed form at n = 2^l", 1.0, powers_of_two},
      {"AC3", "baseline plus A decomposition", 1.0, decomposition},
      {"AC4", "independence from the split set", 30.0, split_independence},
      {"AC5", "agreement with the partition DP", 60.0, dp_agreement},
      {"AC6", "Lloyd fixed points and descent", 60.0, lloyd},
      {"AC7", "dimension estimates", 5.0, dimension},
      {"AC8", "coefficient divergence", 5.0, coefficient},
      {"AC9", "moment sums", 5.0, moment_sums},
      {"AC10", "Voronoi mass preservation", 10.0, voronoi},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && elapsed > c.budget_s) outcome = fail("over budget; " + outcome.detail);
    if (!outcome.ok) ++failures;
    std::printf("%s %-5s %-34s %8.3fs / %gs  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title,
                elapsed, c.budget_s, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
