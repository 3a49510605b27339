#pragma once

#include <nlohmann/json.hpp>

#include "interval_union.hpp"

namespace ghlab {

/// Measurements for the segment-versus-endpoints pair A = [0, 2r],
/// B = {0, 2r} whose Hausdorff geodesic C_s leaves the ball of radius r
/// around the one-point space.
struct CounterexampleReport {
  double r = 0.0;
  double dh_ab = 0.0;  // equals r

  // d_GH(A, B) certification: upper bound d_H(A, B); lower bounds from
  // exact solves against discretizations of A (each entry is
  // {step, certified lower bound}, the bound being r - step).
  double gh_ab_upper = 0.0;
  std::vector<std::pair<double, double>> gh_ab_lower_bounds;

  struct Sample {
    double s = 0.0;
    double dh_to_a = 0.0;  // equals s
    double dh_to_b = 0.0;  // equals r - s
    double diam = 0.0;
  };
  std::vector<Sample> samples;

  /// Sum of d_H over consecutive grid sets; equals r exactly.
  double additivity_sum = 0.0;

  IntervalUnion c_mid = IntervalUnion::point(0.0);
  double diam_mid = 0.0;            // 3r
  double gh_mid_to_point = 0.0;     // 3r/2
  double gh_mid_discretized = 0.0;  // cross-check via the exact solver
  double violation_margin = 0.0;    // 3r/2 - r

  nlohmann::json to_json() const;
};

/// Computes the report on a strictly increasing dyadic s-grid of `grid`
/// points from 0 to r (dyadic so that every value is exact when r is).
CounterexampleReport theorem2_report(double r, int grid);

}  // namespace ghlab
