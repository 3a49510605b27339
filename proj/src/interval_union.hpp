#pragma once

#include <optional>
#include <vector>

#include "metric_space.hpp"

namespace ghlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
};

/// A nonempty compact subset of the real line stored as a normalized finite
/// union of closed intervals: sorted, with strict gaps between consecutive
/// intervals (touching intervals merge). Points are degenerate intervals.
class IntervalUnion {
 public:
  static IntervalUnion from_intervals(std::vector<Interval> intervals);
  static IntervalUnion point(double x) { return from_intervals({{x, x}}); }
  static IntervalUnion segment(double lo, double hi) {
    return from_intervals({{lo, hi}});
  }

  const std::vector<Interval>& intervals() const { return intervals_; }

  double min() const { return intervals_.front().lo; }
  double max() const { return intervals_.back().hi; }
  double diameter() const { return max() - min(); }

  /// Distance from a real point to the set (0 inside).
  double distance_to(double x) const;

  bool contains(double x) const { return distance_to(x) == 0.0; }

  /// True iff other is a subset of this.
  bool contains_set(const IntervalUnion& other) const;

  /// Closed r-neighborhood: every [a,b] becomes [a-r, b+r], then normalized.
  IntervalUnion neighborhood(double r) const;

  /// Empty intersections yield nullopt.
  std::optional<IntervalUnion> intersect(const IntervalUnion& other) const;

  /// Interval endpoints plus a uniform step grid inside each interval, with
  /// the induced metric from the line. The result is within Hausdorff
  /// distance step/2 of the set. Throws budget_exceeded past max_points.
  FiniteMetricSpace discretize(double step, int max_points = 128) const;

  bool operator==(const IntervalUnion&) const = default;

 private:
  IntervalUnion() = default;
  std::vector<Interval> intervals_;
};

/// Largest distance from a point of `from` to the set `to`. Exact: the
/// distance-to-set function is piecewise linear, so the maximum over `from`
/// is attained at an interval endpoint of `from` or at the point of `from`
/// nearest to a gap midpoint of `to`.
double directed_deviation(const IntervalUnion& from, const IntervalUnion& to);

double hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b);

/// C_s(A, B) = B_s(A) intersect B_{r-s}(B) with r = d_H(A, B). Requires
/// 0 <= s <= r; equals A at s = 0 and B at s = r.
IntervalUnion c_s(const IntervalUnion& a, const IntervalUnion& b, double s);

}  // namespace ghlab
