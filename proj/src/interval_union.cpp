#include "interval_union.hpp"

#include <algorithm>
#include <cmath>

namespace ghlab {

IntervalUnion IntervalUnion::from_intervals(std::vector<Interval> intervals) {
  if (intervals.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "interval union must be nonempty");
  }
  for (const auto& [lo, hi] : intervals) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw Error(ErrorCode::invalid_argument,
                  "each interval needs finite endpoints with lo <= hi");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  merged.push_back(intervals.front());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    // Touching closed intervals form one interval.
    if (intervals[i].lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, intervals[i].hi);
    } else {
      merged.push_back(intervals[i]);
    }
  }
  IntervalUnion out;
  out.intervals_ = std::move(merged);
  return out;
}

double IntervalUnion::distance_to(double x) const {
  // First interval whose right end reaches x.
  auto it = std::lower_bound(
      intervals_.begin(), intervals_.end(), x,
      [](const Interval& iv, double v) { return iv.hi < v; });
  double best = std::numeric_limits<double>::infinity();
  if (it != intervals_.end()) {
    best = std::max(it->lo - x, 0.0);
  }
  if (it != intervals_.begin()) {
    best = std::min(best, x - std::prev(it)->hi);
  }
  return best;
}

bool IntervalUnion::contains_set(const IntervalUnion& other) const {
  for (const auto& iv : other.intervals_) {
    // A connected interval is covered iff one of our intervals spans it.
    auto it = std::lower_bound(
        intervals_.begin(), intervals_.end(), iv.lo,
        [](const Interval& mine, double v) { return mine.hi < v; });
    if (it == intervals_.end() || it->lo > iv.lo || it->hi < iv.hi) {
      return false;
    }
  }
  return true;
}

IntervalUnion IntervalUnion::neighborhood(double r) const {
  if (r < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "neighborhood radius must be >= 0");
  }
  std::vector<Interval> grown;
  grown.reserve(intervals_.size());
  for (const auto& [lo, hi] : intervals_) {
    grown.push_back({lo - r, hi + r});
  }
  return from_intervals(std::move(grown));
}

std::optional<IntervalUnion> IntervalUnion::intersect(
    const IntervalUnion& other) const {
  std::vector<Interval> out;
  std::size_t a = 0, b = 0;
  while (a < intervals_.size() && b < other.intervals_.size()) {
    const Interval& x = intervals_[a];
    const Interval& y = other.intervals_[b];
    const double lo = std::max(x.lo, y.lo);
    const double hi = std::min(x.hi, y.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (x.hi < y.hi) {
      ++a;
    } else {
      ++b;
    }
  }
  if (out.empty()) return std::nullopt;
  return from_intervals(std::move(out));
}

FiniteMetricSpace IntervalUnion::discretize(double step,
                                            int max_points) const {
  if (!(step > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "step must be > 0");
  }
  std::vector<double> pts;
  for (const auto& [lo, hi] : intervals_) {
    pts.push_back(lo);
    for (double x = lo + step; x < hi; x += step) {
      pts.push_back(x);
      if (static_cast<int>(pts.size()) > max_points) {
        throw Error(ErrorCode::budget_exceeded,
                    "discretization exceeds the point budget");
      }
    }
    if (hi > lo) pts.push_back(hi);
    if (static_cast<int>(pts.size()) > max_points) {
      throw Error(ErrorCode::budget_exceeded,
                  "discretization exceeds the point budget");
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = pts[j] - pts[i];
    }
  }
  return FiniteMetricSpace::validate(m, 0.0);
}

double directed_deviation(const IntervalUnion& from, const IntervalUnion& to) {
  double worst = 0.0;
  auto consider = [&](double x) { worst = std::max(worst, to.distance_to(x)); };
  for (const auto& [lo, hi] : from.intervals()) {
    consider(lo);
    consider(hi);
  }
  const auto& tv = to.intervals();
  for (std::size_t g = 1; g < tv.size(); ++g) {
    const double mid = (tv[g - 1].hi + tv[g].lo) / 2.0;
    for (const auto& [lo, hi] : from.intervals()) {
      consider(std::clamp(mid, lo, hi));
    }
  }
  return worst;
}

double hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b) {
  return std::max(directed_deviation(a, b), directed_deviation(b, a));
}

IntervalUnion c_s(const IntervalUnion& a, const IntervalUnion& b, double s) {
  const double r = hausdorff_distance(a, b);
  if (!(s >= 0.0 && s <= r)) {
    throw Error(ErrorCode::precondition,
                "s must lie in [0, d_H(A, B)]");
  }
  auto result = a.neighborhood(s).intersect(b.neighborhood(r - s));
  if (!result) {
    // Cannot happen for subsets of the line: both neighborhoods contain
    // either set once s <= r.
    throw Error(ErrorCode::invalid_argument,
                "neighborhood intersection unexpectedly empty");
  }
  return *result;
}

}  // namespace ghlab
